#pragma once
// Legendre polynomials, Fourier-Legendre coefficients of log powers, the
// complete elliptic integral K, and the Gauss-Legendre quadrature engine
// used by every integral-route verification.
#include "zetalab/finite_sums.hpp"

#include <functional>

namespace zetalab {

XReal legendre_P(int n, const XReal &x);

// Gauss-Legendre nodes/weights on [-1,1], cached per order.
struct QuadRule {
    std::vector<XReal> nodes, weights;
};
const QuadRule &gauss_legendre(int order);

// How to desingularize the endpoints of an integral over [0,1].
enum class EndpointSub {
    None,      // integrand bounded (log-type blowup at the ends tolerated)
    SqrtLower, // x = u^2   handles x^{-1/2} at 0
    SqrtUpper, // x = 1-u^2 handles (1-x)^{-1/2} at 1
    LogLower,  // x = e^{-v} on [0,1/2]: handles heavy log^m x concentration at 0
};

// Integrand over [0,1] receiving both x and 1-x, each computed to full
// precision (panels near 1 are parametrized by 1-x, so the difference never
// cancels). Singular factors at 1 must be written in terms of omx.
using Integrand = std::function<XReal(const XReal &x, const XReal &omx)>;

// Composite Gauss-Legendre over [0,1] with dyadic panels toward both
// endpoints; error estimated by re-evaluating at a higher order.
XReal integrate(const Integrand &f, EndpointSub sub, XReal *err = nullptr);

// int_0^1 P_n(2x-1) log^m x dx
//   = (-1)^{m+n} m!/(n(n+1)) sum_{k=1}^m zeta_{n-1}(1_{k-1}) zeta*_{n+1}(1_{m-k})
XReal fl_coeff_logm(int n, int m);

// int_0^1 P_n(2x-1) log^m x / sqrt(x) dx
//   = (-1)^{n+m} m! 2^{m+1}/(2n+1) sum_{k=0}^m t_n(1_k) t*_{n+1}(1_{m-k})
XReal fl_coeff_logm_sqrt(int n, int m);

// d^n/dx^n log^m x, d^n/dx^n (log^m x / sqrt x), d^n/dx^n (log^m x / x^alpha)
// via the closed harmonic-sum forms.
XReal deriv_logm(int n, int m, const XReal &x);
XReal deriv_logm_sqrt(int n, int m, const XReal &x);
XReal deriv_logm_alpha(int n, int m, const Rat &alpha, const XReal &x);

// K(x) = int_0^{pi/2} dt/sqrt(1 - x sin^2 t), by AGM. Convention: x is the
// series variable, K(x) = (pi/2) sum a_n^2 x^n (not the modulus k).
XReal elliptic_K(const XReal &x);
// K(1-x) computed from x directly (stable when the complement is tiny).
XReal elliptic_Kc(const XReal &x);

} // namespace zetalab
