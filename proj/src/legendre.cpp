#include "zetalab/legendre.hpp"

#include <map>
#include <mutex>

namespace zetalab {

XReal legendre_P(int n, const XReal &x) {
    if (n < 0) throw std::invalid_argument("legendre_P: n >= 0 required");
    XReal p0 = 1, p1 = x;
    if (n == 0) return p0;
    for (int k = 2; k <= n; ++k) {
        XReal p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

static XReal legendre_P_deriv(int n, const XReal &x) {
    // (x^2-1) P_n'(x) = n (x P_n(x) - P_{n-1}(x))
    return n * (x * legendre_P(n, x) - legendre_P(n - 1, x)) / (x * x - 1);
}

const QuadRule &gauss_legendre(int order) {
    static std::map<int, QuadRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    QuadRule r;
    XReal pi = const_pi();
    XReal eps = pow_int(XReal(10), -(kWorkingDigits - 2));
    for (int k = 1; 2 * k <= order + 1; ++k) {
        // Newton from the Chebyshev-like initial guess
        XReal x = cos(pi * (4 * k - 1) / (4 * order + 2));
        for (int it2 = 0; it2 < 200; ++it2) {
            XReal f = legendre_P(order, x);
            XReal d = legendre_P_deriv(order, x);
            XReal dx = f / d;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        XReal d = legendre_P_deriv(order, x);
        XReal w = 2 / ((1 - x * x) * d * d);
        r.nodes.push_back(-x);
        r.weights.push_back(w);
    }
    // mirror to the positive half (skip duplicated center for odd order)
    for (int j = (int)r.nodes.size() - 1 - (order % 2); j >= 0; --j) {
        r.nodes.push_back(-r.nodes[j]);
        r.weights.push_back(r.weights[j]);
    }
    return cache.emplace(order, std::move(r)).first->second;
}

// Pair-valued integrand in the panel variable u: receives (u, 1-u), both to
// full precision.
using PairFn = std::function<XReal(const XReal &, const XReal &)>;

static XReal gl_panel(const PairFn &g, const XReal &a, const XReal &b,
                      bool from_upper, int order) {
    // Panel [a,b] measured from 0 (from_upper=false: variable is u) or from 1
    // (from_upper=true: variable is w = 1-u).
    const QuadRule &r = gauss_legendre(order);
    XReal mid = (a + b) / 2, half = (b - a) / 2, s = 0;
    for (size_t j = 0; j < r.nodes.size(); ++j) {
        XReal p = mid + half * r.nodes[j];
        s += r.weights[j] * (from_upper ? g(1 - p, p) : g(p, 1 - p));
    }
    return s * half;
}

// Dyadic packing depth: 1-2^-K must stay exactly representable (working
// precision is ~150 bits), and the dropped stubs [0,2^-K], [1-2^-K,1] must be
// negligible for any integrable singularity the substitution tags leave over.
static constexpr int kPanelDepth = 140;

// Panels over [0,1] packed dyadically toward both endpoints.
static XReal dyadic01(const PairFn &g, int order, bool skip_lower = false) {
    XReal s = 0;
    XReal lo = pow_int(XReal(2), -kPanelDepth);
    for (int k = kPanelDepth; k >= 2; --k) {
        XReal hi = lo * 2;
        if (!skip_lower) s += gl_panel(g, lo, hi, false, order);
        s += gl_panel(g, lo, hi, true, order);
        lo = hi;
    }
    return s;
}

static XReal integrate_once(const Integrand &f, EndpointSub sub, int order) {
    switch (sub) {
    case EndpointSub::None:
        return dyadic01(f, order);
    case EndpointSub::SqrtLower:
        // x = u^2, omx = (1-u)(1+u)
        return dyadic01(
            [&](const XReal &u, const XReal &omu) {
                return 2 * u * f(u * u, omu * (1 + u));
            },
            order);
    case EndpointSub::SqrtUpper:
        // x = (1-u)(1+u), omx = u^2
        return dyadic01(
            [&](const XReal &u, const XReal &omu) {
                return 2 * u * f(omu * (1 + u), u * u);
            },
            order);
    case EndpointSub::LogLower: {
        // [0,1/2] via x = e^{-v}; tail truncated where e^{-v} underflows
        XReal l2 = const_log2();
        XReal V = XReal(kWorkingDigits * 3 + 30);
        XReal s = 0, a = l2;
        const QuadRule &r = gauss_legendre(order);
        while (a < V) {
            XReal b = a + 3;
            if (b > V) b = V;
            XReal mid = (a + b) / 2, half = (b - a) / 2, ps = 0;
            for (size_t j = 0; j < r.nodes.size(); ++j) {
                XReal x = exp(-(mid + half * r.nodes[j]));
                ps += r.weights[j] * x * f(x, 1 - x);
            }
            s += ps * half;
            a = b;
        }
        // [1/2,1] with dyadic packing toward 1
        return s + dyadic01(f, order, /*skip_lower=*/true);
    }
    }
    throw std::logic_error("integrate: bad substitution tag");
}

XReal integrate(const Integrand &f, EndpointSub sub, XReal *err) {
    XReal v1 = integrate_once(f, sub, 32);
    XReal v2 = integrate_once(f, sub, 44);
    if (err) *err = abs(v1 - v2);
    return v2;
}

XReal fl_coeff_logm(int n, int m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("fl_coeff_logm: n, m >= 1 required");
    Rat s = 0;
    for (int k = 1; k <= m; ++k)
        s += zeta_n(Composition(k - 1, 1), n - 1) *
             zeta_star_n(Composition(m - k, 1), n + 1);
    Rat c = Rat(factorial(m)) / (Rat(n) * (n + 1));
    if ((m + n) % 2) c = -c;
    return to_xreal(c * s);
}

XReal fl_coeff_logm_sqrt(int n, int m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("fl_coeff_logm_sqrt: n, m >= 0 required");
    Rat s = 0;
    for (int k = 0; k <= m; ++k)
        s += t_n(Composition(k, 1), n) * t_star_n(Composition(m - k, 1), n + 1);
    Rat c = Rat(factorial(m)) * rat_pow2(m + 1) / Rat(2 * n + 1);
    if ((m + n) % 2) c = -c;
    return to_xreal(c * s);
}

XReal deriv_logm(int n, int m, const XReal &x) {
    if (x <= 0) throw std::invalid_argument("deriv_logm: x > 0 required");
    XReal lx = log(x);
    if (n == 0) return pow_int(lx, m);
    XReal s = 0;
    for (int k = 1; k <= m; ++k) {
        Rat c = Rat(factorial(k)) * Rat(binomial(m, k)) *
                zeta_n(Composition(k - 1, 1), n - 1);
        if (k % 2) c = -c;
        s += to_xreal(c) * pow_int(lx, m - k);
    }
    XReal out = to_xreal(Rat(factorial(n - 1))) * s / pow_int(x, n);
    return (n % 2) ? -out : out;
}

XReal deriv_logm_sqrt(int n, int m, const XReal &x) {
    if (x <= 0) throw std::invalid_argument("deriv_logm_sqrt: x > 0 required");
    XReal lx = log(x);
    XReal s = 0;
    for (int k = 0; k <= m; ++k) {
        Rat c = Rat(factorial(k)) * Rat(binomial(m, k)) * rat_pow2(k) *
                t_n(Composition(k, 1), n);
        if (k % 2) c = -c;
        s += to_xreal(c) * pow_int(lx, m - k);
    }
    Rat lead = Rat(factorial(2 * n)) / (Rat(factorial(n)) * rat_pow2(2 * n));
    if (n % 2) lead = -lead;
    return to_xreal(lead) * s / (pow_int(x, n) * sqrt(x));
}

XReal deriv_logm_alpha(int n, int m, const Rat &alpha, const XReal &x) {
    if (x <= 0) throw std::invalid_argument("deriv_logm_alpha: x > 0 required");
    if (alpha <= 0 && denominator(alpha) == 1)
        throw std::invalid_argument("deriv_logm_alpha: alpha is a nonpositive integer");
    XReal lx = log(x);
    XReal s = 0;
    for (int k = 0; k <= m; ++k) {
        Rat c = Rat(factorial(k)) * Rat(binomial(m, k)) *
                zeta_n_alpha(Composition(k, 1), n, alpha);
        if (k % 2) c = -c;
        s += to_xreal(c) * pow_int(lx, m - k);
    }
    Rat rising = 1; // (alpha)_n
    for (int j = 0; j < n; ++j) rising *= (alpha + j);
    if (n % 2) rising = -rising;
    return to_xreal(rising) * s / (pow_int(x, n) * pow(x, to_xreal(alpha)));
}

static XReal agm(XReal a, XReal b) {
    // relative tolerance just above the rounding floor; the quadratic
    // convergence stalls there, so also cap the iteration count
    XReal eps = pow_int(XReal(10), -(kWorkingDigits - 2));
    for (int it = 0; it < 80 && abs(a - b) > eps * a; ++it) {
        XReal an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return (a + b) / 2;
}

XReal elliptic_K(const XReal &x) {
    if (x < 0 || x >= 1) throw std::invalid_argument("elliptic_K: 0 <= x < 1");
    return const_pi() / (2 * agm(XReal(1), sqrt(1 - x)));
}

XReal elliptic_Kc(const XReal &x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("elliptic_Kc: 0 < x <= 1");
    return const_pi() / (2 * agm(XReal(1), sqrt(x)));
}

} // namespace zetalab
