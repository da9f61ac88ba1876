#pragma once
// Exact finite multiple (t-)harmonic sums, star variants, parametric and
// partial-x versions, Bell polynomials, and coefficient sequences.
#include "zetalab/composition.hpp"
#include "zetalab/rational.hpp"

#include <vector>

namespace zetalab {

// Nested sums over n >= n_1 > n_2 > ... (strict) or >= ... (star), with
// denominators n_j^{k_j} (zeta kind) or (2n_j-1)^{k_j} (t kind).
// Convention: value 0 when n < depth (strict) resp. n < 1 (star, nonempty);
// empty composition gives 1 for every n >= 0.
Rat zeta_n(const Composition &c, long n);
Rat zeta_star_n(const Composition &c, long n);
Rat t_n(const Composition &c, long n);
Rat t_star_n(const Composition &c, long n);

// Twisted versions: numerator factor twist_j^{n_j} per index.
GaussRat zeta_n_tw(const TComp &c, long n, bool star = false);
GaussRat t_n_tw(const TComp &c, long n, bool star = false);

// Parametric sums with denominators (n_j + alpha - 1)^{k_j}.
Rat zeta_n_alpha(const Composition &c, long n, const Rat &alpha,
                 bool star = false);

// Partial sums with x^{n_r} (zeta*) or x^{2 n_r - 1} (t*) on the innermost
// index, evaluated in extended precision.
XReal zeta_star_n_x(const Composition &c, long n, const XReal &x);
XReal t_star_n_x(const Composition &c, long n, const XReal &x);

// Exponential partial Bell polynomial B_{n,k}(x_1..x_{n-k+1}) by the
// recurrence B_{n,k} = sum_i C(n-1,i-1) x_i B_{n-i,k-1}.
Rat bell_partial(int n, int k, const std::vector<Rat> &xs);

// a_n(k) = 2^k/4^n C(2n,n) t_n(1_k).
Rat a_coeff(long n, int k);
// Same sequence as a convolution of harmonic sums against central binomials.
Rat a_coeff_convolution(long n, int k);
// Same sequence by the recurrence a_n(k) = ((-1)^{k-1}/k) sum_i (-1)^i 2^{k-i} a_n(i) t_n(k-i).
Rat a_coeff_recurrence(long n, int k);

// A_m(n)/B_m(n) pairs of the two Faa-di-Bruno lemmas; star=false gives the
// barred (strict-chain) variant.
struct ABPair {
    std::vector<GaussRat> A, B; // index 0..m
};
ABPair AB_sequences(const std::vector<GaussRat> &xs, int m, bool barred);

// b_0 = 1, b_j = -(1/j) sum_{l=1}^{j} 2^l b_{j-l} zeta(bar l).
std::vector<XReal> b_sequence(int jmax);

Rat central_binomial(long n); // C(2n,n)/4^n
Rat beta_half(long n);        // B(1/2, n+1) = 2*4^n/((2n+1) C(2n,n))

// Exact partial fractions of 1/(n^p (n+1)^q (2n+1)):
//   sum_{i=1}^p a_i/n^i + sum_{j=1}^q b_j/(n+1)^j + e/(2n+1)
struct PartialFrac {
    std::vector<Rat> a; // a[1..p]
    std::vector<Rat> b; // b[1..q]
    Rat e;
};
PartialFrac partial_frac(int p, int q);

} // namespace zetalab
