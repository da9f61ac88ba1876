#pragma once
// Summation engine for central-binomial (Apery-type) series
//   sum_n sign^n * a_n^p * f_1(n+o_1) ... f_j(n+o_j) / base(n)^m,
// a_n = C(2n,n)/4^n, base(n) in {n, n+1, 2n+1}, with harmonic-sum weight
// factors f in {zeta_n, zeta*_n, t_n, t*_n} on a composition. Values come from
// direct summation plus an asymptotic tail fit (alternating series go through
// the Cohen-Rodriguez Villegas-Zagier acceleration), and independently from
// registered integral representations (quadrature kernels or level-4 word
// integrals).
#include "zetalab/iterint.hpp"
#include "zetalab/legendre.hpp"

namespace zetalab {

enum class DenomBase { N, NPlus1, TwoNPlus1 };

struct SeriesFactor {
    bool tkind = false; // odd-index (t) sums instead of zeta sums
    bool star = false;
    Composition comp;
    int offset = 0; // evaluate the sum at n + offset, offset in {-1,0,+1}
};

struct SeriesSpec {
    int binom_power = 1; // in {-2,-1,0,1,2}
    DenomBase denom_base = DenomBase::N;
    int denom_exp = 1;
    bool alternating = false;
    std::vector<SeriesFactor> factors;
    long start = -1; // -1: smallest n with all factors and the denominator nonzero
};

// Grammar: binom:<int> denom:<n|n1|2n1>^<int> [sign:alt] [f:<kind>(<comp>)[@<off>]]*
// with kind in {z, z*, t, t*}.
SeriesSpec parse_series_spec(const std::string &text);
std::string print_series_spec(const SeriesSpec &spec);

long series_start(const SeriesSpec &spec);

struct SeriesResult {
    XReal value;
    XReal err;  // observed change on the last refinement
    long terms; // directly summed terms
};

// Direct summation with asymptotic-tail extrapolation, refined by doubling the
// summed range until the change is below 10^-target_digits or the budget is
// exhausted (the achieved error is reported either way).
SeriesResult eval_series(const SeriesSpec &spec, int target_digits = 30,
                         long budget = 1000000);

// Independent route through a registered integral representation (quadrature
// of a log/sqrt kernel, or an exact rewrite into level-4 iterated integrals).
// Throws std::invalid_argument when no representation is registered.
XReal eval_series_integral(const SeriesSpec &spec, XReal *err = nullptr);
bool has_integral_route(const SeriesSpec &spec);

// (arcsin x)^p / p! via its central-binomial series, |x| < 1.
XReal arcsin_series(int p, const XReal &x);

// F_{p,m}(x): the p-fold inverse-sqrt kernel iterated with (dt/t)^{m-1};
// F_{1,1}(x) = arcsin x. Series mode, |x| < 1.
XReal f_pm(int p, int m, const XReal &x);

} // namespace zetalab
