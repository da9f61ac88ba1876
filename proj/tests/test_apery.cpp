#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/apery.hpp"
#include "zetalab/finite_sums.hpp"

using namespace zetalab;

namespace {
XReal tol(const char *s) { return XReal(s); }

XReal series(const std::string &s, int digits = 18) {
    return eval_series(parse_series_spec(s), digits).value;
}
} // namespace

TEST_CASE("spec grammar round trip and rejection") {
    SeriesSpec s = parse_series_spec("binom:2 denom:2n1^2 f:t(2,2) f:z*(1,1)@+1");
    CHECK(s.binom_power == 2);
    CHECK(s.denom_base == DenomBase::TwoNPlus1);
    CHECK(s.denom_exp == 2);
    CHECK(s.factors.size() == 2);
    CHECK(s.factors[0].tkind);
    CHECK(!s.factors[0].star);
    CHECK(s.factors[0].comp == Composition{2, 2});
    CHECK(s.factors[1].star);
    CHECK(s.factors[1].offset == 1);
    CHECK(parse_series_spec(print_series_spec(s)).factors.size() == 2);

    CHECK_THROWS_AS(parse_series_spec("denom:n^2"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("binom:1 denom:q^2"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("binom:7 denom:n^2"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("binom:1 denom:n^2 f:w(1)"), ParseError);
    CHECK_THROWS_AS(parse_series_spec("binom:1 denom:n^2 f:t(1)@+2"), ParseError);
    // divergent: harmonic
    CHECK_THROWS_AS(eval_series(parse_series_spec("binom:0 denom:n^1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(eval_series(parse_series_spec("binom:-1 denom:n^1")),
                    std::invalid_argument);
}

TEST_CASE("start index accounts for factor offsets") {
    CHECK(series_start(parse_series_spec("binom:1 denom:n^2")) == 1);
    CHECK(series_start(parse_series_spec("binom:2 denom:n1^1")) == 0);
    CHECK(series_start(parse_series_spec("binom:0 denom:n^3 f:z(1,1)@-1")) == 3);
    CHECK(series_start(parse_series_spec("binom:1 denom:2n1^1 f:t*(1,1)@+1")) == 0);
}

TEST_CASE("untwisted double-sum oracles (tail extrapolation)") {
    // sum zeta*_n(1)/n^2 = 2 zeta(3)
    CHECK(abs(series("binom:0 denom:n^2 f:z*(1)") - 2 * zeta_int(3)) <
          tol("1e-10"));
    // sum zeta_{n-1}(1)/n^3 = zeta(3,1) = pi^4/360
    XReal pi = const_pi();
    CHECK(abs(series("binom:0 denom:n^3 f:z(1)@-1") -
              pow_int(pi, 4) / 360) < tol("1e-12"));
    // sum_{n>=0} 1/(2n+1)^2 = pi^2/8
    CHECK(abs(series("binom:0 denom:2n1^2") - pi * pi / 8) < tol("1e-12"));
}

TEST_CASE("alternating series through acceleration") {
    // sum_{n>=1} (-1)^n / n = -log 2
    CHECK(abs(series("binom:0 denom:n^1 sign:alt") + const_log2()) <
          tol("1e-20"));
    // sum (-1)^n a_n t_n(1)/n^2 against a long direct partial sum
    SeriesSpec s = parse_series_spec("binom:1 denom:n^2 sign:alt f:t(1)");
    XReal acc = eval_series(s, 25).value;
    XReal direct = 0, binom = 1, tn1 = 0;
    for (long n = 1; n <= 60000; ++n) {
        binom = binom * (2 * n - 1) / (2 * n);
        tn1 += XReal(1) / (2 * n - 1);
        XReal t = binom * tn1 / (n * XReal(n));
        direct += (n % 2) ? -t : t;
    }
    CHECK(abs(acc - direct) < tol("1e-9"));
}

TEST_CASE("central binomial series with closed forms") {
    XReal pi = const_pi(), l2 = const_log2(), G = const_catalan();
    // sum a_n t_n(1_k)/n = (2^{k+1}-1)/2^k zeta(k+1)
    CHECK(abs(series("binom:1 denom:n^1 f:t(1)") - XReal(3) / 2 * zeta_int(2)) <
          tol("1e-10"));
    CHECK(abs(series("binom:1 denom:n^1 f:t(1,1)") -
              XReal(7) / 4 * zeta_int(3)) < tol("1e-10"));
    // sum a_n t_n(1)/n^2 = 7 zeta(3)/2 - 3 zeta(2) log 2
    CHECK(abs(series("binom:1 denom:n^2 f:t(1)") -
              (XReal(7) / 2 * zeta_int(3) - 3 * zeta_int(2) * l2)) <
          tol("1e-10"));
    // sum a_n t_n(1,1)/n^2 = 45 zeta(4)/16 - 7 zeta(3) log2 / 2
    CHECK(abs(series("binom:1 denom:n^2 f:t(1,1)") -
              (XReal(45) / 16 * zeta_int(4) - XReal(7) / 2 * zeta_int(3) * l2)) <
          tol("1e-10"));
    // sum a_n t_n(1)/n^3 = 15 zeta(4)/4 + 3 log^2(2) zeta(2) - 7 zeta(3) log 2
    CHECK(abs(series("binom:1 denom:n^3 f:t(1)") -
              (XReal(15) / 4 * zeta_int(4) + 3 * l2 * l2 * zeta_int(2) -
               7 * zeta_int(3) * l2)) < tol("1e-10"));
    // squared: sum a_n^2/(n+1) = 4/pi, /(n+1)^2 = 16/pi - 4
    CHECK(abs(series("binom:2 denom:n1^1") - 4 / pi) < tol("1e-10"));
    CHECK(abs(series("binom:2 denom:n1^2") - (16 / pi - 4)) < tol("1e-10"));
    // /(n+1)^3 = (16/pi)(3 - 2G - pi + pi log 2)
    CHECK(abs(series("binom:2 denom:n1^3") -
              16 / pi * (3 - 2 * G - pi + pi * l2)) < tol("1e-10"));
    // inverse: sum (4^n/C) t*_n(1)/n^2 = 7 zeta(3)
    CHECK(abs(series("binom:-1 denom:n^2 f:t*(1)") - 7 * zeta_int(3)) <
          tol("1e-10"));
    // mirrored: sum a_n t_n(1) zeta*_n(1)/n = 7 zeta(3)
    CHECK(abs(series("binom:1 denom:n^1 f:t(1) f:z*(1)") - 7 * zeta_int(3)) <
          tol("1e-10"));
    // sum a_n/(2n+1) = pi/2
    CHECK(abs(series("binom:1 denom:2n1^1") - pi / 2) < tol("1e-10"));
    // sum a_n t*_{n+1}(1)/(2n+1) = pi log 2
    CHECK(abs(series("binom:1 denom:2n1^1 f:t*(1)@+1") - pi * l2) <
          tol("1e-10"));
    // sum a_n^2/(2n+1) = 4G/pi
    CHECK(abs(series("binom:2 denom:2n1^1") - 4 * G / pi) < tol("1e-10"));
}

TEST_CASE("series vs registered integral route") {
    auto both = [](const std::string &txt, const char *agree) {
        SeriesSpec s = parse_series_spec(txt);
        XReal a = eval_series(s, 18).value;
        XReal ierr;
        XReal b = eval_series_integral(s, &ierr);
        INFO(txt, " series=", (double)a, " integral=", (double)b,
             " ierr=", (double)ierr);
        CHECK(abs(a - b) < tol(agree));
    };
    both("binom:1 denom:n^2 f:t(1)", "1e-10");
    both("binom:1 denom:n^3 f:t(1,1)", "1e-10");
    both("binom:1 denom:n^2", "1e-10");
    both("binom:1 denom:n^1 f:t(1) f:z*(1)", "1e-10");
    both("binom:1 denom:n^1 f:t(1,1) f:z*(1)", "1e-8");
    both("binom:-1 denom:n^2 f:t*(1)", "1e-10");
    both("binom:-1 denom:n^3 f:z(1)@-1 f:t*(1)", "1e-10");
    both("binom:2 denom:n1^1", "1e-10");
    both("binom:2 denom:n1^2", "1e-10");
    both("binom:2 denom:n1^1 f:z*(1)@+1", "1e-9");
    both("binom:2 denom:2n1^1", "1e-10");
    both("binom:2 denom:2n1^2", "1e-10");
    both("binom:1 denom:2n1^1 f:t*(1)@+1", "1e-10");
    both("binom:1 denom:2n1^1 f:t*(1,1)@+1", "1e-9");
    both("binom:2 denom:2n1^1 f:t(2)", "1e-9");
    both("binom:-2 denom:n^3 f:t(1)", "1e-9");
    CHECK(!has_integral_route(parse_series_spec("binom:1 denom:2n1^1 f:t(1)")));
}

TEST_CASE("closed forms reached through the integral routes alone") {
    XReal pi = const_pi(), l2 = const_log2();
    // inverse central binomial with inner harmonic factor:
    // sum (4^n/C) zeta_{n-1}(1) t*_n(1)/n^3 = 45 zeta(4) log2 - 31 zeta(5)
    XReal v = eval_series_integral(
        parse_series_spec("binom:-1 denom:n^3 f:z(1)@-1 f:t*(1)"));
    CHECK(abs(v - (45 * zeta_int(4) * l2 - 31 * zeta_int(5))) < tol("1e-12"));
    // sum a_n t*_{n+1}(1,1)/(2n+1) = pi^3/24 + pi log^2 2
    XReal w = eval_series_integral(
        parse_series_spec("binom:1 denom:2n1^1 f:t*(1,1)@+1"));
    CHECK(abs(w - (pow_int(pi, 3) / 24 + pi * l2 * l2)) < tol("1e-12"));
}

TEST_CASE("decimal spot checks") {
    auto near = [](const std::string &txt, const char *dec) {
        XReal v = series(txt);
        XReal ref(dec);
        INFO(txt, " -> ", (double)v, " expected ", dec);
        CHECK(abs(v - ref) < tol("2e-6") * abs(ref));
    };
    near("binom:1 denom:2n1^1 f:t(1)", "1.088793045");
    near("binom:-1 denom:n^2 f:t(2)", "5.4641926215");
    near("binom:2 denom:2n1^1 f:t(2,2)", "0.0139754925");
    near("binom:2 denom:2n1^2", "1.037947765");
    near("binom:-2 denom:n^3 f:t(1)", "7.7112698415");
    near("binom:2 denom:2n1^1", "1.166243616");
}

TEST_CASE("arcsine power series") {
    XReal pi = const_pi();
    XReal half = XReal(1) / 2;
    CHECK(abs(arcsin_series(1, half) - pi / 6) < tol("1e-35"));
    CHECK(abs(arcsin_series(2, half) - pi * pi / 72) < tol("1e-35"));
    XReal x("0.7");
    XReal as = asin(x);
    CHECK(abs(arcsin_series(3, x) - as * as * as / 6) < tol("1e-30"));
    CHECK(abs(arcsin_series(4, x) - pow_int(as, 4) / 24) < tol("1e-30"));
    // F_{1,2}(x) = int_0^x arcsin(t)/t dt, checked by direct quadrature of the
    // rescaled integrand
    XReal f12 = f_pm(1, 2, half);
    XReal ref = integrate(
        [&](const XReal &u, const XReal &) {
            XReal t = u / 2;
            return (u == 0) ? half : asin(t) / t * half;
        },
        EndpointSub::None, nullptr);
    CHECK(abs(f12 - ref) < tol("1e-25"));
    CHECK_THROWS_AS(f_pm(1, 1, XReal(1)), std::invalid_argument);
}
