#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/legendre.hpp"

using namespace zetalab;

static XReal tol(int d) { return pow_int(XReal(10), -d); }

TEST_CASE("legendre polynomial basics") {
    XReal x = XReal(7) / 13;
    CHECK(legendre_P(0, x) == 1);
    CHECK(legendre_P(1, x) == x);
    CHECK(abs(legendre_P(2, x) - (3 * x * x - 1) / 2) < tol(42));
    for (int n = 0; n <= 20; ++n) {
        CHECK(abs(legendre_P(n, XReal(1)) - 1) < tol(40));
        XReal par = legendre_P(n, -x) - (n % 2 ? -1 : 1) * legendre_P(n, x);
        CHECK(abs(par) < tol(40));
    }
}

TEST_CASE("gauss-legendre rules") {
    for (int q : {7, 24, 32}) {
        const QuadRule &r = gauss_legendre(q);
        REQUIRE((int)r.nodes.size() == q);
        XReal sw = 0;
        for (auto &w : r.weights) sw += w;
        CHECK(abs(sw - 2) < tol(40));
        // exact for degree 2q-1: check x^{2q-2}
        XReal s = 0;
        for (size_t j = 0; j < r.nodes.size(); ++j)
            s += r.weights[j] * pow_int(r.nodes[j], 2 * q - 2);
        CHECK(abs(s - XReal(2) / (2 * q - 1)) < tol(38));
        for (auto &x : r.nodes) CHECK(abs(x) < 1);
    }
}

TEST_CASE("integrate handles endpoint singularities") {
    XReal err;
    // smooth
    XReal v = integrate([](const XReal &x, const XReal &) { return x * x; },
                        EndpointSub::None, &err);
    CHECK(abs(v - XReal(1) / 3) < tol(40));
    // x^{-1/2}, no substitution: dyadic panels alone are geometric-accurate,
    // limited only by the dropped 2^-140 endpoint stub (~1e-21)
    v = integrate([](const XReal &x, const XReal &) { return 1 / sqrt(x); },
                  EndpointSub::None, &err);
    CHECK(abs(v - 2) < tol(20));
    // x^{-1/2} with the matching substitution
    v = integrate([](const XReal &x, const XReal &) { return 1 / sqrt(x); },
                  EndpointSub::SqrtLower, &err);
    CHECK(abs(v - 2) < tol(40));
    // (1-x)^{-1/2}
    v = integrate([](const XReal &, const XReal &omx) { return 1 / sqrt(omx); },
                  EndpointSub::SqrtUpper, &err);
    CHECK(abs(v - 2) < tol(40));
    // log^2 x with the log-lower route: = 2
    v = integrate([](const XReal &x, const XReal &) { return pow_int(log(x), 2); },
                  EndpointSub::LogLower, &err);
    CHECK(abs(v - 2) < tol(38));
    CHECK(err < tol(35));
}

TEST_CASE("orthogonality on [0,1]") {
    for (int a = 0; a <= 12; a += 3)
        for (int b = a; b <= 12; b += 4) {
            XReal v = integrate(
                [&](const XReal &x, const XReal &) {
                    return legendre_P(a, 2 * x - 1) * legendre_P(b, 2 * x - 1);
                },
                EndpointSub::None);
            XReal want = (a == b) ? 1 / XReal(2 * a + 1) : XReal(0);
            CHECK(abs(v - want) < tol(22));
        }
}

TEST_CASE("closed-form integrals against quadrature") {
    // int_0^1 x^{n-1} log^m(1-x) dx = (-1)^m m! zeta*_n(1_m)/n
    {
        int n = 3, m = 2;
        XReal v = integrate(
            [&](const XReal &x, const XReal &omx) {
                return pow_int(x, n - 1) * pow_int(log(omx), m);
            },
            EndpointSub::None);
        XReal want = to_xreal(Rat(factorial(m)) *
                              zeta_star_n(Composition(m, 1), n) / n);
        CHECK(abs(v - want) < tol(30));
    }
    // int_0^1 x^{-1/2}(1-x)^n log^m x dx = (-1)^m m! 2^{m+1} 4^n/((2n+1)C(2n,n)) t*_{n+1}(1_m)
    {
        int n = 1, m = 1;
        XReal v = integrate(
            [&](const XReal &x, const XReal &omx) {
                return pow_int(omx, n) * log(x) / sqrt(x);
            },
            EndpointSub::SqrtLower);
        XReal want = -to_xreal(Rat(factorial(m)) * rat_pow2(m + 1) /
                               (Rat(2 * n + 1) * central_binomial(n)) *
                               t_star_n(Composition(m, 1), n + 1));
        CHECK(abs(v - want) < tol(30));
    }
    // int_0^1 x^{n-1} log^k(1-x)/sqrt(1-x) dx = (-1)^k k! 2^k t*_n(1_k) / (n C(2n,n)/4^n)
    {
        int n = 2, k = 2;
        XReal v = integrate(
            [&](const XReal &x, const XReal &omx) {
                return pow_int(x, n - 1) * pow_int(log(omx), k) /
                       sqrt(omx);
            },
            EndpointSub::SqrtUpper);
        XReal want = to_xreal(Rat(factorial(k)) * rat_pow2(k) *
                              t_star_n(Composition(k, 1), n) /
                              (Rat(n) * central_binomial(n)));
        CHECK(abs(v - want) < tol(30));
    }
}

TEST_CASE("fourier-legendre coefficients of log powers") {
    CHECK(abs(fl_coeff_logm(1, 1) - XReal(1) / 2) < tol(40));
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) {
            XReal q = integrate(
                [&](const XReal &x, const XReal &) {
                    return legendre_P(n, 2 * x - 1) * pow_int(log(x), m);
                },
                EndpointSub::LogLower);
            CHECK(abs(q - fl_coeff_logm(n, m)) < tol(22));
        }
}

TEST_CASE("fourier-legendre coefficients of log powers over sqrt x") {
    CHECK(abs(fl_coeff_logm_sqrt(0, 0) - 2) < tol(40));
    CHECK(abs(fl_coeff_logm_sqrt(1, 0) + XReal(2) / 3) < tol(40));
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 3; ++m) {
            XReal q = integrate(
                [&](const XReal &x, const XReal &) {
                    return legendre_P(n, 2 * x - 1) * pow_int(log(x), m) /
                           sqrt(x);
                },
                EndpointSub::SqrtLower);
            CHECK(abs(q - fl_coeff_logm_sqrt(n, m)) < tol(22));
        }
}

TEST_CASE("derivatives of log powers") {
    XReal x = XReal(7) / 10;
    CHECK(abs(deriv_logm(1, 1, x) - 1 / x) < tol(40));
    // finite differences, rich in precision thanks to 45-digit arithmetic
    XReal h = tol(8);
    for (int n = 1; n <= 4; ++n) {
        // central difference of deriv_logm(n-1, m, .)
        for (int m = 1; m <= 2; ++m) {
            XReal fd = (deriv_logm(n - 1, m, x + h) - deriv_logm(n - 1, m, x - h)) /
                       (2 * h);
            CHECK(abs(fd - deriv_logm(n, m, x)) < tol(12));
            XReal fds = (deriv_logm_sqrt(n - 1, m, x + h) -
                         deriv_logm_sqrt(n - 1, m, x - h)) /
                        (2 * h);
            CHECK(abs(fds - deriv_logm_sqrt(n, m, x)) < tol(12));
        }
    }
    // alpha = 1/2 specializes to the sqrt form
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(abs(deriv_logm_alpha(n, m, Rat(1, 2), x) -
                      deriv_logm_sqrt(n, m, x)) < tol(35));
    // alpha = 1 gives d^n/dx^n (log^m x / x)
    XReal fd = (deriv_logm_alpha(0, 2, Rat(1), x + h) -
                deriv_logm_alpha(0, 2, Rat(1), x - h)) / (2 * h);
    CHECK(abs(fd - deriv_logm_alpha(1, 2, Rat(1), x)) < tol(12));
}

TEST_CASE("complete elliptic integral") {
    CHECK(abs(elliptic_K(XReal(0)) - const_pi() / 2) < tol(40));
    // series oracle at x = 1/2
    XReal x = XReal(1) / 2;
    XReal s = 0, an = 1; // a_n = C(2n,n)/4^n
    for (int n = 0; n <= 200; ++n) {
        s += an * an * pow_int(x, n);
        an *= XReal(2 * n + 1) / (2 * n + 2);
    }
    CHECK(abs(elliptic_K(x) - const_pi() / 2 * s) < tol(25));
    // Fourier-Legendre expansion 2 sum P_n(2x-1)/(2n+1): converges slowly
    // with an oscillating tail; average consecutive partial sums to damp it
    XReal y = 2 * (XReal(3) / 10) - 1;
    XReal p0 = 1, p1 = y, fl = 2 + 2 * y / 3, avg = 0;
    for (int n = 2; n <= 6000; ++n) {
        XReal p2 = ((2 * n - 1) * y * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
        XReal prev = fl;
        fl += 2 * p2 / (2 * n + 1);
        avg = (prev + fl) / 2;
    }
    CHECK(abs(avg - elliptic_K(XReal(3) / 10)) < tol(6));
}

TEST_CASE("beta-derivative identity") {
    // d^k/db^k B(a,b) at a=n+1/2, b=1/2 vs b-sequence formula
    auto b = b_sequence(3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= 3; ++k) {
            XReal q = integrate(
                [&](const XReal &x, const XReal &omx) {
                    return pow(x, XReal(n) - XReal(1) / 2) *
                           pow_int(log(omx), k) / sqrt(omx);
                },
                EndpointSub::SqrtUpper);
            XReal want = 0;
            for (int j = 0; j <= k; ++j)
                want += b[j] * to_xreal(zeta_star_n(Composition(k - j, 1), n));
            want *= to_xreal(Rat(factorial(k)) * central_binomial(n)) *
                    const_pi();
            if (k % 2) want = -want;
            CHECK(abs(q - want) < tol(15));
        }
}
