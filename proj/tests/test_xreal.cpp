#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/xreal.hpp"
#include "zetalab/rational.hpp"

using namespace zetalab;

static XReal tol(int d) { return pow_int(XReal(10), -d); }

TEST_CASE("arithmetic keeps small differences") {
    XReal eps = pow_int(XReal(2), -60);
    CHECK((XReal(1) + eps) - 1 == eps);
    CHECK(abs(sqrt(XReal(2)) * sqrt(XReal(2)) - 2) < tol(28));
    XComplex i = XComplex::i();
    XComplex i2 = i * i;
    CHECK(i2.re == -1);
    CHECK(i2.im == 0);
}

TEST_CASE("elementary functions") {
    CHECK(abs(log(XReal(2)) - const_log2_atanh()) < tol(40));
    CHECK(abs(atan2(XReal(1), XReal(1)) - const_pi() / 4) < tol(40));
    CHECK(abs(exp(log(XReal(5))) - 5) < tol(28) * 5);
    XComplex z{XReal(-3), XReal(4)};
    XComplex lz = log_complex(z);
    CHECK(abs(exp(lz.re) - 5) < tol(38));
}

TEST_CASE("constants from independent formulas") {
    CHECK(abs(const_pi() - const_pi_machin()) < tol(40));
    CHECK(abs(const_log2() - const_log2_atanh()) < tol(40));
}

TEST_CASE("zeta at integers") {
    XReal pi = const_pi();
    CHECK(abs(zeta_int(2) - pi * pi / 6) < tol(40));
    CHECK(abs(zeta_int(4) - pow_int(pi, 4) / 90) < tol(40));
    CHECK(abs(zeta_bar(2) + pi * pi / 12) < tol(40));
    CHECK(abs(zeta_bar(1) + const_log2()) < tol(40));
}

TEST_CASE("alternating series acceleration") {
    XReal v1 = accel_alternating([](long n) { return XReal(1) / (n + 1); }, 40);
    CHECK(abs(v1 - const_log2()) < tol(35));
    XReal v2 = accel_alternating([](long n) { return XReal(1) / (2 * n + 1); }, 40);
    CHECK(abs(v2 - const_pi() / 4) < tol(35));
}

TEST_CASE("catalan vs direct sum") {
    // midpoint of consecutive partial sums kills the leading tail term
    long N = 400000;
    XReal s = 0;
    for (long n = 0; n < N; ++n) {
        XReal t = XReal(1) / ((2 * n + 1) * XReal(2 * n + 1));
        s += (n % 2 ? -t : t);
    }
    XReal tN = XReal(1) / ((2 * N + 1) * XReal(2 * N + 1));
    XReal mid = s + (N % 2 ? -tN : tN) / 2;
    CHECK(abs(const_catalan() - mid) < tol(15));
}

TEST_CASE("euler-maclaurin tails") {
    // zeta(3) = sum_{n<=N} + tail
    long N = 120;
    XReal head = 0;
    for (long n = 1; n <= N; ++n) head += pow_int(XReal(n), -3);
    CHECK(abs(head + em_tail(XReal(3), 0, N) - zeta_int(3)) < tol(38));
    // consistency under shifting N with a log factor
    XReal a = em_tail(XReal(5) / 2, 2, 100);
    XReal b = em_tail(XReal(5) / 2, 2, 300);
    for (long n = 101; n <= 300; ++n)
        b += pow_int(XReal(n), -2) / sqrt(XReal(n)) * pow_int(log(XReal(n)), 2);
    CHECK(abs(a - b) < tol(36));
}

TEST_CASE("bernoulli numbers") {
    auto B = bernoulli_numbers(12);
    CHECK(B[2] == Rat(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[12] == Rat(-691, 2730));
}
