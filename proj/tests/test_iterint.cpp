#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/iterint.hpp"

#include <cmath>

using namespace zetalab;

static XReal tol(int d) { return pow_int(XReal(10), -d); }

TEST_CASE("single zeta values from words") {
    // zeta(2) = int_{0<t2<t1<1} dt2/(1-t2) dt1/t1
    XComplex z2 = iterint(Word{Letter::W1, Letter::W0});
    CHECK(abs(z2.re - zeta_int(2)) < tol(30));
    CHECK(abs(z2.im) < tol(30));
    XComplex z3 = iterint(Word{Letter::W1, Letter::W0, Letter::W0});
    CHECK(abs(z3.re - zeta_int(3)) < tol(30));
    // Li_2(-1) = -pi^2/12
    XComplex m = iterint(Word{Letter::Wm1, Letter::W0});
    CHECK(abs(m.re + zeta_int(2) / 2) < tol(30));
}

TEST_CASE("alternating single values") {
    // zeta(bar k) = (2^{1-k}-1) zeta(k)
    for (int k = 2; k <= 6; ++k) {
        XComplex v = cmzv(TComp{{k}, {Tw::M1}});
        XReal want = (to_xreal(rat_pow2(1 - k)) - 1) * zeta_int(k);
        CHECK(abs(v.re - want) < tol(24));
        CHECK(abs(v.im) < tol(24));
    }
}

TEST_CASE("depth-two zeta and polylog identities") {
    // zeta(2,1) = zeta(3)
    XComplex v = cmzv(TComp{{2, 1}, {Tw::P1, Tw::P1}});
    CHECK(abs(v.re - zeta_int(3)) < tol(28));
    // Li_2(i) = -pi^2/48 + i G
    XComplex li2i = cmzv(TComp{{2}, {Tw::I}});
    CHECK(abs(li2i.re + pow_int(const_pi(), 2) / 48) < tol(28));
    CHECK(abs(li2i.im - const_catalan()) < tol(28));
    // conjugation symmetry
    XComplex li2mi = cmzv(TComp{{2}, {Tw::MI}});
    CHECK(abs(li2mi.re - li2i.re) < tol(30));
    CHECK(abs(li2mi.im + li2i.im) < tol(30));
}

TEST_CASE("twisted depth-two values against damped partial sums") {
    // zeta(2,1; -1,-1) = sum_{n1>n2} (-1)^{n1+n2}/(n1^2 n2)
    {
        XReal inner = 0, sum = 0, avg = 0;
        for (long n1 = 1; n1 <= 20000; ++n1) {
            if (n1 > 1) inner += XReal((n1 - 1) % 2 ? -1 : 1) / (n1 - 1);
            XReal prev = sum;
            sum += XReal(n1 % 2 ? -1 : 1) / (XReal(n1) * n1) * inner;
            avg = (prev + sum) / 2;
        }
        XComplex v = cmzv(TComp{{2, 1}, {Tw::M1, Tw::M1}});
        CHECK(abs(v.re - avg) < tol(6));
        CHECK(abs(v.im) < tol(24));
    }
    // zeta(2,1; i,1) = sum_{n1>n2} i^{n1}/(n1^2 n2); damp the period-4 phase
    // by averaging four consecutive partial sums
    {
        XComplex sum(0);
        std::vector<XComplex> last(4, XComplex(0));
        XReal inner = 0;
        for (long n1 = 1; n1 <= 20000; ++n1) {
            if (n1 > 1) inner += XReal(1) / (n1 - 1);
            XComplex ph = pow_int(XComplex::i(), n1 % 4);
            sum += ph * (inner / (XReal(n1) * n1));
            last[n1 % 4] = sum;
        }
        XComplex avg = (last[0] + last[1] + last[2] + last[3]) / XReal(4);
        XComplex v = cmzv(TComp{{2, 1}, {Tw::I, Tw::P1}});
        CHECK(abs(v - avg) < tol(6));
    }
}

TEST_CASE("multiple t-values") {
    // t(k) = (1 - 2^{-k}) zeta(k)
    for (int k = 2; k <= 5; ++k) {
        XComplex v = mtv(TComp{{k}, {Tw::P1}});
        CHECK(abs(v.re - (1 - to_xreal(rat_pow2(-k))) * zeta_int(k)) < tol(26));
        CHECK(abs(v.im) < tol(26));
    }
    // t(bar 1) = sum (-1)^n/(2n-1) = -pi/4;  t(bar 2) = -G
    XComplex t1b = mtv(TComp{{1}, {Tw::M1}});
    CHECK(abs(t1b.re + const_pi() / 4) < tol(28));
    XComplex t2b = mtv(TComp{{2}, {Tw::M1}});
    CHECK(abs(t2b.re + const_catalan()) < tol(28));
    // stuffle: t(2)^2 = 2 t(2,2) + t(4)
    XComplex t2 = mtv(TComp{{2}, {Tw::P1}});
    XComplex t22 = mtv(TComp{{2, 2}, {Tw::P1, Tw::P1}});
    XComplex t4 = mtv(TComp{{4}, {Tw::P1}});
    CHECK(abs(t2 * t2 - (XReal(2) * t22 + t4)) < tol(26));
    // t(2,1; -1,-1) against a damped alternating double sum
    XReal inner = 0, sum = 0, avg = 0;
    for (long n1 = 1; n1 <= 20000; ++n1) {
        if (n1 > 1)
            inner += XReal((n1 - 1) % 2 ? -1 : 1) / (2 * (n1 - 1) - 1);
        XReal prev = sum;
        XReal d = XReal(2 * n1 - 1);
        sum += XReal(n1 % 2 ? -1 : 1) / (d * d) * inner;
        avg = (prev + sum) / 2;
    }
    XComplex v = mtv(TComp{{2, 1}, {Tw::M1, Tw::M1}});
    CHECK(abs(v.re - avg) < tol(6));
    CHECK(abs(v.im) < tol(24));
}

TEST_CASE("shuffle product is a homomorphism for the integral") {
    auto hom = [&](const Word &u, const Word &v) {
        XComplex lhs = iterint(u) * iterint(v);
        XComplex rhs = iterint(shuffle(u, v));
        CHECK(abs(lhs - rhs) < tol(24));
    };
    hom({Letter::W1, Letter::W0}, {Letter::Wm1, Letter::W0});
    hom({Letter::W1, Letter::W0}, {Letter::Wm1});
    hom({Letter::Wi, Letter::W0}, {Letter::Wmi});
    hom({Letter::Wm1}, {Letter::Wm1, Letter::W0, Letter::W0});
}

TEST_CASE("split-point invariance") {
    std::vector<Word> words = {
        {Letter::W1, Letter::W0},
        {Letter::Wm1, Letter::W0, Letter::W0},
        {Letter::Wi, Letter::W0},
        {Letter::Wi, Letter::Wm1},
        {Letter::W1, Letter::Wi, Letter::W0},
        {Letter::Wmi, Letter::W0, Letter::Wi, Letter::W0},
    };
    std::vector<XReal> thirds{XReal(1) / 3, XReal(2) / 3};
    std::vector<XReal> quarter{XReal(1) / 4};
    for (const Word &w : words) {
        XComplex a = iterint(w);
        CHECK(abs(a - iterint_with_cuts(w, thirds)) < tol(24));
        CHECK(abs(a - iterint_with_cuts(w, quarter)) < tol(24));
    }
}

TEST_CASE("partial integrals") {
    // int_0^x dt/(1-t) = -log(1-x)
    XReal x = XReal(9) / 10;
    XComplex v = iterint_segment(Word{Letter::W1}, XReal(0), x);
    CHECK(abs(v.re + log(1 - x)) < tol(35));
    // int_a^b dt/t = log(b/a)
    v = iterint_segment(Word{Letter::W0}, XReal(1) / 4, XReal(3) / 4);
    CHECK(abs(v.re - log(XReal(3))) < tol(35));
    // Li_2 via word on (0, 1/2) vs the Abel value
    v = iterint_segment(Word{Letter::W1, Letter::W0}, XReal(0), XReal(1) / 2);
    XReal want = pow_int(const_pi(), 2) / 12 - pow_int(const_log2(), 2) / 2;
    CHECK(abs(v.re - want) < tol(32));
}

TEST_CASE("polylogarithm routes agree") {
    // direct nested series vs segment words, all arguments inside the disk
    for (const Composition &c :
         {Composition{2}, Composition{2, 1}, Composition{3, 1, 1}}) {
        std::vector<XComplex> z(c.size(), XComplex(1));
        z[0] = XComplex(XReal(1) / 2);
        XComplex a = li(c, z);
        XComplex b = li_x(c, XReal(1) / 2);
        CHECK(abs(a - b) < tol(28));
    }
    // root-of-unity arguments route through the word engine
    XComplex a = li(Composition{2}, {XComplex(-1)});
    CHECK(abs(a.re + zeta_int(2) / 2) < tol(28));
}

TEST_CASE("complex dilogarithm reflection") {
    // Li_2(z) + Li_2(1-z) = pi^2/6 - log z log(1-z) at z = (1+i)/2
    XComplex z(XReal(1) / 2, XReal(1) / 2);
    XComplex omz = XComplex(1) - z;
    XComplex lhs = li(Composition{2}, {z}) + li(Composition{2}, {omz});
    XComplex rhs =
        XComplex(zeta_int(2)) - log_complex(z) * log_complex(omz);
    CHECK(abs(lhs - rhs) < tol(28));
}

TEST_CASE("dilogarithm near 1") {
    // Li_2(x) + Li_2(1-x) = pi^2/6 - log x log(1-x) with x = 2^{-50}:
    // exercises segment evaluation exponentially close to 1
    XReal x = pow_int(XReal(2), -50);
    XComplex small = li_x(Composition{2}, x);
    XComplex close = li_x(Composition{2}, 1 - x);
    XReal rhs = zeta_int(2) - log(x) * log(1 - x);
    CHECK(abs(small + close - XComplex(rhs)) < tol(28));
}

TEST_CASE("mixed values") {
    // depth 1: M((2); +1) = zeta(2) + zeta(bar 2) = zeta(2)/2,
    //          M((2); -1) = zeta(2) - zeta(bar 2) = (3/2) zeta(2)
    CHECK(abs(mmv({2}, {1}) - zeta_int(2) / 2) < tol(26));
    CHECK(abs(mmv({2}, {-1}) - 3 * zeta_int(2) / 2) < tol(26));
    // depth 2 resummation: M((2,1); (1,1)) = 4 sum_{m1>m2} 1/((2m1)^2 2m2)
    XReal inner = 0, brute = 0;
    for (long m1 = 1; m1 <= 4000; ++m1) {
        if (m1 > 1) inner += XReal(1) / (2 * (m1 - 1));
        brute += XReal(4) / (XReal(2 * m1) * (2 * m1)) * inner;
    }
    // tail of the outer sum ~ log N / N; compare loosely
    CHECK(abs(mmv({2, 1}, {1, 1}) - brute) < tol(2));
}

TEST_CASE("r-values") {
    for (int k = 2; k <= 4; ++k)
        CHECK(abs(rvalue({k}) - (to_xreal(rat_pow2(k)) - 1) * zeta_int(k)) <
              tol(26));
    // R(2,1) = 8 sum_{n1 odd > n2 even} 1/(n1^2 n2), brute in double
    double inner = 0, brute = 0;
    for (long n1 = 1; n1 <= 2000001; n1 += 2) {
        if (n1 > 2) inner += 1.0 / (n1 - 1);
        brute += 8.0 / ((double)n1 * n1) * inner;
    }
    CHECK(abs(rvalue({2, 1}) - XReal(brute)) < tol(3));
}

TEST_CASE("divergent inputs are rejected") {
    CHECK_THROWS_AS(iterint(Word{Letter::W0, Letter::W1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(iterint(Word{Letter::W1, Letter::W1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cmzv(TComp{{1}, {Tw::P1}}), std::invalid_argument);
    CHECK_THROWS_AS(mtv(TComp{{1}, {Tw::P1}}), std::invalid_argument);
    CHECK_THROWS_AS(rvalue({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(li_x({2}, XReal(0)), std::invalid_argument);
}
