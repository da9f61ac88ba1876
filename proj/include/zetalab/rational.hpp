#pragma once
// Exact arithmetic: arbitrary-size integers/rationals (GMP) and Gaussian
// rationals for the Q(i) coefficients of the word algebras.
#include <boost/multiprecision/gmp.hpp>
#include "zetalab/xreal.hpp"

namespace zetalab {

using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long j = 2; j <= n; ++j) r *= j;
    return r;
}

inline Rat rat_pow2(int e) {
    Rat r = 1;
    for (int j = 0; j < e; ++j) r *= 2;
    for (int j = 0; j > e; --j) r /= 2;
    return r;
}

inline XReal to_xreal(const Rat &q) {
    return XReal(numerator(q).str()) / XReal(denominator(q).str());
}

struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRat operator+(const GaussRat &a, const GaussRat &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat &a, const GaussRat &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat &a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat &a, const GaussRat &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat &a, const GaussRat &b) {
        Rat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussRat &operator+=(const GaussRat &b) { re += b.re; im += b.im; return *this; }
    GaussRat &operator*=(const GaussRat &b) { *this = *this * b; return *this; }
    friend bool operator==(const GaussRat &a, const GaussRat &b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline GaussRat conj(const GaussRat &z) { return {z.re, -z.im}; }

inline XComplex to_xcomplex(const GaussRat &z) {
    return {to_xreal(z.re), to_xreal(z.im)};
}

// Bernoulli numbers B_0..B_nmax (B_1 = -1/2), exact.
std::vector<Rat> bernoulli_numbers(int nmax);

} // namespace zetalab
