#pragma once
// Extended-precision scalars. Fixed 45-decimal-digit MPFR numbers (~150 bits),
// expression templates off so values are plain data and thread-safe.
#include <boost/multiprecision/mpfr.hpp>
#include <boost/math/constants/constants.hpp>
#include <functional>
#include <stdexcept>
#include <string>

namespace zetalab {

namespace mp = boost::multiprecision;

inline constexpr int kWorkingDigits = 45;

using XReal = mp::number<mp::mpfr_float_backend<45>, mp::et_off>;

struct XComplex {
    XReal re, im;

    XComplex() : re(0), im(0) {}
    XComplex(XReal r) : re(std::move(r)), im(0) {}
    XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}
    XComplex(int r) : re(r), im(0) {}
    XComplex(double r) : re(r), im(0) {}

    static XComplex i() { return {XReal(0), XReal(1)}; }

    friend XComplex operator+(const XComplex &a, const XComplex &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend XComplex operator-(const XComplex &a, const XComplex &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend XComplex operator-(const XComplex &a) { return {-a.re, -a.im}; }
    friend XComplex operator*(const XComplex &a, const XComplex &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend XComplex operator*(const XComplex &a, const XReal &s) {
        return {a.re * s, a.im * s};
    }
    friend XComplex operator*(const XReal &s, const XComplex &a) { return a * s; }
    friend XComplex operator/(const XComplex &a, const XReal &s) {
        return {a.re / s, a.im / s};
    }
    friend XComplex operator/(const XComplex &a, const XComplex &b) {
        XReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    XComplex &operator+=(const XComplex &b) { re += b.re; im += b.im; return *this; }
    XComplex &operator-=(const XComplex &b) { re -= b.re; im -= b.im; return *this; }
    XComplex &operator*=(const XComplex &b) { *this = *this * b; return *this; }
};

inline XComplex conj(const XComplex &z) { return {z.re, -z.im}; }
inline XReal abs(const XComplex &z) { return sqrt(z.re * z.re + z.im * z.im); }

inline XReal pow_int(const XReal &x, long e) {
    if (e < 0) return 1 / pow_int(x, -e);
    XReal r(1), b = x;
    for (long m = e; m; m >>= 1) {
        if (m & 1) r *= b;
        b *= b;
    }
    return r;
}

inline XComplex pow_int(const XComplex &x, long e) {
    XComplex r(1), b = x;
    bool inv = e < 0;
    for (long m = inv ? -e : e; m; m >>= 1) {
        if (m & 1) r = r * b;
        b = b * b;
    }
    return inv ? XComplex(1) / r : r;
}

inline XComplex log_complex(const XComplex &z) {
    return {log(z.re * z.re + z.im * z.im) / 2, atan2(z.im, z.re)};
}

XReal const_pi();
XReal const_log2();
XReal const_catalan();

// Independent oracles for the constants above.
XReal const_pi_machin();
XReal const_log2_atanh();

// Riemann zeta at integer s >= 2 (Euler-Maclaurin).
XReal zeta_int(int s);
// Alternating zeta(bar s) = -eta(s): zeta(1 bar) = -log 2, else (2^{1-s}-1) zeta(s).
XReal zeta_bar(int s);

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k for
// positive a_k. Returns the limit; err gets |estimate(n) - estimate(n+8)|.
XReal accel_alternating(const std::function<XReal(long)> &a, int digits,
                        XReal *err = nullptr);

// sum_{n > N} n^{-sigma} log^l n via Euler-Maclaurin (sigma > 1, l <= 6, N >= 50).
XReal em_tail(const XReal &sigma, int l, long N);

} // namespace zetalab
