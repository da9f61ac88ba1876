#include "zetalab/xreal.hpp"
#include "zetalab/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace zetalab {

std::vector<Rat> bernoulli_numbers(int nmax) {
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j
    std::vector<Rat> B(nmax + 1);
    B[0] = 1;
    for (int m = 1; m <= nmax; ++m) {
        Rat s = 0;
        for (int j = 0; j < m; ++j)
            s += Rat(binomial(m + 1, j)) * B[j];
        B[m] = -s / Rat(m + 1);
    }
    return B;
}

XReal const_pi() { return boost::math::constants::pi<XReal>(); }

XReal const_log2() { return log(XReal(2)); }

static XReal atan_inv_series(long x) {
    // atan(1/x) for integer x >= 2
    XReal sum = 0, term = XReal(1) / x;
    XReal x2 = XReal(x) * x;
    long k = 0;
    XReal eps = pow_int(XReal(10), -(kWorkingDigits + 5));
    while (term > eps) {
        sum += (k % 2 ? -term : term) / (2 * k + 1);
        term /= x2;
        ++k;
    }
    return sum;
}

XReal const_pi_machin() {
    return 16 * atan_inv_series(5) - 4 * atan_inv_series(239);
}

XReal const_log2_atanh() {
    // log 2 = 2 atanh(1/3)
    XReal sum = 0, term = XReal(1) / 3;
    XReal eps = pow_int(XReal(10), -(kWorkingDigits + 5));
    long k = 0;
    while (term > eps) {
        sum += term / (2 * k + 1);
        term /= 9;
        ++k;
    }
    return 2 * sum;
}

XReal accel_alternating(const std::function<XReal(long)> &a, int digits,
                        XReal *err) {
    auto run = [&](long n) {
        XReal d = pow_int(XReal(3) + 2 * sqrt(XReal(2)), n);
        d = (d + 1 / d) / 2;
        XReal b = -1, c = -d, s = 0;
        for (long k = 0; k < n; ++k) {
            c = b - c;
            s += c * a(k);
            b *= XReal(k + n) * (k - n) / ((k + XReal(1) / 2) * (k + 1));
        }
        return s / d;
    };
    long n = (long)(digits * 2.303 / 1.7627) + 12;
    XReal v1 = run(n), v2 = run(n + 8);
    if (err) *err = abs(v1 - v2);
    return v2;
}

XReal zeta_int(int s) {
    if (s < 2) throw std::invalid_argument("zeta_int: s >= 2 required");
    static std::map<int, XReal> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
    }
    const long N = 64;
    const int K = 20;
    std::vector<Rat> B = bernoulli_numbers(2 * K);
    XReal sum = 0;
    for (long n = 1; n < N; ++n) sum += pow_int(XReal(n), -s);
    XReal Ns = pow_int(XReal(N), -s);
    sum += XReal(N) * Ns / (s - 1) + Ns / 2;
    XReal rising = s; // (s)_{2k-1} = s(s+1)...(s+2k-2)
    for (int k = 1; k <= K; ++k) {
        if (k > 1) rising *= XReal(s + 2 * k - 3) * (s + 2 * k - 2);
        sum += to_xreal(B[2 * k] / Rat(factorial(2 * k))) * rising *
               pow_int(XReal(N), -(s + 2 * k - 1));
    }
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(s, sum);
    return sum;
}

XReal zeta_bar(int s) {
    if (s == 1) return -const_log2();
    return (pow_int(XReal(2), 1 - s) - 1) * zeta_int(s);
}

XReal const_catalan() {
    static XReal v = accel_alternating(
        [](long k) { return XReal(1) / ((2 * k + 1) * XReal(2 * k + 1)); },
        kWorkingDigits);
    return v;
}

XReal em_tail(const XReal &sigma, int l, long N) {
    if (sigma <= 1) throw std::invalid_argument("em_tail: sigma > 1 required");
    if (N < 50) throw std::invalid_argument("em_tail: N >= 50 required");
    const int K = 12;
    std::vector<Rat> B = bernoulli_numbers(2 * K);
    XReal logN = log(XReal(N));
    // I(beta, j) = int_N^inf x^{-beta} log^j x dx, via
    // I(beta, j) = N^{1-beta} log^j N/(beta-1) + j/(beta-1) I(beta, j-1)
    auto integral = [&](const XReal &beta, int j) {
        XReal N1b = exp((1 - beta) * logN);
        XReal v = N1b / (beta - 1);
        for (int t = 1; t <= j; ++t)
            v = (N1b * pow_int(logN, t) + t * v) / (beta - 1);
        return v;
    };
    using Poly = std::vector<std::vector<XReal>>; // [a][j]: x^{-sigma-a} log^j x
    Poly g(1, std::vector<XReal>(l + 1, XReal(0)));
    g[0][l] = 1;
    auto eval_at_N = [&](const Poly &h) {
        XReal r = 0;
        for (size_t a = 0; a < h.size(); ++a) {
            XReal xp = exp(-(sigma + (int)a) * logN);
            for (int j = 0; j <= l; ++j)
                if (h[a][j] != 0) r += h[a][j] * xp * pow_int(logN, j);
        }
        return r;
    };
    auto deriv = [&](const Poly &h) {
        Poly d(h.size() + 1, std::vector<XReal>(l + 1, XReal(0)));
        for (size_t a = 0; a < h.size(); ++a)
            for (int j = 0; j <= l; ++j)
                if (h[a][j] != 0) {
                    d[a + 1][j] -= (sigma + (int)a) * h[a][j];
                    if (j > 0) d[a + 1][j - 1] += XReal(j) * h[a][j];
                }
        return d;
    };
    XReal total = integral(sigma, l) - eval_at_N(g) / 2;
    Poly h = g;
    for (int k = 1; k <= K; ++k) {
        h = (k == 1) ? deriv(h) : deriv(deriv(h)); // h = f^{(2k-1)}
        total -= to_xreal(B[2 * k] / Rat(factorial(2 * k))) * eval_at_N(h);
    }
    return total;
}

} // namespace zetalab
