#include "zetalab/finite_sums.hpp"

#include <algorithm>
#include "zetalab/xreal.hpp"

namespace zetalab {

// suf[j] accumulates the suffix sum (k_{j+1}..k_r) for the current bound m;
// strict chains read the previous-m value (ascending j), star chains the
// current-m value (descending j). O(n * depth) operations.
template <class V, class TermFn>
static V nested_generic(int r, long n, bool star, const V &one, TermFn term) {
    if (r == 0) return one;
    if (n <= 0) return V{};
    std::vector<V> suf(r + 1, V{});
    suf[r] = one;
    for (long m = 1; m <= n; ++m) {
        if (star)
            for (int j = r - 1; j >= 0; --j) suf[j] += term(j + 1, m) * suf[j + 1];
        else
            for (int j = 0; j < r; ++j) suf[j] += term(j + 1, m) * suf[j + 1];
    }
    return suf[0];
}

static Rat rat_pow(const Rat &x, int e) {
    Rat r = 1, b = x;
    for (int m = e; m; m >>= 1) {
        if (m & 1) r *= b;
        b *= b;
    }
    return r;
}

Rat zeta_n(const Composition &c, long n) {
    return nested_generic<Rat>((int)c.size(), n, false, Rat(1),
        [&](int j, long m) { return rat_pow(Rat(1, m), c[j - 1]); });
}

Rat zeta_star_n(const Composition &c, long n) {
    return nested_generic<Rat>((int)c.size(), n, true, Rat(1),
        [&](int j, long m) { return rat_pow(Rat(1, m), c[j - 1]); });
}

Rat t_n(const Composition &c, long n) {
    return nested_generic<Rat>((int)c.size(), n, false, Rat(1),
        [&](int j, long m) { return rat_pow(Rat(1, 2 * m - 1), c[j - 1]); });
}

Rat t_star_n(const Composition &c, long n) {
    return nested_generic<Rat>((int)c.size(), n, true, Rat(1),
        [&](int j, long m) { return rat_pow(Rat(1, 2 * m - 1), c[j - 1]); });
}

static GaussRat tw_pow(Tw t, long m) {
    static const int e[4] = {0, 2, 1, 3}; // exponent of i for P1,M1,I,MI
    switch ((e[(int)t] * (m % 4)) % 4) {
    case 0: return GaussRat(Rat(1));
    case 1: return GaussRat(Rat(0), Rat(1));
    case 2: return GaussRat(Rat(-1));
    default: return GaussRat(Rat(0), Rat(-1));
    }
}

GaussRat zeta_n_tw(const TComp &c, long n, bool star) {
    return nested_generic<GaussRat>((int)c.parts.size(), n, star, GaussRat(Rat(1)),
        [&](int j, long m) {
            return tw_pow(c.twists[j - 1], m) *
                   GaussRat(rat_pow(Rat(1, m), c.parts[j - 1]));
        });
}

GaussRat t_n_tw(const TComp &c, long n, bool star) {
    return nested_generic<GaussRat>((int)c.parts.size(), n, star, GaussRat(Rat(1)),
        [&](int j, long m) {
            return tw_pow(c.twists[j - 1], m) *
                   GaussRat(rat_pow(Rat(1, 2 * m - 1), c.parts[j - 1]));
        });
}

Rat zeta_n_alpha(const Composition &c, long n, const Rat &alpha, bool star) {
    if (alpha <= 0 && denominator(alpha) == 1)
        throw std::invalid_argument("zeta_n_alpha: alpha must avoid 0,-1,-2,...");
    return nested_generic<Rat>((int)c.size(), n, star, Rat(1),
        [&](int j, long m) { return rat_pow(1 / (m + alpha - 1), c[j - 1]); });
}

XReal zeta_star_n_x(const Composition &c, long n, const XReal &x) {
    int r = (int)c.size();
    return nested_generic<XReal>(r, n, true, XReal(1),
        [&](int j, long m) {
            XReal t = pow_int(XReal(m), -c[j - 1]);
            if (j == r) t *= pow_int(x, m);
            return t;
        });
}

XReal t_star_n_x(const Composition &c, long n, const XReal &x) {
    int r = (int)c.size();
    return nested_generic<XReal>(r, n, true, XReal(1),
        [&](int j, long m) {
            XReal t = pow_int(XReal(2 * m - 1), -c[j - 1]);
            if (j == r) t *= pow_int(x, 2 * m - 1);
            return t;
        });
}

Rat bell_partial(int n, int k, const std::vector<Rat> &xs) {
    if (k < 0 || k > n) return 0;
    if (k > 0 && (int)xs.size() < n - k + 1)
        throw std::invalid_argument("bell_partial: need n-k+1 inputs");
    // B[m][j]
    std::vector<std::vector<Rat>> B(n + 1, std::vector<Rat>(k + 1, Rat(0)));
    B[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= std::min(m, k); ++j) {
            Rat s = 0;
            for (int i = 1; i <= std::min<int>(m - j + 1, (int)xs.size()); ++i)
                s += Rat(binomial(m - 1, i - 1)) * xs[i - 1] * B[m - i][j - 1];
            B[m][j] = s;
        }
    return B[n][k];
}

Rat central_binomial(long n) { return Rat(binomial(2 * n, n)) / rat_pow(Rat(4), (int)n); }

Rat beta_half(long n) {
    return 2 / (Rat(2 * n + 1) * central_binomial(n));
}

Rat a_coeff(long n, int k) {
    return rat_pow(Rat(2), k) * central_binomial(n) *
           t_n(Composition(k, 1), n);
}

Rat a_coeff_convolution(long n, int k) {
    if (k == 0) return central_binomial(n);
    Composition ones(k - 1, 1);
    Rat s = zeta_n(ones, n - 1) / n;
    for (long i = 1; i < n; ++i)
        s += zeta_n(ones, i - 1) / i * central_binomial(n - i);
    return s;
}

Rat a_coeff_recurrence(long n, int k) {
    std::vector<Rat> a(k + 1);
    a[0] = central_binomial(n);
    for (int j = 1; j <= k; ++j) {
        Rat s = 0;
        for (int i = 0; i < j; ++i) {
            Rat term = rat_pow(Rat(2), j - i) * a[i] * t_n(Composition{j - i}, n);
            s += (i % 2 ? -term : term);
        }
        a[j] = (j % 2 ? s : -s) / j; // (-1)^{j-1}/j
    }
    return a[k];
}

ABPair AB_sequences(const std::vector<GaussRat> &xs, int m, bool barred) {
    int n = (int)xs.size();
    ABPair out;
    out.A.assign(m + 1, GaussRat(Rat(0)));
    out.B.assign(m + 1, GaussRat(Rat(0)));
    // power sums p_s = sum_k x_k^s
    std::vector<GaussRat> p(m + 1, GaussRat(Rat(0)));
    for (int s = 1; s <= m; ++s)
        for (int k = 0; k < n; ++k) {
            GaussRat v(Rat(1));
            for (int t = 0; t < s; ++t) v *= xs[k];
            p[s] += v;
        }
    out.A[0] = GaussRat(Rat(1));
    for (int mm = 1; mm <= m; ++mm) {
        GaussRat s(Rat(0));
        for (int i = 0; i < mm; ++i) {
            GaussRat term = out.A[i] * GaussRat(Rat(1, factorial(i).convert_to<long long>())) * p[mm - i];
            if (barred && i % 2) term = -term;
            s += term;
        }
        GaussRat fac(Rat(factorial(mm - 1)));
        if (barred && (mm - 1) % 2) fac = -fac;
        out.A[mm] = fac * s;
    }
    for (int mm = 0; mm <= m; ++mm)
        out.B[mm] = nested_generic<GaussRat>(mm, n, !barred, GaussRat(Rat(1)),
            [&](int, long k) { return xs[k - 1]; });
    return out;
}

std::vector<XReal> b_sequence(int jmax) {
    std::vector<XReal> b(jmax + 1);
    b[0] = 1;
    for (int j = 1; j <= jmax; ++j) {
        XReal s = 0;
        for (int l = 1; l <= j; ++l)
            s += pow_int(XReal(2), l) * b[j - l] * zeta_bar(l);
        b[j] = -s / j;
    }
    return b;
}

PartialFrac partial_frac(int p, int q) {
    PartialFrac out;
    out.a.assign(p + 1, Rat(0));
    out.b.assign(q + 1, Rat(0));
    // Taylor of (n+1)^{-q} (2n+1)^{-1} at n=0, coefficients h_0..h_{p-1}
    {
        std::vector<Rat> f(p), g(p), h(p, Rat(0));
        for (int s = 0; s < p; ++s) {
            f[s] = s == 0 ? Rat(1) : Rat(binomial(q + s - 1, s));
            if (s % 2) f[s] = -f[s];
            g[s] = rat_pow(Rat(-2), s);
        }
        for (int s = 0; s < p; ++s)
            for (int t = 0; t <= s; ++t) h[s] += f[t] * g[s - t];
        for (int i = 1; i <= p; ++i) out.a[i] = h[p - i];
    }
    // Taylor of n^{-p} (2n+1)^{-1} at n=-1 in u=n+1, coefficients g_0..g_{q-1}
    {
        std::vector<Rat> f(q), g(q), h(q, Rat(0));
        for (int s = 0; s < q; ++s) {
            f[s] = s == 0 ? Rat(1) : Rat(binomial(p + s - 1, s)); // (1-u)^{-p} coefficients
            if (p % 2) { /* (-1)^p factor applied below */ }
            g[s] = -rat_pow(Rat(2), s); // -(1-2u)^{-1}
        }
        for (int s = 0; s < q; ++s)
            for (int t = 0; t <= s; ++t) h[s] += f[t] * g[s - t];
        Rat sign = (p % 2) ? Rat(-1) : Rat(1);
        for (int j = 1; j <= q; ++j) out.b[j] = sign * h[q - j];
    }
    out.e = rat_pow(Rat(-2), p) * rat_pow(Rat(2), q);
    return out;
}

} // namespace zetalab
