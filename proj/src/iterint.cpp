#include "zetalab/iterint.hpp"

#include <map>
#include <mutex>

namespace zetalab {

namespace {

// dt/t (over_t) or dt/(xi - t)
struct GenLetter {
    bool over_t;
    XComplex xi;
};
using GenWord = std::vector<GenLetter>;

constexpr int kSeriesN = 240;      // series length at pole ratio >= kRho
const double kRho = 1.9;           // minimum |pole| for direct series
constexpr int kMaxDepth = 400;

// F(u) = sum c_n u^n on (0,1), value at u=1, all poles with |xi| >= kRho.
XComplex series_eval(const GenWord &w) {
    std::vector<XComplex> c(kSeriesN + 1), out(kSeriesN + 1);
    c[0] = XComplex(1);
    for (const GenLetter &l : w) {
        if (l.over_t) {
            // int F(s)/s ds : c_n -> c_n/n (c_0 must vanish)
            for (int n = kSeriesN; n >= 1; --n) c[n] = c[n] / XReal(n);
            c[0] = XComplex(0);
        } else {
            // int F(s)/(xi - s) ds with h_n = (h_{n-1} + c_n)/xi
            XComplex h(0);
            for (int n = 0; n <= kSeriesN; ++n) {
                out[n] = (n == 0) ? XComplex(0) : h / XReal(n);
                h = (h + c[n]) / l.xi;
            }
            std::swap(c, out);
        }
    }
    XComplex s(0);
    for (int n = 0; n <= kSeriesN; ++n) s += c[n];
    return s;
}

XReal min_pole(const GenWord &w, const XReal &scale) {
    // smallest |xi|/scale over pole letters; over_t letters don't constrain
    XReal m = -1;
    for (const GenLetter &l : w) {
        if (l.over_t) continue;
        XReal a = abs(l.xi) / scale;
        if (m < 0 || a < m) m = a;
    }
    return m; // -1 when no pole letters
}

bool is_one(const XComplex &z) { return z.im == 0 && z.re == 1; }

// t -> 1-s reverses the word; per letter the -ds cancels against the limit
// reversal, so dt/t -> ds/(1-s), dt/(1-t) -> ds/s, and only the generic pole
// picks a sign: dt/(xi-t) -> -ds/((1-xi) - s).
std::pair<GenWord, int> reflect(const GenWord &w) {
    GenWord r;
    int sign = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (it->over_t) {
            r.push_back({false, XComplex(1)});
        } else if (is_one(it->xi)) {
            r.push_back({true, XComplex(0)});
        } else {
            r.push_back({false, XComplex(1) - it->xi});
            sign = -sign;
        }
    }
    return {std::move(r), sign};
}

GenWord subword(const GenWord &w, size_t i, size_t j) {
    return GenWord(w.begin() + i, w.begin() + j);
}

XComplex seg_eval(const GenWord &w, const XReal &a, const XReal &b, int depth);

// Convolution over the fixed interior cut points pts (ascending) in (lo,hi).
XComplex conv_eval(const GenWord &w, const std::vector<XReal> &pts, size_t pi,
                   const XReal &lo, const XReal &hi, int depth) {
    if (pi == pts.size()) return seg_eval(w, lo, hi, depth);
    const XReal &c = pts[pi];
    XComplex s(0);
    for (size_t j = 0; j <= w.size(); ++j)
        s += seg_eval(subword(w, 0, j), lo, c, depth) *
             conv_eval(subword(w, j, w.size()), pts, pi + 1, c, hi, depth);
    return s;
}

XComplex seg_eval(const GenWord &w, const XReal &a, const XReal &b, int depth) {
    if (w.empty()) return XComplex(1);
    if (depth > kMaxDepth)
        throw std::runtime_error("iterint: segment recursion did not terminate");
    if (a == 0 && b == 1) {
        std::vector<XReal> half{XReal(1) / 2};
        return conv_eval(w, half, 0, XReal(0), XReal(1), depth + 1);
    }
    if (b == 1) {
        auto [r, sign] = reflect(w);
        XComplex v = seg_eval(r, XReal(0), 1 - a, depth + 1);
        return sign < 0 ? -v : v;
    }
    if (a == 0) {
        if (w.front().over_t)
            throw std::invalid_argument("iterint: divergent at the lower end");
        XReal mp = min_pole(w, b);
        if (mp < 0 || mp >= kRho) {
            GenWord scaled = w;
            for (auto &l : scaled)
                if (!l.over_t) l.xi = l.xi / b;
            return series_eval(scaled);
        }
        XReal m = b / 2;
        XComplex s(0);
        for (size_t j = 0; j <= w.size(); ++j)
            s += seg_eval(subword(w, 0, j), XReal(0), m, depth + 1) *
                 seg_eval(subword(w, j, w.size()), m, b, depth + 1);
        return s;
    }
    // interior segment: affine map to (0,1)
    XReal len = b - a;
    GenWord mapped;
    int sign = 1;
    for (const GenLetter &l : w) {
        if (l.over_t) {
            mapped.push_back({false, XComplex(-a / len)});
            sign = -sign;
        } else {
            mapped.push_back({false, (l.xi - XComplex(a)) / XReal(len)});
        }
    }
    if (min_pole(mapped, XReal(1)) >= kRho) {
        XComplex v = series_eval(mapped);
        return sign < 0 ? -v : v;
    }
    XReal m = (a + b) / 2;
    XComplex s(0);
    for (size_t j = 0; j <= w.size(); ++j)
        s += seg_eval(subword(w, 0, j), a, m, depth + 1) *
             seg_eval(subword(w, j, w.size()), m, b, depth + 1);
    return s;
}

GenLetter to_gen(Letter l) {
    switch (l) {
    case Letter::W0: return {true, XComplex(0)};
    case Letter::W1: return {false, XComplex(1)};
    case Letter::Wm1: return {false, XComplex(-1)};
    case Letter::Wi: return {false, XComplex::i()};
    default: return {false, -XComplex::i()};
    }
}

GenWord to_gen(const Word &w) {
    GenWord g;
    g.reserve(w.size());
    for (Letter l : w) g.push_back(to_gen(l));
    return g;
}

} // namespace

XComplex iterint(const Word &w) {
    if (!word_admissible(w))
        throw std::invalid_argument("iterint: word is divergent");
    return seg_eval(to_gen(w), XReal(0), XReal(1), 0);
}

XComplex iterint(const WLinComb &lc) {
    XComplex s(0);
    for (const auto &[w, c] : lc) s += to_xcomplex(c) * iterint(w);
    return s;
}

XComplex iterint_with_cuts(const Word &w, const std::vector<XReal> &cuts) {
    if (!word_admissible(w))
        throw std::invalid_argument("iterint: word is divergent");
    return conv_eval(to_gen(w), cuts, 0, XReal(0), XReal(1), 0);
}

XComplex iterint_segment(const Word &w, const XReal &a, const XReal &b) {
    if (a == 0 && !w.empty() && w.front() == Letter::W0)
        throw std::invalid_argument("iterint: divergent at the lower end");
    if (b == 1 && !w.empty() && w.back() == Letter::W1)
        throw std::invalid_argument("iterint: divergent at the upper end");
    return seg_eval(to_gen(w), a, b, 0);
}

static Letter twist_letter(Tw t) {
    switch (t) {
    case Tw::P1: return Letter::W1;
    case Tw::M1: return Letter::Wm1;
    case Tw::I: return Letter::Wi;
    default: return Letter::Wmi;
    }
}

// word of zeta(k; z), lower-endpoint first:
//   [ w_{y_r}, w0^{k_r-1}, ..., w_{y_1}, w0^{k_1-1} ],  y_j = (z_1...z_j)^{-1}
static Word cmzv_word(const TComp &tc) {
    int r = tc.depth();
    std::vector<Tw> y(r);
    Tw run = Tw::P1;
    for (int j = 0; j < r; ++j) {
        run = tw_mul(run, tc.twists[j]);
        y[j] = tw_conj(run);
    }
    Word w;
    for (int j = r - 1; j >= 0; --j) {
        w.push_back(twist_letter(y[j]));
        for (int t = 1; t < tc.parts[j]; ++t) w.push_back(Letter::W0);
    }
    return w;
}

XComplex cmzv(const TComp &tc) {
    if (!is_admissible_mzv(tc))
        throw std::invalid_argument("cmzv: divergent composition");
    if (tc.depth() == 0) return XComplex(1);
    static std::map<std::string, XComplex> cache;
    static std::mutex mu;
    std::string key = print_comp(tc);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    XComplex v = iterint(cmzv_word(tc));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(std::move(key), v);
    return v;
}

XComplex mtv(const TComp &tc) {
    if (!is_admissible_t(tc))
        throw std::invalid_argument("mtv: divergent composition");
    for (Tw t : tc.twists)
        if (t == Tw::I || t == Tw::MI)
            throw std::invalid_argument("mtv: twists must be +-1");
    if (tc.depth() == 0) return XComplex(1);
    static std::map<std::string, XComplex> cache;
    static std::mutex mu;
    std::string key = print_comp(tc);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // lower-endpoint first: innermost letter tau_r dt/(1-tau_r t^2), then
    // w0^{k_r-1}; outer blocks tau_j t dt/(1-tau_j t^2), w0^{k_j-1},
    // tau_j = sigma_1...sigma_j.
    int r = tc.depth();
    std::vector<int> tau(r, 1);
    int run = 1;
    for (int j = 0; j < r; ++j) {
        run *= (tc.twists[j] == Tw::M1) ? -1 : 1;
        tau[j] = run;
    }
    WLinComb acc = {{Word{}, GaussRat(1)}};
    auto append = [&](const WLinComb &img) {
        WLinComb next;
        for (const auto &[pref, cp] : acc)
            for (const auto &[one, cl] : img) {
                Word ext = pref;
                ext.insert(ext.end(), one.begin(), one.end());
                auto it = next.find(ext);
                GaussRat add = cp * cl;
                if (it == next.end()) next.emplace(std::move(ext), add);
                else it->second += add;
            }
        acc = std::move(next);
    };
    auto append_letter = [&](ExtLetter l, int coef) {
        WLinComb img = expand_letter(l);
        if (coef < 0)
            for (auto &[w, c] : img) c = -c;
        append(img);
    };
    for (int j = r - 1; j >= 0; --j) {
        if (j == r - 1)
            append_letter(tau[j] > 0 ? ExtLetter::DtM : ExtLetter::DtP, tau[j]);
        else
            append_letter(tau[j] > 0 ? ExtLetter::TdtM : ExtLetter::TdtP, tau[j]);
        WLinComb zeros = {{Word(tc.parts[j] - 1, Letter::W0), GaussRat(1)}};
        append(zeros);
    }
    XComplex v = iterint(acc);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(std::move(key), v);
    return v;
}

static bool fourth_root(const XComplex &z, Tw &out) {
    if (z.im == 0 && z.re == 1) out = Tw::P1;
    else if (z.im == 0 && z.re == -1) out = Tw::M1;
    else if (z.re == 0 && z.im == 1) out = Tw::I;
    else if (z.re == 0 && z.im == -1) out = Tw::MI;
    else return false;
    return true;
}

XComplex li(const Composition &c, const std::vector<XComplex> &z) {
    if (c.size() != z.size())
        throw std::invalid_argument("li: composition/argument length mismatch");
    if (c.empty()) return XComplex(1);
    {
        TComp tc{c, {}};
        bool all_roots = true;
        for (const XComplex &zz : z) {
            Tw t;
            if (!fourth_root(zz, t)) { all_roots = false; break; }
            tc.twists.push_back(t);
        }
        if (all_roots) return cmzv(tc);
    }
    // direct nested series; requires |z_1...z_j| < 1 for all j
    int r = (int)c.size();
    XReal rho = 0;
    XComplex prod(1);
    for (int j = 0; j < r; ++j) {
        prod = prod * z[j];
        XReal a = abs(prod);
        if (a > rho) rho = a;
    }
    if (rho >= XReal(999) / 1000)
        throw std::invalid_argument("li: argument products too close to 1");
    long N = (long)((kWorkingDigits + 8) * 2.303 / -(double)log(rho)) + 60;
    std::vector<XComplex> suf(r + 1), pw(r, XComplex(1));
    suf[r] = XComplex(1);
    for (long m = 1; m <= N; ++m) {
        for (int j = 0; j < r; ++j) pw[j] = pw[j] * z[j];
        for (int j = 0; j < r; ++j) {
            XComplex term = pw[j] / pow_int(XReal(m), c[j]);
            suf[j] += term * suf[j + 1];
        }
    }
    return suf[0];
}

XComplex li_x(const Composition &c, const XReal &x) {
    if (x <= 0 || x > 1) throw std::invalid_argument("li_x: 0 < x <= 1 required");
    if (x == 1) return cmzv(untwisted(c));
    Word w;
    for (int j = (int)c.size() - 1; j >= 0; --j) {
        w.push_back(Letter::W1);
        for (int t = 1; t < c[j]; ++t) w.push_back(Letter::W0);
    }
    return iterint_segment(w, XReal(0), x);
}

XReal mmv(const Composition &c, const std::vector<int> &eps) {
    if (c.size() != eps.size())
        throw std::invalid_argument("mmv: composition/sign length mismatch");
    int r = (int)c.size();
    XComplex s(0);
    for (int mask = 0; mask < (1 << r); ++mask) {
        TComp tc{c, std::vector<Tw>(r, Tw::P1)};
        int coef = 1;
        for (int j = 0; j < r; ++j)
            if (mask & (1 << j)) {
                tc.twists[j] = Tw::M1;
                coef *= eps[j];
            }
        XComplex v = cmzv(tc);
        s += (coef < 0) ? -v : v;
    }
    if (abs(s.im) > pow_int(XReal(10), -30))
        throw std::runtime_error("mmv: unexpected imaginary part");
    return s.re;
}

XReal rvalue(const Composition &c) {
    if (c.empty() || c[0] < 2)
        throw std::invalid_argument("rvalue: k1 >= 2 required");
    int r = (int)c.size();
    XComplex s(0);
    for (int mask = 0; mask < (1 << r); ++mask) {
        TComp tc{c, std::vector<Tw>(r, Tw::P1)};
        for (int j = 0; j < r; ++j)
            if (mask & (1 << j)) tc.twists[j] = Tw::M1;
        XComplex v = cmzv(tc);
        s += (mask & 1) ? -v : v;
    }
    if (abs(s.im) > pow_int(XReal(10), -30))
        throw std::runtime_error("rvalue: unexpected imaginary part");
    return to_xreal(rat_pow2(weight(c) - r)) * s.re;
}

} // namespace zetalab
