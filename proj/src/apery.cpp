#include "zetalab/apery.hpp"

#include <cmath>
#include <deque>
#include <memory>
#include <sstream>

namespace zetalab {
namespace {

// ---------------------------------------------------------------------------
// incremental harmonic-sum streams
// ---------------------------------------------------------------------------

// Suffix sums S[j] = f_n(k_{j+1}..k_r); S[r] = 1.  Advancing n by one adds the
// n_1 = n slice: non-star uses the previous suffix (strict descent), star the
// already-updated one (weak descent), so the update direction differs.
struct HStream {
    bool tkind = false, star = false;
    Composition c;
    std::vector<XReal> S;
    long n = 0;

    void init(bool tk, bool st, Composition comp) {
        tkind = tk;
        star = st;
        c = std::move(comp);
        S.assign(c.size() + 1, XReal(0));
        S[c.size()] = 1;
        n = 0;
    }
    void advance() {
        ++n;
        long base = tkind ? 2 * n - 1 : n;
        int r = (int)c.size();
        if (!star) {
            for (int j = 0; j < r; ++j)
                S[j] += S[j + 1] / pow_int(XReal(base), c[j]);
        } else {
            for (int j = r - 1; j >= 0; --j)
                S[j] += S[j + 1] / pow_int(XReal(base), c[j]);
        }
    }
    void advance_to(long target) {
        while (n < target) advance();
    }
    const XReal &value() const { return S[0]; }
};

// State for generating successive term magnitudes of a series spec.
struct TermGen {
    SeriesSpec spec;
    long n = 0;        // current index (term() valid after first step())
    XReal binom = 1;   // C(2n,n)/4^n
    std::vector<HStream> streams;

    explicit TermGen(const SeriesSpec &s) : spec(s) {
        streams.resize(spec.factors.size());
        for (size_t i = 0; i < spec.factors.size(); ++i) {
            const auto &f = spec.factors[i];
            streams[i].init(f.tkind, f.star, f.comp);
        }
    }
    // advance to index m and return the unsigned term there
    XReal term_at(long m) {
        while (n < m) {
            ++n;
            if (spec.binom_power != 0)
                binom = binom * (2 * n - 1) / (2 * n);
        }
        XReal t = pow_int(binom, spec.binom_power);
        for (size_t i = 0; i < spec.factors.size(); ++i) {
            streams[i].advance_to(n + spec.factors[i].offset);
            t *= streams[i].value();
        }
        long d = spec.denom_base == DenomBase::N          ? n
                 : spec.denom_base == DenomBase::NPlus1   ? n + 1
                                                          : 2 * n + 1;
        return t / pow_int(XReal(d), spec.denom_exp);
    }
};

int log_power_budget(const SeriesSpec &spec) {
    // log powers in the tail come from weight-1 parts of the factors (each
    // contributes one harmonic-number log); capped by what em_tail supports.
    int ones = 0;
    for (const auto &f : spec.factors)
        for (int k : f.comp)
            if (k == 1) ++ones;
    return std::min(ones, 5);
}

// Least-squares fit of samples (n_i, y_i) against n^{-(s0+j/2)} log^l n and
// the resulting extrapolated tail sum_{n>N}.
XReal fitted_tail(const std::vector<std::pair<long, XReal>> &samples,
                  const XReal &s0, int lmax, long N) {
    const int jmax = 5;
    struct Basis {
        XReal sigma;
        int l;
    };
    std::vector<Basis> basis;
    for (int j = 0; j < jmax; ++j)
        for (int l = 0; l <= lmax; ++l)
            basis.push_back({s0 + XReal(j) / 2, l});
    size_t B = basis.size(), S = samples.size();
    if (S < B + 4) return XReal(0);

    // design matrix, columns scaled to unit max for conditioning
    std::vector<std::vector<XReal>> A(S, std::vector<XReal>(B));
    std::vector<XReal> scale(B, XReal(0));
    for (size_t i = 0; i < S; ++i) {
        XReal ln = log(XReal(samples[i].first));
        for (size_t a = 0; a < B; ++a) {
            XReal v = exp(-basis[a].sigma * ln) * pow_int(ln, basis[a].l);
            A[i][a] = v;
            if (abs(v) > scale[a]) scale[a] = abs(v);
        }
    }
    for (size_t a = 0; a < B; ++a)
        for (size_t i = 0; i < S; ++i) A[i][a] /= scale[a];

    // Least squares by modified Gram-Schmidt QR (normal equations square the
    // condition number of this nearly-collinear basis and lose the tail).
    std::vector<XReal> y(S);
    for (size_t i = 0; i < S; ++i) y[i] = samples[i].second;
    std::vector<std::vector<XReal>> R(B, std::vector<XReal>(B, XReal(0)));
    std::vector<bool> kept(B, true);
    XReal drop = sqrt(XReal(S)) * XReal("1e-16");
    for (size_t a = 0; a < B; ++a) {
        for (size_t b = 0; b < a; ++b) {
            if (!kept[b]) continue;
            XReal d = 0;
            for (size_t i = 0; i < S; ++i) d += A[i][b] * A[i][a];
            R[b][a] = d;
            for (size_t i = 0; i < S; ++i) A[i][a] -= d * A[i][b];
        }
        XReal nrm = 0;
        for (size_t i = 0; i < S; ++i) nrm += A[i][a] * A[i][a];
        nrm = sqrt(nrm);
        // numerically dependent direction: freeze its coefficient at zero
        if (nrm < drop) {
            kept[a] = false;
            for (size_t i = 0; i < S; ++i) A[i][a] = 0;
            R[a][a] = 1;
            continue;
        }
        R[a][a] = nrm;
        for (size_t i = 0; i < S; ++i) A[i][a] /= nrm;
    }
    std::vector<XReal> qty(B, XReal(0));
    for (size_t a = 0; a < B; ++a)
        if (kept[a])
            for (size_t i = 0; i < S; ++i) qty[a] += A[i][a] * y[i];
    std::vector<XReal> coef(B);
    for (size_t r = B; r-- > 0;) {
        XReal v = qty[r];
        for (size_t cc = r + 1; cc < B; ++cc) v -= R[r][cc] * coef[cc];
        coef[r] = kept[r] ? v / R[r][r] : XReal(0);
    }

    XReal tail = 0;
    for (size_t a = 0; a < B; ++a)
        tail += coef[a] / scale[a] * em_tail(basis[a].sigma, basis[a].l, N);
    return tail;
}

} // namespace

// ---------------------------------------------------------------------------
// grammar
// ---------------------------------------------------------------------------

SeriesSpec parse_series_spec(const std::string &text) {
    SeriesSpec spec;
    spec.denom_exp = 0;
    bool got_binom = false, got_denom = false;
    std::istringstream is(text);
    std::string tok;
    auto fail = [&](const std::string &m) {
        throw ParseError("series spec: " + m + " in token '" + tok + "'", 0);
    };
    while (is >> tok) {
        if (tok.rfind("binom:", 0) == 0) {
            try {
                spec.binom_power = std::stoi(tok.substr(6));
            } catch (...) {
                fail("bad binomial power");
            }
            if (spec.binom_power < -2 || spec.binom_power > 2)
                fail("binomial power outside [-2,2]");
            got_binom = true;
        } else if (tok.rfind("denom:", 0) == 0) {
            std::string body = tok.substr(6);
            auto caret = body.find('^');
            std::string base = body.substr(0, caret);
            if (base == "n")
                spec.denom_base = DenomBase::N;
            else if (base == "n1")
                spec.denom_base = DenomBase::NPlus1;
            else if (base == "2n1")
                spec.denom_base = DenomBase::TwoNPlus1;
            else
                fail("unknown denominator base");
            if (caret == std::string::npos)
                spec.denom_exp = 1;
            else {
                try {
                    spec.denom_exp = std::stoi(body.substr(caret + 1));
                } catch (...) {
                    fail("bad denominator exponent");
                }
            }
            if (spec.denom_exp < 0) fail("negative denominator exponent");
            got_denom = true;
        } else if (tok == "sign:alt") {
            spec.alternating = true;
        } else if (tok.rfind("start:", 0) == 0) {
            try {
                spec.start = std::stol(tok.substr(6));
            } catch (...) {
                fail("bad start index");
            }
        } else if (tok.rfind("f:", 0) == 0) {
            std::string body = tok.substr(2);
            SeriesFactor f;
            size_t pos = 0;
            if (body.rfind("z*", 0) == 0) {
                f.tkind = false, f.star = true, pos = 2;
            } else if (body.rfind("t*", 0) == 0) {
                f.tkind = true, f.star = true, pos = 2;
            } else if (body.rfind("z", 0) == 0) {
                f.tkind = false, f.star = false, pos = 1;
            } else if (body.rfind("t", 0) == 0) {
                f.tkind = true, f.star = false, pos = 1;
            } else
                fail("unknown factor kind");
            if (pos >= body.size() || body[pos] != '(')
                fail("expected '(' after factor kind");
            auto close = body.find(')', pos);
            if (close == std::string::npos) fail("unterminated composition");
            std::string cs = body.substr(pos + 1, close - pos - 1);
            if (!cs.empty()) {
                TComp tc = parse_comp(cs);
                if (!tc.untwisted()) fail("factor composition must be untwisted");
                f.comp = tc.parts;
            }
            std::string rest = body.substr(close + 1);
            if (rest.empty())
                f.offset = 0;
            else if (rest == "@-1")
                f.offset = -1;
            else if (rest == "@0")
                f.offset = 0;
            else if (rest == "@+1" || rest == "@1")
                f.offset = 1;
            else
                fail("bad offset (allowed: @-1, @0, @+1)");
            spec.factors.push_back(std::move(f));
        } else {
            fail("unknown token");
        }
    }
    if (!got_binom || !got_denom)
        throw ParseError("series spec: binom: and denom: are required", 0);
    return spec;
}

std::string print_series_spec(const SeriesSpec &spec) {
    std::ostringstream os;
    os << "binom:" << spec.binom_power << " denom:";
    os << (spec.denom_base == DenomBase::N        ? "n"
           : spec.denom_base == DenomBase::NPlus1 ? "n1"
                                                  : "2n1");
    os << "^" << spec.denom_exp;
    if (spec.alternating) os << " sign:alt";
    for (const auto &f : spec.factors) {
        os << " f:" << (f.tkind ? "t" : "z") << (f.star ? "*" : "") << "("
           << print_comp(f.comp) << ")";
        if (f.offset) os << "@" << (f.offset > 0 ? "+1" : "-1");
    }
    if (spec.start >= 0) os << " start:" << spec.start;
    return os.str();
}

long series_start(const SeriesSpec &spec) {
    if (spec.start >= 0) return spec.start;
    long n0 = spec.denom_base == DenomBase::N ? 1 : 0;
    for (const auto &f : spec.factors) {
        long need = f.comp.empty() ? 0
                    : f.star       ? 1
                                   : (long)f.comp.size();
        n0 = std::max(n0, need - f.offset);
    }
    return std::max(n0, 0L);
}

// ---------------------------------------------------------------------------
// direct summation + tail extrapolation
// ---------------------------------------------------------------------------

SeriesResult eval_series(const SeriesSpec &spec, int target_digits,
                         long budget) {
    // decay exponent of the unsigned term, up to log factors
    XReal s0 = XReal(spec.binom_power) / 2 + spec.denom_exp;
    if (!spec.alternating && s0 <= 1)
        throw std::invalid_argument("series spec does not converge: " +
                                    print_series_spec(spec));
    if (spec.alternating && s0 <= 0)
        throw std::invalid_argument("series spec does not converge: " +
                                    print_series_spec(spec));

    long n0 = series_start(spec);
    XReal tol = pow_int(XReal(10), -(long)target_digits);

    if (spec.alternating) {
        // sum_{n>=n0} (-1)^n |term| = (-1)^{n0} sum_{k>=0} (-1)^k |term(n0+k)|
        auto gen = std::make_shared<TermGen>(spec);
        auto cache = std::make_shared<std::vector<XReal>>();
        auto a = [gen, cache, n0](long k) -> XReal {
            while ((long)cache->size() <= k)
                cache->push_back(gen->term_at(n0 + (long)cache->size()));
            return (*cache)[k];
        };
        XReal aerr;
        XReal v = accel_alternating(a, target_digits + 5, &aerr);
        if (n0 % 2) v = -v;
        return {v, aerr, (long)cache->size()};
    }

    TermGen gen(spec);
    int lmax = log_power_budget(spec);
    XReal partial = 0;
    long summed = n0 - 1;
    XReal prev;
    bool have_prev = false;
    XReal best_err = 1;
    XReal value = 0;
    long N = std::max<long>(1024, n0 + 64);
    for (;;) {
        std::vector<std::pair<long, XReal>> window;
        long lo = std::max(N / 2 + 1, n0);
        long stride = std::max<long>(1, (N - lo) / 400);
        for (long n = summed + 1; n <= N; ++n) {
            XReal t = gen.term_at(n);
            partial += t;
            if (n >= lo && (n - lo) % stride == 0) window.emplace_back(n, t);
        }
        summed = N;
        XReal est = partial;
        if (N >= 64 + n0) est += fitted_tail(window, s0, lmax, N);
        if (have_prev) {
            XReal diff = abs(est - prev);
            if (diff < best_err || best_err == 1) {
                best_err = diff;
                value = est;
            }
            if (diff <= tol) return {est, diff, summed - n0 + 1};
        } else {
            value = est;
        }
        prev = est;
        have_prev = true;
        if (2 * N > budget) break;
        N *= 2;
    }
    return {value, best_err, summed - n0 + 1};
}

// ---------------------------------------------------------------------------
// registered integral routes
// ---------------------------------------------------------------------------

namespace {

// count of parts when all equal v, -1 otherwise; empty -> 0
int uniform_count(const Composition &c, int v) {
    for (int k : c)
        if (k != v) return -1;
    return (int)c.size();
}

XReal factorial_x(int n) {
    XReal f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int parity_sign(int e) { return e % 2 ? -1 : 1; }

// single-letter combinations used by the square-root word rewrites:
// pulled back images of dt/sqrt(1-t^2) type forms on the level-4 alphabet
using LetterComb = std::vector<std::pair<Letter, int>>;
const LetterComb kV = {{Letter::Wm1, 1}, {Letter::W1, -1}};
const LetterComb kU = {{Letter::Wmi, 1}, {Letter::Wi, -1}};
const LetterComb kY = {{Letter::Wmi, 1},
                       {Letter::Wi, 1},
                       {Letter::Wm1, -1},
                       {Letter::W1, -1}};
const LetterComb kZ = {{Letter::W0, -1}, {Letter::Wmi, -1}, {Letter::Wi, -1}};

WLinComb append_letter(const WLinComb &in, const LetterComb &lc) {
    WLinComb out;
    for (const auto &[w, c] : in)
        for (const auto &[l, s] : lc) {
            Word nw = w;
            nw.push_back(l);
            out[nw] += c * GaussRat(s);
        }
    return out;
}

WLinComb letter_power(const LetterComb &lc, int e) {
    WLinComb r{{Word{}, GaussRat(1)}};
    for (int i = 0; i < e; ++i) r = append_letter(r, lc);
    return r;
}

struct FactorView {
    const SeriesFactor *f;
    int ones;  // -1 unless all parts are 1
    int twos;  // -1 unless all parts are 2
};

} // namespace

bool has_integral_route(const SeriesSpec &spec) {
    try {
        eval_series_integral(spec, nullptr);
        return true;
    } catch (const std::invalid_argument &) {
        return false;
    }
}

XReal eval_series_integral(const SeriesSpec &spec, XReal *err) {
    auto unmatched = [&]() -> std::invalid_argument {
        return std::invalid_argument("no integral route registered for: " +
                                     print_series_spec(spec));
    };
    if (spec.alternating || spec.start >= 0) throw unmatched();

    std::vector<FactorView> fs;
    for (const auto &f : spec.factors) {
        if (f.comp.empty()) continue; // constant 1
        fs.push_back({&f, uniform_count(f.comp, 1), uniform_count(f.comp, 2)});
    }
    const int p = spec.binom_power;
    const int M = spec.denom_exp;
    const DenomBase base = spec.denom_base;
    XReal qerr = 0;
    const XReal pi = const_pi();

    // -- plain central binomial over n^M with t_n(1_k):
    //    sum a_n t_n(1_k)/n^M
    //      = (-1)^{M-1+k}/(2^k (M-1)! k!) int log^{M-1}x log^k(1-x)/(x sqrt(1-x))
    //    (k = 0 uses the subtracted kernel 1/(sqrt(1-x)(1+sqrt(1-x))))
    if (p == 1 && base == DenomBase::N && M >= 1 &&
        (fs.empty() ||
         (fs.size() == 1 && fs[0].f->tkind && fs[0].ones >= 1 &&
          fs[0].f->offset == 0 && (!fs[0].f->star || fs[0].ones == 1)))) {
        int k = fs.empty() ? 0 : fs[0].ones;
        int m = M - 1;
        XReal v;
        if (k == 0) {
            v = integrate(
                [m](const XReal &x, const XReal &omx) {
                    XReal s = sqrt(omx);
                    XReal lx = m ? pow_int(log(x), m) : XReal(1);
                    return lx / (s * (1 + s));
                },
                EndpointSub::SqrtUpper, &qerr);
            v *= parity_sign(m) / factorial_x(m);
        } else {
            v = integrate(
                [m, k](const XReal &x, const XReal &omx) {
                    XReal lx = m ? pow_int(log(x), m) : XReal(1);
                    return lx * pow_int(log(omx), k) / (x * sqrt(omx));
                },
                EndpointSub::SqrtUpper, &qerr);
            v *= parity_sign(m + k) /
                 (pow_int(XReal(2), k) * factorial_x(m) * factorial_x(k));
        }
        if (err) *err = qerr;
        return v;
    }

    // -- sum a_n t_n(1_k) zeta*_n(1_m)/n
    //      = (-1)^{k+m}/(k! m! 2^k) int log^{m+k}(1-x)/(x sqrt(1-x))
    if (p == 1 && base == DenomBase::N && M == 1 && fs.size() == 2) {
        const FactorView *tf = nullptr, *zf = nullptr;
        for (const auto &fv : fs) {
            if (fv.f->tkind && fv.ones >= 1 && fv.f->offset == 0 &&
                (!fv.f->star || fv.ones == 1))
                tf = &fv;
            if (!fv.f->tkind && fv.f->star && fv.ones >= 1 && fv.f->offset == 0)
                zf = &fv;
        }
        if (tf && zf) {
            int k = tf->ones, m = zf->ones;
            XReal v = integrate(
                [m, k](const XReal &x, const XReal &omx) {
                    return pow_int(log(omx), m + k) / (x * sqrt(omx));
                },
                EndpointSub::SqrtUpper, &qerr);
            v *= parity_sign(m + k) /
                 (pow_int(XReal(2), k) * factorial_x(m) * factorial_x(k));
            if (err) *err = qerr;
            return v;
        }
    }

    // -- inverse central binomial with polylog kernel:
    //    sum 4^n/C(2n,n) t*_n(1_q) zeta_{n-1}(k_2..k_r)/n^{k_1+1}
    //      = 2^{|k|+1} sum over shuffles of the polylog word with q repeats of
    //        the 1/(1-t) letter, each word mapped through the half-integral
    //        identity to a multiple t-value
    if (p == -1 && base == DenomBase::N && M >= 2 && fs.size() <= 2) {
        const FactorView *tf = nullptr, *zf = nullptr;
        bool ok = true;
        for (const auto &fv : fs) {
            if (fv.f->tkind && fv.f->star && fv.ones >= 0 && fv.f->offset == 0 &&
                !tf)
                tf = &fv;
            else if (!fv.f->tkind && !fv.f->star && fv.f->offset == -1 && !zf)
                zf = &fv;
            else
                ok = false;
        }
        if (ok) {
            int q = tf ? tf->ones : 0;
            Composition bfk{M - 1};
            if (zf)
                bfk.insert(bfk.end(), zf->f->comp.begin(), zf->f->comp.end());
            // storage word of the polylog: blocks in reverse composition order
            Word wk;
            for (int j = (int)bfk.size() - 1; j >= 0; --j) {
                wk.push_back(Letter::W1);
                for (int i = 1; i < bfk[j]; ++i) wk.push_back(Letter::W0);
            }
            WLinComb sh = shuffle(wk, Word(q, Letter::W1));
            XReal v = 0;
            for (const auto &[w, c] : sh) {
                Composition blocks; // storage-order block lengths
                for (Letter l : w) {
                    if (l == Letter::W1)
                        blocks.push_back(1);
                    else
                        ++blocks.back();
                }
                Composition dual_in{1};
                dual_in.insert(dual_in.end(), blocks.begin(), blocks.end());
                XComplex tv = mtv(untwisted(hoffman_dual(dual_in)));
                v += to_xreal(c.re) * tv.re;
            }
            v *= pow_int(XReal(2), weight(bfk) + 1);
            if (err) *err = XReal("1e-24") * (1 + abs(v));
            return v;
        }
    }

    // -- squared central binomial over (n+1)^M:
    //    sum a_n^2/(n+1)^M = (-1)^{M-1} 2/(pi (M-1)!) int K(x) log^{M-1}x dx
    if (p == 2 && base == DenomBase::NPlus1 && fs.empty() && M >= 1) {
        int m = M - 1;
        XReal v = integrate(
            [m](const XReal &x, const XReal &omx) {
                (void)omx;
                XReal lx = m ? pow_int(log(x), m) : XReal(1);
                return elliptic_K(x) * lx;
            },
            m >= 1 ? EndpointSub::LogLower : EndpointSub::None, &qerr);
        v *= parity_sign(m) * 2 / (pi * factorial_x(m));
        if (err) *err = qerr;
        return v;
    }

    // -- sum a_n^2 zeta*_{n+1}(1_m)/(n+1)
    //      = (-1)^m 2/(pi m!) int K(x) log^m(1-x) dx
    if (p == 2 && base == DenomBase::NPlus1 && M == 1 && fs.size() == 1 &&
        !fs[0].f->tkind && fs[0].f->star && fs[0].ones >= 1 &&
        fs[0].f->offset == 1) {
        int m = fs[0].ones;
        XReal v = integrate(
            [m](const XReal &x, const XReal &omx) {
                return elliptic_K(x) * pow_int(log(omx), m);
            },
            EndpointSub::None, &qerr);
        v *= parity_sign(m) * 2 / (pi * factorial_x(m));
        if (err) *err = qerr;
        return v;
    }

    // -- squared central binomial over (2n+1)^M:
    //    sum a_n^2/(2n+1)^M
    //      = (-1)^{M-1}/(2^{M-1}(M-1)! pi) int K(x) log^{M-1}x/sqrt(x)
    if (p == 2 && base == DenomBase::TwoNPlus1 && fs.empty() && M >= 1) {
        int m = M - 1;
        XReal v = integrate(
            [m](const XReal &x, const XReal &omx) {
                (void)omx;
                XReal lx = m ? pow_int(log(x), m) : XReal(1);
                return elliptic_K(x) * lx / sqrt(x);
            },
            EndpointSub::SqrtLower, &qerr);
        v *= parity_sign(m) / (pow_int(XReal(2), m) * factorial_x(m) * pi);
        if (err) *err = qerr;
        return v;
    }

    // -- sum a_n t*_{n+1}(1_m)/(2n+1)
    //      = (-1)^m/(2^m m! pi) int K(1-x) log^m x/sqrt(x)
    if (p == 1 && base == DenomBase::TwoNPlus1 && M == 1 &&
        (fs.empty() ||
         (fs.size() == 1 && fs[0].f->tkind && fs[0].f->star && fs[0].ones >= 1 &&
          fs[0].f->offset == 1))) {
        int m = fs.empty() ? 0 : fs[0].ones;
        XReal v = integrate(
            [m](const XReal &x, const XReal &omx) {
                (void)omx;
                XReal lx = m ? pow_int(log(x), m) : XReal(1);
                return elliptic_Kc(x) * lx / sqrt(x); // K(1-x), complement x
            },
            EndpointSub::SqrtLower, &qerr);
        v *= parity_sign(m) / (pow_int(XReal(2), m) * factorial_x(m) * pi);
        if (err) *err = qerr;
        return v;
    }

    // -- squared central binomial with even t-weights over (2n+1)^M:
    //    sum a_n^2 t_n(2_{q-1})/(2n+1)^M
    //      = Re[(2i/pi)(-1)^{q+M} int v y^{M-1} u^{2q-1}]   (word letters)
    if (p == 2 && base == DenomBase::TwoNPlus1 && M >= 1 &&
        (fs.empty() ||
         (fs.size() == 1 && fs[0].f->tkind && !fs[0].f->star &&
          fs[0].twos >= 1 && fs[0].f->offset == 0))) {
        int q = fs.empty() ? 1 : fs[0].twos + 1;
        WLinComb comb{{Word{}, GaussRat(1)}};
        comb = append_letter(comb, kV);
        for (int i = 0; i < M - 1; ++i) comb = append_letter(comb, kY);
        for (int i = 0; i < 2 * q - 1; ++i) comb = append_letter(comb, kU);
        XComplex s = iterint(comb);
        XReal v = parity_sign(q + M) * 2 / pi * (-s.im); // Re(i s) = -Im s
        if (err) *err = XReal("1e-22") * (1 + abs(v));
        return v;
    }

    // -- squared inverse central binomial over n^M:
    //    sum (4^n/C)^2 zeta_{n-1}(2_{q-1}) t*_n(1_k)/n^{m+2},  m = M-2 >= 1
    //      = Re[(-1)^{q+m+k} 2^{2q+m} int v (y^{m-1} u^{2q} sh z^k)]
    if (p == -2 && base == DenomBase::N && M >= 3 && fs.size() <= 2) {
        const FactorView *tf = nullptr, *zf = nullptr;
        bool ok = true;
        for (const auto &fv : fs) {
            if (fv.f->tkind && fv.ones >= 1 && fv.f->offset == 0 &&
                (fv.f->star || fv.ones == 1) && !tf)
                tf = &fv;
            else if (!fv.f->tkind && !fv.f->star && fv.twos >= 1 &&
                     fv.f->offset == -1 && !zf)
                zf = &fv;
            else
                ok = false;
        }
        if (ok) {
            int k = tf ? tf->ones : 0;
            int q = zf ? zf->twos + 1 : 1;
            int m = M - 2;
            WLinComb left{{Word{}, GaussRat(1)}};
            for (int i = 0; i < m - 1; ++i) left = append_letter(left, kY);
            for (int i = 0; i < 2 * q; ++i) left = append_letter(left, kU);
            WLinComb sh = shuffle(left, letter_power(kZ, k));
            WLinComb full;
            for (const auto &[w, c] : sh)
                for (const auto &[l, s] : kV) {
                    Word nw{l};
                    nw.insert(nw.end(), w.begin(), w.end());
                    full[nw] += c * GaussRat(s);
                }
            XComplex s = iterint(full);
            XReal v = parity_sign(q + m + k) * pow_int(XReal(2), 2 * q + m) * s.re;
            if (err) *err = XReal("1e-22") * (1 + abs(v));
            return v;
        }
    }

    throw unmatched();
}

// ---------------------------------------------------------------------------
// arcsine powers
// ---------------------------------------------------------------------------

XReal f_pm(int p, int m, const XReal &x) {
    if (p < 1 || m < 1) throw std::invalid_argument("f_pm: p, m >= 1");
    if (abs(x) >= 1) throw std::invalid_argument("f_pm: |x| < 1 required");
    XReal x2 = x * x, sum = 0;
    if (p % 2) {
        // odd p = 2q+1: sum C(2n,n)/4^n t_n(2_q) x^{2n+1}/(2n+1)^m
        int q = (p - 1) / 2;
        HStream hs;
        hs.init(true, false, Composition(q, 2));
        XReal binom = 1, xp = x; // x^{2n+1}
        for (long n = 0;; ++n) {
            if (n) {
                binom = binom * (2 * n - 1) / (2 * n);
                xp *= x2;
            }
            hs.advance_to(n);
            XReal t = binom * hs.value() * xp / pow_int(XReal(2 * n + 1), m);
            sum += t;
            if (n > q && abs(t) < XReal("1e-44") * (1 + abs(sum))) break;
            if (n > 300000)
                throw std::runtime_error("f_pm: series did not converge");
        }
    } else {
        // even p = 2q: sum 4^{n-q} zeta_{n-1}(2_{q-1})/(2^{m-1} C(2n,n) n^{m+1}) x^{2n}
        int q = p / 2;
        HStream hs;
        hs.init(false, false, Composition(q - 1, 2));
        XReal binom = 1, xp = 1; // x^{2n}
        for (long n = 1;; ++n) {
            binom = binom * (2 * n - 1) / (2 * n);
            xp *= x2;
            hs.advance_to(n - 1);
            XReal t = pow_int(XReal(4), n - q) * hs.value() * xp /
                      (pow_int(XReal(2), m - 1) * binom *
                       pow_int(XReal(4), n) * pow_int(XReal(n), m + 1));
            sum += t;
            if (n > q && abs(t) < XReal("1e-44") * (1 + abs(sum))) break;
            if (n > 300000)
                throw std::runtime_error("f_pm: series did not converge");
        }
    }
    return sum;
}

XReal arcsin_series(int p, const XReal &x) {
    if (p == 0) return XReal(1);
    return f_pm(p, 1, x);
}

} // namespace zetalab
