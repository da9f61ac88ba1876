#include "zetalab/words.hpp"

namespace zetalab {

// ---- stuffle ----

static void sladd(SLinComb &m, const StuffleWord &w, const Rat &c) {
    auto it = m.find(w);
    if (it == m.end()) {
        if (c != 0) m.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

static StuffleWord prepend(StuffleLetter a, const StuffleWord &w) {
    StuffleWord r;
    r.reserve(w.size() + 1);
    r.push_back(a);
    r.insert(r.end(), w.begin(), w.end());
    return r;
}

SLinComb stuffle(const StuffleWord &u, const StuffleWord &v) {
    if (u.empty()) return {{v, Rat(1)}};
    if (v.empty()) return {{u, Rat(1)}};
    StuffleLetter a = u.front(), b = v.front();
    StuffleWord ur(u.begin() + 1, u.end()), vr(v.begin() + 1, v.end());
    SLinComb out;
    for (auto &[w, c] : stuffle(ur, v)) sladd(out, prepend(a, w), c);
    for (auto &[w, c] : stuffle(u, vr)) sladd(out, prepend(b, w), c);
    StuffleLetter ab{a.k + b.k, a.sign * b.sign};
    for (auto &[w, c] : stuffle(ur, vr)) sladd(out, prepend(ab, w), c);
    return out;
}

SLinComb stuffle(const SLinComb &u, const SLinComb &v) {
    SLinComb out;
    for (auto &[wu, cu] : u)
        for (auto &[wv, cv] : v)
            for (auto &[w, c] : stuffle(wu, wv)) sladd(out, w, cu * cv * c);
    return out;
}

// ---- shuffle ----

static void wladd(WLinComb &m, const Word &w, const GaussRat &c) {
    auto it = m.find(w);
    if (it == m.end()) {
        if (!c.is_zero()) m.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

static Word wprepend(Letter a, const Word &w) {
    Word r;
    r.reserve(w.size() + 1);
    r.push_back(a);
    r.insert(r.end(), w.begin(), w.end());
    return r;
}

WLinComb shuffle(const Word &u, const Word &v) {
    if (u.empty()) return {{v, GaussRat(1)}};
    if (v.empty()) return {{u, GaussRat(1)}};
    Word ur(u.begin() + 1, u.end()), vr(v.begin() + 1, v.end());
    WLinComb out;
    for (auto &[w, c] : shuffle(ur, v)) wladd(out, wprepend(u.front(), w), c);
    for (auto &[w, c] : shuffle(u, vr)) wladd(out, wprepend(v.front(), w), c);
    return out;
}

WLinComb shuffle(const WLinComb &u, const WLinComb &v) {
    WLinComb out;
    for (auto &[wu, cu] : u)
        for (auto &[wv, cv] : v)
            for (auto &[w, c] : shuffle(wu, wv)) wladd(out, w, cu * cv * c);
    return out;
}

WLinComb wscale(const WLinComb &u, const GaussRat &c) {
    WLinComb out;
    if (c.is_zero()) return out;
    for (auto &[w, cu] : u) out.emplace(w, cu * c);
    return out;
}

WLinComb wadd(const WLinComb &u, const WLinComb &v) {
    WLinComb out = u;
    for (auto &[w, c] : v) wladd(out, w, c);
    return out;
}

bool word_admissible(const Word &w) {
    if (w.empty()) return true;
    return w.front() != Letter::W0 && w.back() != Letter::W1;
}

// ---- star expansion ----

std::map<Composition, Rat> star_expand(const Composition &c, StarDir dir) {
    if (c.empty()) throw std::invalid_argument("star_expand: empty composition");
    std::map<Composition, Rat> out;
    int r = (int)c.size();
    for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
        Composition merged;
        int cur = c[0], nmerge = 0;
        for (int j = 0; j + 1 < r; ++j) {
            if (mask & (1ul << j)) { // merge parts j and j+1
                cur += c[j + 1];
                ++nmerge;
            } else {
                merged.push_back(cur);
                cur = c[j + 1];
            }
        }
        merged.push_back(cur);
        Rat coef = (dir == StarDir::NonstarToStar && nmerge % 2) ? Rat(-1) : Rat(1);
        auto it = out.find(merged);
        if (it == out.end()) out.emplace(std::move(merged), coef);
        else it->second += coef;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// ---- regularization ----

static RegPoly reg_scale(const RegPoly &p, const GaussRat &c) {
    RegPoly out;
    for (auto &lc : p.coeffs) out.coeffs.push_back(wscale(lc, c));
    return out;
}

static void reg_accum(RegPoly &acc, const RegPoly &p, const GaussRat &c,
                      size_t tshift) {
    for (size_t j = 0; j < p.coeffs.size(); ++j)
        for (auto &[w, cw] : p.coeffs[j]) {
            auto &dst = acc.at(j + tshift);
            auto it = dst.find(w);
            GaussRat add = cw * c;
            if (it == dst.end()) {
                if (!add.is_zero()) dst.emplace(w, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
}

// Regularize divergence from leading W0 letters.
static RegPoly reg_lower(const Word &w) {
    size_t ell = 0;
    while (ell < w.size() && w[ell] == Letter::W0) ++ell;
    RegPoly out;
    if (ell == 0) {
        out.at(0).emplace(w, GaussRat(1));
        return out;
    }
    Word v(w.begin() + ell, w.end());
    Word zeros(ell, Letter::W0);
    WLinComb sh = shuffle(zeros, v); // = w + terms with fewer leading zeros
    // (1/ell!) T^ell * v
    out.at(ell).emplace(v, GaussRat(Rat(1, factorial((long)ell).convert_to<long long>())));
    for (auto &[t, c] : sh) {
        if (t == w) continue;
        reg_accum(out, reg_lower(t), -c, 0);
    }
    return out;
}

// Regularize divergence from trailing W1 letters.
static RegPoly reg_upper(const Word &w) {
    size_t m = 0;
    while (m < w.size() && w[w.size() - 1 - m] == Letter::W1) ++m;
    RegPoly out;
    if (m == 0) {
        out.at(0).emplace(w, GaussRat(1));
        return out;
    }
    Word u(w.begin(), w.end() - m);
    Word ones(m, Letter::W1);
    WLinComb sh = shuffle(u, ones);
    out.at(m).emplace(u, GaussRat(Rat(1, factorial((long)m).convert_to<long long>())));
    for (auto &[t, c] : sh) {
        if (t == w) continue;
        reg_accum(out, reg_upper(t), -c, 0);
    }
    return out;
}

RegPoly shuffle_regularize(const Word &w) {
    RegPoly lower = reg_lower(w);
    RegPoly out;
    for (size_t j = 0; j < lower.coeffs.size(); ++j)
        for (auto &[u, c] : lower.coeffs[j])
            reg_accum(out, reg_upper(u), c, j);
    if (out.coeffs.empty()) out.at(0);
    return out;
}

// ---- substitution tables ----

static WLinComb pure(Letter l, GaussRat c = GaussRat(1)) {
    return {{Word{l}, c}};
}

WLinComb expand_letter(ExtLetter l) {
    using L = Letter;
    Rat h(1, 2);
    switch (l) {
    case ExtLetter::A: return pure(L::W0);
    case ExtLetter::X1: return pure(L::W1);
    case ExtLetter::Xm1: return pure(L::Wm1);
    case ExtLetter::Xi: return pure(L::Wi);
    case ExtLetter::Xmi: return pure(L::Wmi);
    case ExtLetter::TdtM: // t dt/(1-t^2) = (w1 + wm1)/2
        return {{Word{L::W1}, GaussRat(h)}, {Word{L::Wm1}, GaussRat(h)}};
    case ExtLetter::DtM: // dt/(1-t^2) = (w1 - wm1)/2
        return {{Word{L::W1}, GaussRat(h)}, {Word{L::Wm1}, GaussRat(-h)}};
    case ExtLetter::TdtP: // t dt/(1+t^2) = -(wi + wmi)/2
        return {{Word{L::Wi}, GaussRat(-h)}, {Word{L::Wmi}, GaussRat(-h)}};
    case ExtLetter::DtP: // dt/(1+t^2) = i(wi - wmi)/2
        return {{Word{L::Wi}, GaussRat(Rat(0), h)},
                {Word{L::Wmi}, GaussRat(Rat(0), -h)}};
    case ExtLetter::TRatM: // dt/(t(1-t^2)) = dt/t + t dt/(1-t^2)
        return {{Word{L::W0}, GaussRat(1)},
                {Word{L::W1}, GaussRat(h)},
                {Word{L::Wm1}, GaussRat(h)}};
    default:
        throw std::invalid_argument("expand_letter: form is not rational");
    }
}

static WLinComb subst_letter(ExtLetter l, SubstTable table) {
    using L = Letter;
    auto bad = [&]() -> WLinComb {
        throw std::invalid_argument("substitute: letter not in source alphabet");
    };
    switch (table) {
    case SubstTable::T1: // t -> 1-t
        switch (l) {
        case ExtLetter::A: return pure(L::W1, GaussRat(-1));
        case ExtLetter::X1: return pure(L::W0, GaussRat(-1));
        default: return bad();
        }
    case SubstTable::T2: // t -> 1-t^2
        switch (l) {
        case ExtLetter::A: // dt/t -> -(w1 + wm1)
            return {{Word{L::W1}, GaussRat(-1)}, {Word{L::Wm1}, GaussRat(-1)}};
        case ExtLetter::X1: // dt/(1-t) -> -2 w0
            return pure(L::W0, GaussRat(-2));
        case ExtLetter::TSqrt1: // dt/(t sqrt(1-t)) -> wm1 - w1
            return {{Word{L::Wm1}, GaussRat(1)}, {Word{L::W1}, GaussRat(-1)}};
        default: return bad();
        }
    case SubstTable::T3: // t -> (1-t^2)/(1+t^2)
        switch (l) {
        case ExtLetter::A: // dt/t -> y = wmi + wi - wm1 - w1
            return {{Word{L::Wmi}, GaussRat(1)},
                    {Word{L::Wi}, GaussRat(1)},
                    {Word{L::Wm1}, GaussRat(-1)},
                    {Word{L::W1}, GaussRat(-1)}};
        case ExtLetter::Sqrt: // dt/sqrt(1-t^2) -> i(wmi - wi)
            return {{Word{L::Wmi}, GaussRat(Rat(0), Rat(1))},
                    {Word{L::Wi}, GaussRat(Rat(0), Rat(-1))}};
        case ExtLetter::DtM: // dt/(1-t^2) -> -w0
            return pure(L::W0, GaussRat(-1));
        case ExtLetter::TdtM: // t dt/(1-t^2) -> z = -w0 - wi - wmi
            return {{Word{L::W0}, GaussRat(-1)},
                    {Word{L::Wi}, GaussRat(-1)},
                    {Word{L::Wmi}, GaussRat(-1)}};
        case ExtLetter::TRatM: // dt/(t(1-t^2)) -> y + z = -w0 - wm1 - w1
            return {{Word{L::W0}, GaussRat(-1)},
                    {Word{L::Wm1}, GaussRat(-1)},
                    {Word{L::W1}, GaussRat(-1)}};
        case ExtLetter::TSqrt2: // dt/(t sqrt(1-t^2)) -> wm1 - w1
            return {{Word{L::Wm1}, GaussRat(1)}, {Word{L::W1}, GaussRat(-1)}};
        default: return bad();
        }
    }
    throw std::logic_error("substitute: unknown table");
}

WLinComb substitute(const std::vector<ExtLetter> &w, SubstTable table) {
    WLinComb acc = {{Word{}, GaussRat(1)}};
    for (ExtLetter l : w) {
        WLinComb next;
        WLinComb img = subst_letter(l, table);
        for (auto &[pref, cp] : acc)
            for (auto &[one, cl] : img) {
                Word ext = pref;
                ext.push_back(one[0]);
                wladd(next, ext, cp * cl);
            }
        acc = std::move(next);
    }
    return acc;
}

} // namespace zetalab
