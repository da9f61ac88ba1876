#include "zetalab/composition.hpp"

#include <algorithm>
#include <cctype>

namespace zetalab {

TComp parse_comp(const std::string &text) {
    TComp out;
    size_t p = 0;
    auto skip_ws = [&] {
        while (p < text.size() && text[p] == ' ') ++p;
    };
    skip_ws();
    if (p == text.size()) return out; // empty composition
    if (text.compare(p, 2, "()") == 0) {
        p += 2;
        skip_ws();
        if (p != text.size()) throw ParseError("trailing input", p);
        return out;
    }
    while (true) {
        skip_ws();
        size_t item_start = p;
        if (p >= text.size() || !isdigit((unsigned char)text[p]))
            throw ParseError("expected integer", p);
        long k = 0;
        while (p < text.size() && isdigit((unsigned char)text[p])) {
            k = k * 10 + (text[p] - '0');
            if (k > 1000000) throw ParseError("integer too large", item_start);
            ++p;
        }
        if (k <= 0) throw ParseError("part must be positive", item_start);
        Tw tw = Tw::P1;
        if (p < text.size() && text[p] == '~') {
            tw = Tw::M1;
            ++p;
        } else if (p < text.size() && text[p] == '@') {
            ++p;
            if (text.compare(p, 2, "-1") == 0) { tw = Tw::M1; p += 2; }
            else if (text.compare(p, 2, "-i") == 0) { tw = Tw::MI; p += 2; }
            else if (p < text.size() && text[p] == '1') { tw = Tw::P1; ++p; }
            else if (p < text.size() && text[p] == 'i') { tw = Tw::I; ++p; }
            else throw ParseError("bad twist", p);
        }
        long rep = 1;
        if (p < text.size() && text[p] == '^') {
            ++p;
            size_t rs = p;
            rep = 0;
            while (p < text.size() && isdigit((unsigned char)text[p])) {
                rep = rep * 10 + (text[p] - '0');
                if (rep > 10000) throw ParseError("repetition too large", rs);
                ++p;
            }
            if (p == rs || rep <= 0)
                throw ParseError("bad repetition count", rs);
        }
        for (long r = 0; r < rep; ++r) {
            out.parts.push_back((int)k);
            out.twists.push_back(tw);
        }
        skip_ws();
        if (p == text.size()) break;
        if (text[p] != ',') throw ParseError("expected ','", p);
        ++p;
    }
    return out;
}

std::string print_comp(const TComp &c) {
    if (c.parts.empty()) return "()";
    std::string s;
    for (size_t j = 0; j < c.parts.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(c.parts[j]);
        switch (c.twists[j]) {
        case Tw::P1: break;
        case Tw::M1: s += '~'; break;
        case Tw::I: s += "@i"; break;
        case Tw::MI: s += "@-i"; break;
        }
    }
    return s;
}

std::string print_comp(const Composition &c) {
    return print_comp(untwisted(c));
}

bool is_admissible_mzv(const TComp &c) {
    if (c.parts.empty()) return true;
    return c.parts[0] >= 2 || c.twists[0] != Tw::P1;
}

bool is_admissible_t(const TComp &c) {
    if (c.parts.empty()) return true;
    return c.parts[0] >= 2 || c.twists[0] == Tw::M1;
}

Composition hoffman_dual(const Composition &c) {
    if (c.empty()) throw std::invalid_argument("hoffman_dual: empty composition");
    int w = weight(c);
    // boxes[j] true = comma, false = plus, between the j-th and (j+1)-th 1
    std::vector<bool> comma(w - 1, false);
    int pos = 0;
    for (size_t j = 0; j + 1 < c.size() + 0; ++j) {
        pos += c[j];
        if (j + 1 < c.size()) comma[pos - 1] = true;
    }
    Composition d;
    int cur = 1;
    for (int j = 0; j < w - 1; ++j) {
        if (!comma[j]) { // dual: swap -> plus becomes comma and vice versa
            d.push_back(cur);
            cur = 1;
        } else {
            ++cur;
        }
    }
    d.push_back(cur);
    return d;
}

Composition slice(const Composition &c, int i, int j, SliceDir dir) {
    if (i < 1) throw std::invalid_argument("slice: i >= 1 required");
    if (j > (int)c.size()) throw std::invalid_argument("slice: j > depth");
    Composition out;
    if (i > j) return out;
    for (int p = i; p <= j; ++p) out.push_back(c[p - 1]);
    if (dir == SliceDir::Rev) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_of_weight(int w) {
    std::vector<Composition> out;
    if (w <= 0) return out;
    for (unsigned long mask = 0; mask < (1ul << (w - 1)); ++mask) {
        Composition c;
        int cur = 1;
        for (int j = 0; j < w - 1; ++j) {
            if (mask & (1ul << j)) {
                c.push_back(cur);
                cur = 1;
            } else {
                ++cur;
            }
        }
        c.push_back(cur);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace zetalab
