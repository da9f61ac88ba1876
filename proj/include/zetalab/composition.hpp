#pragma once
// Compositions, root-of-unity twists, Hoffman duality, and the ASCII
// mini-language ("2~,1", "@i", "^" repetition, empty prints as "()").
#include <string>
#include <vector>
#include <stdexcept>

namespace zetalab {

enum class Tw : int { P1 = 0, M1 = 1, I = 2, MI = 3 };

inline Tw tw_mul(Tw a, Tw b) {
    // exponents of i: P1=0, I=1, M1=2, MI=3
    static const int e[4] = {0, 2, 1, 3};
    static const Tw back[4] = {Tw::P1, Tw::I, Tw::M1, Tw::MI};
    return back[(e[(int)a] + e[(int)b]) % 4];
}

inline Tw tw_conj(Tw a) {
    switch (a) {
    case Tw::I: return Tw::MI;
    case Tw::MI: return Tw::I;
    default: return a;
    }
}

inline const char *tw_str(Tw a) {
    switch (a) {
    case Tw::P1: return "1";
    case Tw::M1: return "-1";
    case Tw::I: return "i";
    default: return "-i";
    }
}

using Composition = std::vector<int>;

struct TComp {
    Composition parts;
    std::vector<Tw> twists; // same length as parts

    int depth() const { return (int)parts.size(); }
    int weight() const {
        int w = 0;
        for (int k : parts) w += k;
        return w;
    }
    bool untwisted() const {
        for (Tw t : twists)
            if (t != Tw::P1) return false;
        return true;
    }
    // least N in {1,2,4} such that all twists are Nth roots of unity
    int level() const {
        int lv = 1;
        for (Tw t : twists) {
            if (t == Tw::M1 && lv < 2) lv = 2;
            if (t == Tw::I || t == Tw::MI) lv = 4;
        }
        return lv;
    }
    bool operator==(const TComp &o) const {
        return parts == o.parts && twists == o.twists;
    }
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string &msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)),
          offset(off) {}
};

TComp parse_comp(const std::string &text);
std::string print_comp(const TComp &c);
std::string print_comp(const Composition &c);

inline TComp untwisted(const Composition &c) {
    return {c, std::vector<Tw>(c.size(), Tw::P1)};
}

inline int weight(const Composition &c) {
    int w = 0;
    for (int k : c) w += k;
    return w;
}
inline int depth(const Composition &c) { return (int)c.size(); }

// MZV-admissible: k1 >= 2 or (k1, z1) != (1, 1)
bool is_admissible_mzv(const TComp &c);
// t-admissible: k1 >= 2, or k1 = 1 with twist -1
bool is_admissible_t(const TComp &c);

// Swap commas and plus signs in the all-ones expansion; involution.
Composition hoffman_dual(const Composition &c);

enum class SliceDir { Fwd, Rev };
// 1-based inclusive slice; empty when i > j; j > depth rejected.
Composition slice(const Composition &c, int i, int j, SliceDir dir);

// all compositions of weight w (2^{w-1} of them, w >= 1)
std::vector<Composition> compositions_of_weight(int w);

} // namespace zetalab
