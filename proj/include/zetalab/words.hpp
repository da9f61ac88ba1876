#pragma once
// Exact word algebras: quasi-shuffle (stuffle) on harmonic-sum letters,
// shuffle on 1-form letters, star/non-star conversion, shuffle regularization
// (constant-term extraction), and the change-of-variable tables.
//
// Orientation: words are stored lower-endpoint first, i.e. the first letter
// is the innermost form of the simplex int_{a<t_p<...<t_1<b} f_p(t_p)...f_1(t_1).
#include "zetalab/composition.hpp"
#include "zetalab/rational.hpp"

#include <map>
#include <vector>

namespace zetalab {

// ---- stuffle ----

struct StuffleLetter {
    int k;
    int sign; // +1 or -1 (barred letter)
    auto operator<=>(const StuffleLetter &) const = default;
};
using StuffleWord = std::vector<StuffleLetter>;
using SLinComb = std::map<StuffleWord, Rat>;

SLinComb stuffle(const StuffleWord &u, const StuffleWord &v);
SLinComb stuffle(const SLinComb &u, const SLinComb &v);

// ---- shuffle on pure 1-form letters ----

// dt/t, dt/(1-t), dt/(-1-t), dt/(i-t), dt/(-i-t)
enum class Letter : uint8_t { W0, W1, Wm1, Wi, Wmi };
using Word = std::vector<Letter>;
using WLinComb = std::map<Word, GaussRat>;

WLinComb shuffle(const Word &u, const Word &v);
WLinComb shuffle(const WLinComb &u, const WLinComb &v);
WLinComb wscale(const WLinComb &u, const GaussRat &c);
WLinComb wadd(const WLinComb &u, const WLinComb &v);

// word-admissible: first letter != W0, last letter != W1
bool word_admissible(const Word &w);

// ---- star <-> non-star ----

enum class StarDir { StarToNonstar, NonstarToStar };
// Expands t*/zeta* (or inverse) over merges of adjacent parts.
// StarToNonstar carries (-1)^{#merges}; NonstarToStar is unsigned.
std::map<Composition, Rat> star_expand(const Composition &c, StarDir dir);

// ---- shuffle regularization ----

// Polynomial in the formal divergence variable T; coeffs[j] multiplies T^j.
struct RegPoly {
    std::vector<WLinComb> coeffs;
    WLinComb &at(size_t j) {
        if (coeffs.size() <= j) coeffs.resize(j + 1);
        return coeffs[j];
    }
};

// Rewrites w as sum_j T^j * u_j with every u_j word-admissible, where
// T stands for the divergent single-letter integrals (int w0 at the lower
// end, int w1 at the upper end). Shuffling the coefficients back against
// divergent-letter powers reproduces w exactly.
RegPoly shuffle_regularize(const Word &w);

// ---- substitution tables ----

// Source alphabet for the change-of-variable tables; includes composite forms.
enum class ExtLetter : uint8_t {
    A,      // dt/t
    X1,     // dt/(1-t)
    Xm1,    // dt/(-1-t)
    Xi,     // dt/(i-t)
    Xmi,    // dt/(-i-t)
    Sqrt,   // dt/sqrt(1-t^2)
    TdtM,   // t dt/(1-t^2)
    TdtP,   // t dt/(1+t^2)
    DtM,    // dt/(1-t^2)
    DtP,    // dt/(1+t^2)
    TSqrt2, // dt/(t sqrt(1-t^2))
    TRatM,  // dt/(t(1-t^2))
    TSqrt1, // dt/(t sqrt(1-t))
};

enum class SubstTable {
    T1, // t -> 1-t       (orientation-reversing)
    T2, // t -> 1-t^2     (orientation-reversing)
    T3, // t -> (1-t^2)/(1+t^2)  (orientation-reversing)
};

// Letter-by-letter pullback by the table, as an exact Q(i) combination of a
// single pure letter word per input letter, multiplied out over the word.
// All three tables reverse orientation ([0,1] endpoints swap); callers must
// reverse the letter order themselves when rewriting a full integral.
WLinComb substitute(const std::vector<ExtLetter> &w, SubstTable table);

// Exact expansion of one composite form into pure letters (identity pullback).
WLinComb expand_letter(ExtLetter l);

} // namespace zetalab
