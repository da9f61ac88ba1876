#pragma once
// Numerical iterated integrals over the level-4 alphabet, multiple
// polylogarithms, colored zeta and t values, mixed values and R-values.
//
// Engine: a word S(w; a, b) over letters dt/t and dt/(c-t) is evaluated by
// power series on segments whose mapped poles are far enough from the unit
// disk; segments that fail the pole test are split at their midpoint via the
// convolution identity, and the full interval [0,1] is handled by a Hoelder
// split at 1/2 (upper half reflected by t -> 1-t).
#include "zetalab/words.hpp"

namespace zetalab {

// Admissible iterated integral int_0^1 of the word (lower-endpoint first).
XComplex iterint(const Word &w);
XComplex iterint(const WLinComb &lc);

// Same but split at the given interior cut points instead of {1/2}
// (self-check of the Hoelder convolution machinery).
XComplex iterint_with_cuts(const Word &w, const std::vector<XReal> &cuts);

// Partial integral int_a^b of the word; used for polylogarithms at interior
// points and the square-root-substitution identities. Requires a divergence-
// free word on (a,b): first letter != W0 when a = 0, last != W1 when b = 1.
XComplex iterint_segment(const Word &w, const XReal &a, const XReal &b);

// Colored MZV zeta(k; z) for twists z in {1,-1,i,-i}; admissible tc.
XComplex cmzv(const TComp &tc);

// Multiple t-value t(k; sigma), sigma in {1,-1}; t-admissible tc.
XComplex mtv(const TComp &tc);

// Multiple polylogarithm Li_k(z1..zr). Root-of-unity arguments route through
// cmzv; otherwise the defining nested series (requires |z1...zj| < 1).
XComplex li(const Composition &c, const std::vector<XComplex> &z);

// Single-variable Li_k(x) for 0 < x <= 1 via its word on (0, x); admits x
// exponentially close to 1 (integral-route kernels need this).
XComplex li_x(const Composition &c, const XReal &x);

// Multiple mixed values M(k; eps) = sum over subsets of sign twists, and
// R-values R(k) (k1 >= 2).
XReal mmv(const Composition &c, const std::vector<int> &eps);
XReal rvalue(const Composition &c);

} // namespace zetalab
