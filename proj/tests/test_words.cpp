#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/words.hpp"

using namespace zetalab;

using L = Letter;

static StuffleWord sw(std::initializer_list<int> ks) {
    StuffleWord w;
    for (int k : ks) w.push_back({k, 1});
    return w;
}

TEST_CASE("stuffle basics") {
    auto p = stuffle(sw({1}), sw({1}));
    CHECK(p.size() == 2);
    CHECK(p[sw({1, 1})] == 2);
    CHECK(p[sw({2})] == 1);

    auto q = stuffle(sw({2}), sw({3}));
    CHECK(q[sw({2, 3})] == 1);
    CHECK(q[sw({3, 2})] == 1);
    CHECK(q[sw({5})] == 1);

    // signs multiply on the merged letter
    StuffleWord b{{1, -1}};
    auto r = stuffle(b, sw({1}));
    CHECK(r[StuffleWord{{1, -1}, {1, 1}}] == 1);
    CHECK(r[StuffleWord{{1, 1}, {1, -1}}] == 1);
    CHECK(r[StuffleWord{{2, -1}}] == 1);
}

TEST_CASE("stuffle is commutative and associative") {
    StuffleWord u{{2, 1}, {1, -1}}, v{{1, 1}}, w{{3, -1}};
    CHECK(stuffle(u, v) == stuffle(v, u));
    CHECK(stuffle(stuffle(u, v), SLinComb{{w, Rat(1)}}) ==
          stuffle(SLinComb{{u, Rat(1)}}, stuffle(v, w)));
}

TEST_CASE("ones-power stuffle expansion") {
    // sum_{k=0}^m sum_{|r|=k} 1^{m-k} * z_r = sum_{|s|=m} 2^{dep(s)} z_s
    for (int m = 1; m <= 6; ++m) {
        SLinComb lhs;
        for (int k = 0; k <= m; ++k) {
            StuffleWord ones = sw(std::initializer_list<int>{});
            ones.assign(m - k, StuffleLetter{1, 1});
            std::vector<Composition> rs =
                k == 0 ? std::vector<Composition>{{}} : compositions_of_weight(k);
            for (const auto &r : rs) {
                StuffleWord zr;
                for (int part : r) zr.push_back({part, 1});
                for (auto &[w, c] : stuffle(ones, zr)) {
                    auto it = lhs.find(w);
                    if (it == lhs.end()) lhs.emplace(w, c);
                    else it->second += c;
                }
            }
        }
        for (const auto &s : compositions_of_weight(m)) {
            StuffleWord zs;
            for (int part : s) zs.push_back({part, 1});
            Rat expect = 1;
            for (size_t j = 0; j < s.size(); ++j) expect *= 2;
            CHECK(lhs[zs] == expect);
            lhs.erase(zs);
        }
        for (auto &[w, c] : lhs) CHECK(c == 0);
    }
}

TEST_CASE("shuffle basics") {
    Word a{L::W1}, b{L::W0};
    auto p = shuffle(a, b);
    CHECK(p[Word{L::W1, L::W0}] == GaussRat(1));
    CHECK(p[Word{L::W0, L::W1}] == GaussRat(1));

    auto q = shuffle(Word{L::W1, L::W0}, Word{L::W1});
    CHECK(q[Word{L::W1, L::W1, L::W0}] == GaussRat(2));
    CHECK(q[Word{L::W1, L::W0, L::W1}] == GaussRat(1));

    Word u{L::W1, L::Wi}, v{L::Wm1}, w{L::W0, L::Wmi};
    CHECK(shuffle(u, v) == shuffle(v, u));
    CHECK(shuffle(shuffle(u, v), WLinComb{{w, GaussRat(1)}}) ==
          shuffle(WLinComb{{u, GaussRat(1)}}, shuffle(v, w)));
    CHECK(shuffle(u, Word{}) == WLinComb{{u, GaussRat(1)}});
}

TEST_CASE("word admissibility") {
    CHECK(word_admissible(Word{L::W1, L::W0}));
    CHECK_FALSE(word_admissible(Word{L::W0, L::W1}));
    CHECK_FALSE(word_admissible(Word{L::Wi, L::W1}));
    CHECK(word_admissible(Word{L::Wi, L::Wm1}));
}

TEST_CASE("star expansion examples") {
    auto s = star_expand({2, 1}, StarDir::StarToNonstar);
    CHECK(s[Composition{2, 1}] == 1);
    CHECK(s[Composition{3}] == 1);
    auto n = star_expand({2, 1}, StarDir::NonstarToStar);
    CHECK(n[Composition{2, 1}] == 1);
    CHECK(n[Composition{3}] == -1);
}

TEST_CASE("star expansion roundtrips") {
    for (int w = 1; w <= 8; ++w)
        for (const auto &c : compositions_of_weight(w)) {
            std::map<Composition, Rat> acc;
            for (auto &[m, cm] : star_expand(c, StarDir::StarToNonstar))
                for (auto &[b, cb] : star_expand(m, StarDir::NonstarToStar)) {
                    acc[b] += cm * cb;
                }
            for (auto &[b, cb] : acc) CHECK(cb == (b == c ? 1 : 0));
        }
}

static WLinComb shuffle_pow(const Word &w, size_t j) {
    WLinComb out{{Word{}, GaussRat(1)}};
    for (size_t t = 0; t < j; ++t) out = shuffle(out, WLinComb{{w, GaussRat(1)}});
    return out;
}

TEST_CASE("regularization leaves admissible words alone") {
    Word w{L::W1, L::W0, L::W0};
    RegPoly p = shuffle_regularize(w);
    REQUIRE(p.coeffs.size() == 1);
    CHECK(p.coeffs[0] == WLinComb{{w, GaussRat(1)}});
}

TEST_CASE("regularization of a bare divergent letter") {
    RegPoly p = shuffle_regularize(Word{L::W0});
    REQUIRE(p.coeffs.size() == 2);
    CHECK(p.coeffs[0].empty());
    CHECK(p.coeffs[1] == WLinComb{{Word{}, GaussRat(1)}});
    RegPoly q = shuffle_regularize(Word{L::W1});
    REQUIRE(q.coeffs.size() == 2);
    CHECK(q.coeffs[1] == WLinComb{{Word{}, GaussRat(1)}});
}

TEST_CASE("regularization shuffles back to the original word") {
    std::vector<Word> samples = {
        {L::W0, L::W0, L::Wi, L::Wm1},        // lower-divergent
        {L::W0, L::Wi, L::W0, L::Wm1},        // lower-divergent, interior zero
        {L::Wm1, L::W0, L::W1},               // upper-divergent
        {L::Wi, L::W1, L::W1},                // doubly-trailing ones
        {L::W0, L::W1},                       // both ends divergent
        {L::W0, L::W0, L::W1, L::W1},
        {L::W0, L::Wm1, L::W1},
    };
    for (const auto &w : samples) {
        // lower-only and upper-only words: exact reconstruction with the
        // matching divergent letter
        bool lower = !w.empty() && w.front() == L::W0;
        bool upper = !w.empty() && w.back() == L::W1;
        if (lower != upper) {
            RegPoly p = shuffle_regularize(w);
            WLinComb acc;
            Word div{lower ? L::W0 : L::W1};
            for (size_t j = 0; j < p.coeffs.size(); ++j)
                acc = wadd(acc, shuffle(shuffle_pow(div, j), p.coeffs[j]));
            CHECK(acc == WLinComb{{w, GaussRat(1)}});
        }
        // all coefficient words must be admissible
        RegPoly p = shuffle_regularize(w);
        for (auto &lc : p.coeffs)
            for (auto &[u, c] : lc) CHECK(word_admissible(u));
    }
}

TEST_CASE("composite-letter expansions") {
    auto tdtm = expand_letter(ExtLetter::TdtM);
    CHECK(tdtm[Word{L::W1}] == GaussRat(Rat(1, 2)));
    CHECK(tdtm[Word{L::Wm1}] == GaussRat(Rat(1, 2)));
    auto dtp = expand_letter(ExtLetter::DtP);
    CHECK(dtp[Word{L::Wi}] == GaussRat(Rat(0), Rat(1, 2)));
    CHECK(dtp[Word{L::Wmi}] == GaussRat(Rat(0), Rat(-1, 2)));
    // 1/(t(1-t^2)) = 1/t + t/(1-t^2)
    auto lhs = expand_letter(ExtLetter::TRatM);
    auto rhs = wadd(expand_letter(ExtLetter::A), expand_letter(ExtLetter::TdtM));
    CHECK(lhs == rhs);
}

TEST_CASE("substitution tables") {
    auto t1 = substitute({ExtLetter::X1, ExtLetter::A}, SubstTable::T1);
    CHECK(t1[Word{L::W0, L::W1}] == GaussRat(1));
    CHECK(t1.size() == 1);

    auto t2 = substitute({ExtLetter::X1, ExtLetter::A}, SubstTable::T2);
    CHECK(t2[Word{L::W0, L::W1}] == GaussRat(2));
    CHECK(t2[Word{L::W0, L::Wm1}] == GaussRat(2));

    auto y = substitute({ExtLetter::A}, SubstTable::T3);
    CHECK(y[Word{L::Wmi}] == GaussRat(1));
    CHECK(y[Word{L::Wi}] == GaussRat(1));
    CHECK(y[Word{L::Wm1}] == GaussRat(-1));
    CHECK(y[Word{L::W1}] == GaussRat(-1));

    auto sq = substitute({ExtLetter::Sqrt}, SubstTable::T3);
    CHECK(sq[Word{L::Wmi}] == GaussRat::i());
    CHECK(sq[Word{L::Wi}] == -GaussRat::i());

    CHECK_THROWS(substitute({ExtLetter::Sqrt}, SubstTable::T1));
}
