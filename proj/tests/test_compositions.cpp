#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetalab/composition.hpp"

using namespace zetalab;

TEST_CASE("grammar basics") {
    TComp c = parse_comp("2~,1");
    CHECK(c.parts == Composition{2, 1});
    CHECK(c.twists == std::vector<Tw>{Tw::M1, Tw::P1});
    CHECK(c.level() == 2);

    TComp e1 = parse_comp("");
    TComp e2 = parse_comp("()");
    CHECK(e1.depth() == 0);
    CHECK(e2.depth() == 0);

    TComp r = parse_comp("2,1^3");
    CHECK(r.parts == Composition{2, 1, 1, 1});
    CHECK(r.untwisted());

    TComp g = parse_comp("3@i,1@-i,2@-1");
    CHECK(g.parts == Composition{3, 1, 2});
    CHECK(g.twists == std::vector<Tw>{Tw::I, Tw::MI, Tw::M1});
    CHECK(g.level() == 4);
    CHECK(g.weight() == 6);
}

TEST_CASE("grammar errors carry offsets") {
    CHECK_THROWS_AS(parse_comp("2,,1"), ParseError);
    CHECK_THROWS_AS(parse_comp("2@j"), ParseError);
    CHECK_THROWS_AS(parse_comp("0"), ParseError);
    try {
        parse_comp("2,x");
    } catch (const ParseError &e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("print/parse roundtrip") {
    CHECK(print_comp(parse_comp("()")) == "()");
    for (int w = 1; w <= 8; ++w)
        for (const auto &c : compositions_of_weight(w)) {
            // cycle all four twists across positions deterministically
            TComp t{c, {}};
            for (int j = 0; j < (int)c.size(); ++j)
                t.twists.push_back(Tw((j + w) % 4));
            TComp back = parse_comp(print_comp(t));
            CHECK(back == t);
        }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible_mzv(parse_comp("2,1")));
    CHECK_FALSE(is_admissible_mzv(parse_comp("1,2")));
    CHECK(is_admissible_mzv(parse_comp("1~,2")));
    CHECK(is_admissible_mzv(parse_comp("1@i")));
    CHECK(is_admissible_t(parse_comp("2")));
    CHECK_FALSE(is_admissible_t(parse_comp("1")));
    CHECK(is_admissible_t(parse_comp("1~")));
    CHECK_FALSE(is_admissible_t(parse_comp("1@i")));
}

TEST_CASE("hoffman dual") {
    CHECK(hoffman_dual({2}) == Composition{1, 1});
    CHECK(hoffman_dual({1, 1, 2, 1}) == Composition{3, 2});
    CHECK(hoffman_dual({3, 2}) == Composition{1, 1, 2, 1});
    CHECK(hoffman_dual({1}) == Composition{1});
    for (int w = 1; w <= 12; ++w)
        for (const auto &c : compositions_of_weight(w)) {
            Composition d = hoffman_dual(c);
            CHECK(weight(d) == w);
            CHECK(depth(c) + depth(d) == w + 1);
            CHECK(hoffman_dual(d) == c);
        }
}

TEST_CASE("slice") {
    Composition c{3, 1, 4, 1, 5};
    CHECK(slice(c, 2, 4, SliceDir::Fwd) == Composition{1, 4, 1});
    CHECK(slice(c, 2, 4, SliceDir::Rev) == Composition{1, 4, 1});
    CHECK(slice(c, 1, 3, SliceDir::Rev) == Composition{4, 1, 3});
    CHECK(slice(c, 4, 3, SliceDir::Fwd).empty());
    CHECK_THROWS(slice(c, 1, 6, SliceDir::Fwd));
}

TEST_CASE("compositions_of_weight") {
    CHECK(compositions_of_weight(1) == std::vector<Composition>{{1}});
    CHECK(compositions_of_weight(4).size() == 8);
    for (const auto &c : compositions_of_weight(6)) CHECK(weight(c) == 6);
}
