#include <catch2/catch_amalgamated.hpp>

#include "ckh/diagrams.hpp"
#include "ckh/pd.hpp"

using namespace ckh;

TEST_CASE("single crossing closes into one component") {
    auto d = parse_pd("X[1,3,2,4]\n");
    // edges 1~2 (under), 3~4 (over); tracing must merge everything
    REQUIRE(d.crossings.size() == 1);
    REQUIRE(d.ncomps() >= 1);
}

TEST_CASE("empty crossing list with a circle is the unknot") {
    auto d = parse_pd("circle[1]\n");
    REQUIRE(d.crossings.empty());
    REQUIRE(d.ncomps() == 1);
    REQUIRE(d.color[0] == 1);
    REQUIRE(d.framing[0] == 0);
    REQUIRE(d.basepoint[0] == 1);
}

TEST_CASE("standard 2-crossing Hopf diagram") {
    // closure of a 2-strand braid with two positive letters
    auto d = hopf();
    REQUIRE(d.crossings.size() == 2);
    REQUIRE(d.ncomps() == 2);
    // crossings are between distinct components, so both framings vanish
    REQUIRE(d.framing[0] == 0);
    REQUIRE(d.framing[1] == 0);
}

TEST_CASE("comments, defaults and directives") {
    auto d = parse_pd("# a one crossing diagram\nX[1,3,2,4]\ncolor 1 = 2\nbasepoint 1 = 2\n");
    REQUIRE(d.color[0] == 2);
    REQUIRE(d.basepoint[0] == 2);
}

TEST_CASE("malformed input is rejected with a line number") {
    REQUIRE_THROWS_AS(parse_pd("X[1,2,3]\n"), parse_error);
    REQUIRE_THROWS_AS(parse_pd("X[1,2,3,four]\n"), parse_error);
    REQUIRE_THROWS_AS(parse_pd(""), parse_error);
    REQUIRE_THROWS_AS(parse_pd("circle[1]\ncolor 1 = 0\n"), parse_error);
    REQUIRE_THROWS_AS(parse_pd("circle[1]\ncolor 2 = 1\n"), parse_error);
    try {
        parse_pd("circle[1]\nX[1,2]\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("edge used three times is rejected") {
    REQUIRE_THROWS_AS(parse_pd("X[1,1,1,2]\nX[2,3,3,4]\n"), parse_error);
}

TEST_CASE("writhe of torus braids and kinks") {
    REQUIRE(self_writhe(trefoil(), 0) == 3);
    auto neg = kinked_unknot({-1});
    REQUIRE(neg.crossings.size() == 1);
    REQUIRE(neg.framing[0] == -1);
    auto pos = kinked_unknot({1});
    REQUIRE(pos.framing[0] == 1);
    auto mixed = kinked_unknot({1, -1, -1});
    REQUIRE(mixed.framing[0] == -1);

    // Hopf components never self-cross
    auto h = hopf();
    REQUIRE(self_writhe(h, 0) == 0);
    REQUIRE(self_writhe(h, 1) == 0);
}

TEST_CASE("explicit framing must match self-writhe") {
    REQUIRE_THROWS_AS(parse_pd("circle[1]\nframing 1 = 2\n"), parse_error);
    auto d = parse_pd("circle[1]\nframing 1 = 0\n");
    REQUIRE(d.framing[0] == 0);
}

TEST_CASE("builders produce planar-consistent diagrams") {
    for (int k = 1; k <= 7; ++k) REQUIRE_NOTHROW(validate_planarity(torus2(k)));
    REQUIRE_NOTHROW(validate_planarity(figure_eight()));
    REQUIRE(figure_eight().ncomps() == 1);
    REQUIRE(figure_eight().crossings.size() == 4);
    for (int m = 1; m <= 4; ++m) {
        auto t = twist_knot(m);
        REQUIRE_NOTHROW(validate_planarity(t));
        REQUIRE(t.ncomps() == 1);
        REQUIRE(t.crossings.size() == static_cast<size_t>(m + 2));
    }
    auto granny = connect_sum(trefoil(), 1, trefoil(), 1);
    REQUIRE(granny.crossings.size() == 6);
    REQUIRE(granny.ncomps() == 1);
}

TEST_CASE("figure-eight shapes have zero writhe") {
    REQUIRE(figure_eight().framing[0] == 0);
    REQUIRE(twist_knot(2).framing[0] == 0);
    REQUIRE(twist_knot(2, true).framing[0] == 0);
}

TEST_CASE("pd text round trip") {
    auto d = trefoil();
    auto d2 = parse_pd(to_pd_text(d));
    REQUIRE(d2.crossings.size() == d.crossings.size());
    REQUIRE(d2.comps == d.comps);
}
