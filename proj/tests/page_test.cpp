#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "openbook/multiplicity.hpp"
#include "openbook/page.hpp"
#include "support/oracles.hpp"

using namespace openbook;

namespace {

ResolutionGraph path_graph(const std::vector<int>& weights) {
    ResolutionGraph g;
    for (std::size_t i = 0; i < weights.size(); ++i) g.weights[static_cast<int>(i) + 1] = weights[i];
    for (std::size_t i = 1; i < weights.size(); ++i)
        g.edges.insert({static_cast<int>(i), static_cast<int>(i) + 1});
    return g;
}

ResolutionGraph star_graph(int center_weight = -5, int leg_weight = -5) {
    ResolutionGraph g;
    g.weights = {{1, leg_weight}, {2, center_weight}, {3, leg_weight}, {4, leg_weight}};
    g.edges = {{1, 2}, {2, 3}, {2, 4}};
    return g;
}

PlanarPage page_of(const ResolutionGraph& g) { return build_page(g, arrange_conveniently(g)); }

Factorization factor(std::vector<std::vector<HoleId>> classes) {
    Factorization f;
    for (auto& c : classes) f.twists.push_back(class_of(std::move(c)));
    return f;
}

}  // namespace

TEST_CASE("build_page single vertex") {
    PlanarPage page = page_of(parse_graph("vertex 1 -5\n"));
    CHECK(page.outer.owner == 1);
    CHECK(page.outer.id == 0);
    CHECK(page.hole_ids() == std::vector<HoleId>{1, 2, 3, 4});
    for (HoleId h : page.hole_ids()) CHECK(page.domain_of(h) == 1);
}

TEST_CASE("build_page path of two") {
    PlanarPage page = page_of(path_graph({-5, -5}));
    CHECK(page.holes.size() == 7);
    CHECK(page.holes_of(1) == std::vector<HoleId>{1, 2, 3});
    CHECK(page.holes_of(2) == std::vector<HoleId>{4, 5, 6, 7});
    CHECK(page.domain_of(3) == 1);
    CHECK(page.domain_of(4) == 2);
}

TEST_CASE("build_page leaf domain size formula") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        ResolutionGraph g = oracles::random_tree(2 + static_cast<int>(rng() % 7), rng);
        oracles::assign_hypothesis_weights(g, rng);
        PlanarPage page = page_of(g);
        VertexId e1 = page.arrangement.chain.front();
        CHECK(static_cast<int>(page.holes_of(e1).size()) == -g.weight(e1) - 2);
        // Hole-count identity: sum of circles = disk holes + outer.
        int circles = 0;
        for (const auto& [v, w] : g.weights) circles += -w - g.valency(v);
        CHECK(circles == static_cast<int>(page.holes.size()) + 1);
    }
}

TEST_CASE("build_page error contracts") {
    ResolutionGraph bad = star_graph(-2);
    CHECK_THROWS_AS(build_page(bad, arrange_conveniently(bad)), std::invalid_argument);

    ResolutionGraph no_outer = path_graph({-1, -5});
    CHECK_THROWS_AS(build_page(no_outer, arrange_conveniently(no_outer)), std::invalid_argument);
}

TEST_CASE("standard_factorization single vertex") {
    PlanarPage page = page_of(parse_graph("vertex 1 -5\n"));
    Factorization f = standard_factorization(page);
    CHECK(same_factorization(f, factor({{1, 2, 3, 4}, {1}, {2}, {3}, {4}})));
}

TEST_CASE("standard_factorization path of two") {
    PlanarPage page = page_of(path_graph({-5, -5}));
    Factorization f = standard_factorization(page);
    CHECK(f.twists.size() == 9);
    CHECK(same_factorization(
        f, factor({{1, 2, 3, 4, 5, 6, 7}, {4, 5, 6, 7}, {1}, {2}, {3}, {4}, {5}, {6}, {7}})));
}

TEST_CASE("standard_factorization twist count formula") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        ResolutionGraph g = oracles::random_tree(1 + static_cast<int>(rng() % 8), rng);
        oracles::assign_hypothesis_weights(g, rng);
        PlanarPage page = page_of(g);
        Factorization f = standard_factorization(page);
        CHECK(f.twists.size() == page.holes.size() + 1 + g.edge_count());
    }
}

TEST_CASE("neck_class far side of an edge") {
    PlanarPage two = page_of(path_graph({-5, -5}));
    CHECK(neck_class(two, 1, 2) == class_of({4, 5, 6, 7}));
    CHECK(neck_class(two, 2, 1) == class_of({4, 5, 6, 7}));

    // 3-chain graph built so the canonical chain really has three links
    ResolutionGraph five = path_graph({-5, -5, -5, -5, -5});
    PlanarPage page = page_of(five);
    REQUIRE(page.arrangement.chain == std::vector<VertexId>{1, 2, 3});
    auto deep = neck_class(page, 2, 3);
    for (HoleId h : deep.enclosed) CHECK(page.domain_of(h) >= 3);

    PlanarPage star = page_of(star_graph());
    CHECK(neck_class(star, 2, 3) == class_of(star.holes_of(3)));

    CHECK_THROWS_AS(neck_class(star, 1, 3), std::invalid_argument);
}

TEST_CASE("select_marked_holes prefers chain-vertex holes") {
    PlanarPage one = page_of(parse_graph("vertex 1 -5\n"));
    MarkedHoles marks = select_marked_holes(one);
    REQUIRE(marks.k() == 1);
    CHECK(marks.marks[0] == std::array<HoleId, 3>{1, 2, 3});

    PlanarPage two = page_of(path_graph({-5, -5}));
    MarkedHoles marks2 = select_marked_holes(two);
    REQUIRE(marks2.k() == 2);
    CHECK(marks2.marks[0] == std::array<HoleId, 3>{1, 2, 3});
    CHECK(marks2.marks[1] == std::array<HoleId, 3>{4, 5, 6});
}

TEST_CASE("select_marked_holes spreads across satellite branches") {
    // -4 center: one hole of its own, so two marks come from distinct legs.
    PlanarPage page = page_of(star_graph(-4));
    MarkedHoles marks = select_marked_holes(page);
    REQUIRE(marks.k() == 2);
    CHECK(marks.marks[1][0] == page.holes_of(2)[0]);
    CHECK(page.owner_of(marks.marks[1][1]) == 3);
    CHECK(page.owner_of(marks.marks[1][2]) == 4);

    // Pairwise joint multiplicity within each domain equals the domain index.
    Factorization f = standard_factorization(page);
    MultiplicityProfile p = profile(f, page.hole_ids());
    for (int j = 1; j <= marks.k(); ++j)
        for (int r = 0; r < 3; ++r)
            for (int s = r + 1; s < 3; ++s)
                CHECK(p.m(marks.marks[j - 1][r], marks.marks[j - 1][s]) == j);
}

TEST_CASE("select_marked_holes needs three eligible holes") {
    CHECK_THROWS_AS(select_marked_holes(page_of(parse_graph("vertex 1 -2\n"))),
                    std::invalid_argument);
}

TEST_CASE("cap_holes identity and single hole") {
    PlanarPage page = page_of(parse_graph("vertex 1 -5\n"));
    Factorization f = standard_factorization(page);

    auto [same_page, same_f] = cap_holes(page, f, {});
    CHECK(same_page.holes.size() == page.holes.size());
    CHECK(same_factorization(same_f, f));

    auto [smaller, capped] = cap_holes(page, f, {4});
    CHECK(smaller.hole_ids() == std::vector<HoleId>{1, 2, 3});
    CHECK(same_factorization(capped, factor({{1, 2, 3}, {1}, {2}, {3}})));
}

TEST_CASE("cap_holes of the whole last domain reproduces the reduced page") {
    ResolutionGraph two = path_graph({-5, -5});
    PlanarPage page = page_of(two);
    Factorization f = standard_factorization(page);

    auto [reduced_page, reduced_f] = cap_holes(page, f, {4, 5, 6, 7});
    ResolutionGraph reduced_graph = reduce_for_capping(two, page.arrangement);
    CHECK(reduced_page.graph == reduced_graph);
    CHECK(reduced_page.arrangement.chain == std::vector<VertexId>{1});

    PlanarPage rebuilt = build_page(reduced_graph, reduced_page.arrangement);
    CHECK(rebuilt.holes == reduced_page.holes);
    CHECK(same_factorization(reduced_f, standard_factorization(rebuilt)));
}

TEST_CASE("cap_holes error contracts") {
    PlanarPage page = page_of(parse_graph("vertex 1 -5\n"));
    Factorization f = standard_factorization(page);
    CHECK_THROWS_AS(cap_holes(page, f, {0}), std::invalid_argument);
    CHECK_THROWS_AS(cap_holes(page, f, {99}), std::invalid_argument);
}

TEST_CASE("cap_holes restricts profiles") {
    PlanarPage page = page_of(path_graph({-5, -5}));
    Factorization f = standard_factorization(page);
    MultiplicityProfile before = profile(f, page.hole_ids());
    auto [reduced_page, reduced_f] = cap_holes(page, f, {4, 5, 6, 7});
    MultiplicityProfile after = profile(reduced_f, reduced_page.hole_ids());
    for (HoleId v : reduced_page.hole_ids()) {
        CHECK(after.m(v) == before.m(v));
        for (HoleId w : reduced_page.hole_ids())
            if (v < w) CHECK(after.m(v, w) == before.m(v, w));
    }
}

TEST_CASE("lantern_replace_last base case") {
    PlanarPage page = page_of(parse_graph("vertex 1 -4\n"));
    Factorization f = standard_factorization(page);
    Factorization image = lantern_replace_last(page, f);
    CHECK(same_factorization(image, factor({{1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("lantern_replace_last on a -4 chain end") {
    PlanarPage page = page_of(path_graph({-5, -4}));
    REQUIRE(page.holes_of(2) == std::vector<HoleId>{4, 5, 6});
    Factorization f = standard_factorization(page);
    Factorization image = lantern_replace_last(page, f);
    CHECK(same_factorization(
        image, factor({{1, 2, 3, 4, 5, 6}, {4, 5}, {4, 6}, {5, 6}, {1}, {2}, {3}})));
    CHECK(profiles_equal(profile(f, page.hole_ids()), profile(image, page.hole_ids())));
}

TEST_CASE("lantern_replace_last with satellite necks") {
    PlanarPage page = page_of(star_graph(-4));
    Factorization f = standard_factorization(page);
    Factorization image = lantern_replace_last(page, f);
    CHECK(profiles_equal(profile(f, page.hole_ids()), profile(image, page.hole_ids())));
    CHECK(image.twists.size() + 1 == f.twists.size());
}

TEST_CASE("lantern_replace_last requires weight -4") {
    PlanarPage page = page_of(parse_graph("vertex 1 -5\n"));
    Factorization f = standard_factorization(page);
    CHECK_THROWS_AS(lantern_replace_last(page, f), std::invalid_argument);

    PlanarPage four = page_of(parse_graph("vertex 1 -4\n"));
    Factorization missing = factor({{1, 2, 3}, {1}, {2}});
    CHECK_THROWS_AS(lantern_replace_last(four, missing), std::invalid_argument);
}

TEST_CASE("canonical form and ordering") {
    Factorization a = factor({{2}, {1, 2}, {1}});
    Factorization b = factor({{1, 2}, {1}, {2}});
    CHECK(same_factorization(a, b));
    Factorization canon = canonical_form(a);
    CHECK(canon.twists[0] == class_of({1, 2}));
    CHECK(canon.twists[1] == class_of({1}));
    CHECK(canon.twists[2] == class_of({2}));
    CHECK(class_order_less(class_of({1, 2}), class_of({3})));
    CHECK(class_order_less(class_of({1, 2}), class_of({1, 3})));
    CHECK_FALSE(class_order_less(class_of({1, 3}), class_of({1, 2})));
}
