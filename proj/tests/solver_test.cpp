#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "openbook/solver.hpp"
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

PlanarPage page_of(const ResolutionGraph& g) { return build_page(g, arrange_conveniently(g)); }

Factorization factor(std::vector<std::vector<HoleId>> classes) {
    Factorization f;
    for (auto& c : classes) f.twists.push_back(class_of(std::move(c)));
    return f;
}

MultiplicityProfile uniform_profile(const std::vector<HoleId>& holes, int single, int joint) {
    MultiplicityProfile p;
    for (HoleId v : holes) p.single[v] = single;
    for (std::size_t i = 0; i < holes.size(); ++i)
        for (std::size_t j = i + 1; j < holes.size(); ++j) p.joint[{holes[i], holes[j]}] = joint;
    return p;
}

}  // namespace

TEST_CASE("enumerate_candidates lens-space target has one solution") {
    SolutionSet sols = enumerate_candidates({1, 2, 3, 4}, uniform_profile({1, 2, 3, 4}, 2, 1));
    CHECK(sols.status == SearchStatus::complete);
    REQUIRE(sols.solutions.size() == 1);
    CHECK(same_factorization(sols.solutions[0], factor({{1, 2, 3, 4}, {1}, {2}, {3}, {4}})));
}

TEST_CASE("enumerate_candidates -4 target has the lantern pair") {
    SolutionSet sols = enumerate_candidates({1, 2, 3}, uniform_profile({1, 2, 3}, 2, 1));
    CHECK(sols.status == SearchStatus::complete);
    REQUIRE(sols.solutions.size() == 2);
    CHECK(same_factorization(sols.solutions[0], factor({{1, 2, 3}, {1}, {2}, {3}})));
    CHECK(same_factorization(sols.solutions[1], factor({{1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("enumerate_candidates all-zero target") {
    SolutionSet sols = enumerate_candidates({1, 2, 3}, uniform_profile({1, 2, 3}, 0, 0));
    CHECK(sols.status == SearchStatus::complete);
    REQUIRE(sols.solutions.size() == 1);
    CHECK(sols.solutions[0].twists.empty());
}

TEST_CASE("enumerate_candidates rejects infeasible targets") {
    MultiplicityProfile bad = uniform_profile({1, 2}, 1, 2);
    CHECK_THROWS_WITH_AS(enumerate_candidates({1, 2}, bad, {}),
                         doctest::Contains("infeasible"), std::invalid_argument);
}

TEST_CASE("enumerate_candidates honors budgets") {
    PlanarPage page = page_of(path_graph({-5, -5}));
    MultiplicityProfile target = profile(standard_factorization(page), page.hole_ids());

    SolverConfig tiny_nodes{64, 3, true};
    SolutionSet a = enumerate_candidates(page.hole_ids(), target, tiny_nodes);
    CHECK(a.status == SearchStatus::truncated_by_budget);

    SolverConfig drop_partial{64, 3, false};
    SolutionSet b = enumerate_candidates(page.hole_ids(), target, drop_partial);
    CHECK(b.status == SearchStatus::truncated_by_budget);
    CHECK(b.solutions.empty());

    SolverConfig one_solution{1, 100000000, true};
    SolutionSet c = enumerate_candidates({1, 2, 3}, uniform_profile({1, 2, 3}, 2, 1), one_solution);
    CHECK(c.status == SearchStatus::truncated_by_solutions);
    CHECK(c.solutions.size() == 1);
}

TEST_CASE("enumerate_candidates equals the reference enumerator on small universes") {
    // Every achievable profile over up to three holes with multiplicity
    // at most 3, full solution-set equality.
    for (int n = 1; n <= 3; ++n) {
        oracles::ProfileCensus census = oracles::profile_census(n, 3);
        std::vector<HoleId> holes;
        for (int v = 1; v <= n; ++v) holes.push_back(v);
        for (const auto& [key, count] : census.entries) {
            MultiplicityProfile target = oracles::profile_from_key(key, n, 3);
            std::vector<Factorization> expected = oracles::naive_enumerate(holes, target);
            REQUIRE(expected.size() == count);
            SolutionSet got = enumerate_candidates(holes, target, {});
            REQUIRE(got.status == SearchStatus::complete);
            REQUIRE(got.solutions.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i)
                CHECK(same_factorization(got.solutions[i], expected[i]));
        }
    }
}

TEST_CASE("enumerate_candidates equals the reference enumerator on random targets") {
    std::mt19937 rng(123);
    std::vector<HoleId> holes{1, 2, 3, 4};
    for (int trial = 0; trial < 150; ++trial) {
        MultiplicityProfile target;
        for (HoleId v : holes) target.single[v] = static_cast<int>(rng() % 5);
        for (std::size_t i = 0; i < holes.size(); ++i)
            for (std::size_t j = i + 1; j < holes.size(); ++j) {
                int cap = std::min(target.single[holes[i]], target.single[holes[j]]);
                target.joint[{holes[i], holes[j]}] = cap == 0 ? 0 : static_cast<int>(rng() % (cap + 1));
            }
        std::vector<Factorization> expected = oracles::naive_enumerate(holes, target);
        SolutionSet got = enumerate_candidates(holes, target, {});
        REQUIRE(got.status == SearchStatus::complete);
        REQUIRE(got.solutions.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(same_factorization(got.solutions[i], expected[i]));
    }
}

TEST_CASE("solutions satisfy the target profile and arrive deterministically") {
    PlanarPage page = page_of(path_graph({-5, -4}));
    MultiplicityProfile target = profile(standard_factorization(page), page.hole_ids());
    SolutionSet first = enumerate_candidates(page.hole_ids(), target, {});
    SolutionSet second = enumerate_candidates(page.hole_ids(), target, {});
    CHECK(first.status == SearchStatus::complete);
    REQUIRE(first.solutions.size() == second.solutions.size());
    for (std::size_t i = 0; i < first.solutions.size(); ++i) {
        CHECK(same_factorization(first.solutions[i], second.solutions[i]));
        CHECK(oracles::profile_matches(first.solutions[i], page.hole_ids(), target));
    }
}

TEST_CASE("standard factorization is always among the candidates") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        ResolutionGraph g = oracles::random_tree(1 + static_cast<int>(rng() % 3), rng);
        oracles::assign_hypothesis_weights(g, rng);
        PlanarPage page = page_of(g);
        Factorization standard = standard_factorization(page);
        MultiplicityProfile target = profile(standard, page.hole_ids());
        SolutionSet sols = enumerate_candidates(page.hole_ids(), target, {});
        REQUIRE(sols.status == SearchStatus::complete);
        bool found = false;
        for (const Factorization& f : sols.solutions)
            if (same_factorization(f, standard)) found = true;
        CHECK(found);
    }
}

TEST_CASE("is_laminar") {
    PlanarPage page = page_of(path_graph({-5, -5}));
    CHECK(is_laminar(standard_factorization(page)));
    CHECK_FALSE(is_laminar(factor({{1, 2}, {2, 3}})));
    CHECK_FALSE(is_laminar(factor({{1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("lantern_moves forward and backward") {
    Factorization nested = factor({{1, 2, 3}, {1}, {2}, {3}});
    auto forward = lantern_moves(nested);
    REQUIRE(forward.size() == 1);
    CHECK(forward[0].first.forward);
    CHECK(same_factorization(forward[0].second, factor({{1, 2}, {1, 3}, {2, 3}})));

    auto backward = lantern_moves(forward[0].second);
    REQUIRE(backward.size() == 1);
    CHECK_FALSE(backward[0].first.forward);
    CHECK(same_factorization(backward[0].second, nested));

    CHECK(lantern_moves(factor({{1}, {2}})).empty());
}

TEST_CASE("lantern_orbit sizes") {
    PlanarPage five = page_of(parse_graph("vertex 1 -5\n"));
    OrbitResult orbit5 = lantern_orbit(standard_factorization(five), 1000);
    CHECK(orbit5.complete);
    CHECK(orbit5.states.size() == 1);

    PlanarPage four = page_of(parse_graph("vertex 1 -4\n"));
    OrbitResult orbit4 = lantern_orbit(standard_factorization(four), 1000);
    CHECK(orbit4.complete);
    CHECK(orbit4.states.size() == 2);

    OrbitResult empty_orbit = lantern_orbit(Factorization{}, 10);
    CHECK(empty_orbit.complete);
    CHECK(empty_orbit.states.size() == 1);

    OrbitResult capped = lantern_orbit(standard_factorization(four), 1);
    CHECK_FALSE(capped.complete);
}

TEST_CASE("lantern_orbit states share the seed profile") {
    PlanarPage page = page_of(path_graph({-5, -4}));
    Factorization standard = standard_factorization(page);
    MultiplicityProfile p = profile(standard, page.hole_ids());
    OrbitResult orbit = lantern_orbit(standard, 10000);
    CHECK(orbit.complete);
    CHECK(orbit.states.size() >= 2);
    for (const Factorization& f : orbit.states)
        CHECK(profiles_equal(p, profile(f, page.hole_ids())));
}

TEST_CASE("classify_solutions verdicts") {
    PlanarPage five = page_of(parse_graph("vertex 1 -5\n"));
    Factorization std5 = standard_factorization(five);
    MarkedHoles marks5 = select_marked_holes(five);
    MultiplicityProfile t5 = profile(std5, five.hole_ids());
    SolutionSet sols5 = enumerate_candidates(five.hole_ids(), t5, {});
    ClassificationReport rep5 = classify_solutions(sols5, std5, marks5);
    CHECK(rep5.verdict == Verdict::unique_standard);
    REQUIRE(rep5.flags.size() == 1);
    CHECK(rep5.flags[0].is_standard);
    CHECK(rep5.flags[0].has_outer);
    CHECK(rep5.flags[0].f1);

    PlanarPage four = page_of(parse_graph("vertex 1 -4\n"));
    Factorization std4 = standard_factorization(four);
    MarkedHoles marks4 = select_marked_holes(four);
    MultiplicityProfile t4 = profile(std4, four.hole_ids());
    SolutionSet sols4 = enumerate_candidates(four.hole_ids(), t4, {});
    ClassificationReport rep4 = classify_solutions(sols4, std4, marks4);
    CHECK(rep4.verdict == Verdict::standard_plus_lantern);
    REQUIRE(rep4.flags.size() == 2);
    CHECK(rep4.flags[0].is_standard);
    CHECK(rep4.flags[0].f1);
    CHECK_FALSE(rep4.flags[1].is_standard);
    CHECK(rep4.flags[1].f2);
    CHECK_FALSE(rep4.flags[1].has_outer);
    CHECK(rep4.flags[1].in_orbit);

    // A fabricated foreign solution demotes the verdict to other.
    SolutionSet fabricated = sols4;
    fabricated.solutions.push_back(canonical_form(factor({{1, 2}, {1, 3}, {2}, {3}})));
    ClassificationReport rep_other = classify_solutions(fabricated, std4, marks4);
    CHECK(rep_other.verdict == Verdict::other);

    SolutionSet truncated = sols4;
    truncated.status = SearchStatus::truncated_by_budget;
    CHECK(classify_solutions(truncated, std4, marks4).verdict == Verdict::inconclusive);
}
