#pragma once
// Exhaustive enumeration of the homological candidate factorizations
// matching a multiplicity profile, laminarity, lantern rewrites and their
// orbits, and classification against the standard factorization.

#include "openbook/multiplicity.hpp"

namespace openbook {

struct SolverConfig {
    std::size_t max_solutions = 64;
    std::size_t node_budget = 100000000;
    bool report_partial = true;  // keep partial solutions on truncation
};

enum class SearchStatus { complete, truncated_by_solutions, truncated_by_budget };

struct SolutionSet {
    std::vector<Factorization> solutions;  // canonical, pairwise distinct
    SearchStatus status = SearchStatus::complete;
    std::size_t nodes_expanded = 0;
};

// Every multiset of nonempty hole subsets whose profile equals target.
// Classes are branched in non-increasing canonical order (larger first),
// with residual single/pair budgets driving the pruning.
SolutionSet enumerate_candidates(const std::vector<HoleId>& holes,
                                 const MultiplicityProfile& target,
                                 const SolverConfig& cfg = {});

// Any two classes nested or disjoint: the homological shadow of a
// factorization into twists about pairwise disjoint curves.
bool is_laminar(const Factorization& f);

struct LanternMove {
    bool forward = true;            // forward: {A,B,C,U} -> pair unions
    std::array<CurveClass, 3> parts;  // A, B, C
    CurveClass merged;              // U = A + B + C

    std::string describe() const;
};

// All applicable lantern rewrites of f, both directions, canonicalized,
// merged by resulting factorization.
std::vector<std::pair<LanternMove, Factorization>> lantern_moves(const Factorization& f);

struct OrbitResult {
    std::vector<Factorization> states;  // canonical, sorted
    bool complete = true;
};

// Breadth-first closure of f under lantern moves, up to node_cap states.
OrbitResult lantern_orbit(const Factorization& f, std::size_t node_cap);

struct SolutionFlags {
    bool is_standard = false;
    bool has_outer = false;
    bool f1 = false;
    bool f2 = false;
    bool in_orbit = false;  // reachable from the standard factorization
};

enum class Verdict { unique_standard, standard_plus_lantern, other, inconclusive };

struct ClassificationReport {
    std::vector<SolutionFlags> flags;  // parallel to the solution list
    Verdict verdict = Verdict::inconclusive;
    bool orbit_complete = true;
};

ClassificationReport classify_solutions(const SolutionSet& sols,
                                        const Factorization& standard,
                                        const MarkedHoles& marks,
                                        std::size_t orbit_cap = 65536);

}  // namespace openbook
