#pragma once
// End-to-end verification: arrange, build the page, enumerate every
// candidate factorization of the standard profile, and classify the
// outcome against the uniqueness statement.

#include <optional>

#include "openbook/solver.hpp"

namespace openbook {

enum class FinalVerdict {
    unique_standard,
    standard_plus_lantern,
    other_found,
    inconclusive_budget,
    hypotheses_not_met,
};

std::string to_string(FinalVerdict v);
std::string to_string(HypothesisStatus s);
std::string to_string(WeightMode m);
std::string to_string(SearchStatus s);
std::string to_string(Verdict v);

struct StageTiming {
    std::string stage;
    double ms = 0.0;
};

struct VerificationReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    int min_weight = 0;
    int max_weight = 0;

    bool tree_ok = false;
    BadVertexReport bad_vertices;
    HypothesisStatus status = HypothesisStatus::fails;
    WeightMode mode = WeightMode::strict;
    bool mode_met = false;
    std::vector<VertexId> offending;

    std::optional<Arrangement> arrangement;
    std::map<int, std::size_t> holes_per_domain;
    std::size_t hole_count = 0;
    long single_mass = 0;
    long joint_mass = 0;

    std::optional<SearchStatus> solver_status;
    std::size_t solver_nodes = 0;
    std::size_t solution_count = 0;
    std::optional<ClassificationReport> classification;

    FinalVerdict verdict = FinalVerdict::hypotheses_not_met;
    bool informational_other = false;  // other-found outside the uniqueness regime
    std::vector<StageTiming> timings;
};

VerificationReport verify(const ResolutionGraph& g, WeightMode mode = WeightMode::strict,
                          const SolverConfig& cfg = {});

// 0 pass, 1 fail (hypotheses-not-met / alarming other-found), 3 budget.
int exit_code(const VerificationReport& report);

}  // namespace openbook
