#pragma once
// Text and JSON documents for every pipeline stage. All output is
// deterministic: keys in fixed order, lists sorted, newline-terminated.

#include "openbook/verify.hpp"

namespace openbook {

enum class OutputFormat { text, json };

struct ValidationDocument {
    bool tree_ok = false;
    BadVertexReport bad_vertices;
    WeightMode mode = WeightMode::strict;
    HypothesesReport hypotheses;
    HypothesisStatus status = HypothesisStatus::fails;
    bool pass = false;
};

std::string render_validation(const ValidationDocument& doc, OutputFormat fmt);
std::string render_arrangement(const Arrangement& arr, OutputFormat fmt);
std::string render_open_book(const PlanarPage& page, const Factorization& f, OutputFormat fmt);
std::string render_profile(const MultiplicityProfile& p, OutputFormat fmt);
std::string render_solutions(const SolutionSet& sols, OutputFormat fmt);
std::string render_orbit(const OrbitResult& orbit, OutputFormat fmt);
std::string render_verification(const VerificationReport& report, OutputFormat fmt);

}  // namespace openbook
