#pragma once
// Weighted resolution trees, their validation, and the canonical
// chain/satellite arrangement used by the open-book construction.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace openbook {

using VertexId = int;

// A tree whose vertices carry negative self-intersection weights.
// Edges are stored as unordered pairs, normalized to first < second.
struct ResolutionGraph {
    std::map<VertexId, int> weights;
    std::set<std::pair<VertexId, VertexId>> edges;

    bool operator==(const ResolutionGraph&) const = default;

    bool has_vertex(VertexId v) const { return weights.count(v) != 0; }
    bool has_edge(VertexId a, VertexId b) const;
    int weight(VertexId v) const;
    int valency(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<VertexId> vertex_ids() const;
    std::size_t vertex_count() const { return weights.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg);
};

// Line-oriented format: "vertex <id> <weight>" and "edge <a> <b>",
// blank lines and '#' comments ignored, each declaration exactly once.
ResolutionGraph parse_graph(const std::string& text);

bool is_tree(const ResolutionGraph& g);

struct BadVertexReport {
    bool pass = true;
    std::vector<VertexId> offending;  // vertices with valency > -weight
};
BadVertexReport validate_no_bad_vertices(const ResolutionGraph& g);

// The distinguished chain E_1..E_k plus satellite sets R_2..R_k.
// Every satellite of index j sits within distance j-1 of the j-th
// chain vertex, along a path avoiding the other chain vertices.
struct Arrangement {
    std::vector<VertexId> chain;                    // E_1..E_k
    std::vector<std::vector<VertexId>> satellites;  // indexed by j; 0,1 unused

    bool operator==(const Arrangement&) const = default;
    int k() const { return static_cast<int>(chain.size()); }
    const std::vector<VertexId>& satellite(int j) const;
    // domain index of a vertex: j such that v is E_j or lies in R_j
    int domain_of(VertexId v) const;
};

// Maximum-length simple path; among ties, the lexicographically
// smallest vertex sequence (both traversal directions considered).
std::vector<VertexId> longest_chain(const ResolutionGraph& g);

Arrangement arrange_conveniently(const ResolutionGraph& g);

// Convenient arrangement of g minus E_1: either promote a maximal chain
// out of the first satellite set that has one (the chain flip), or shift
// the whole chain down by one when no satellite set has a maximal chain.
Arrangement rearrange_after_removal(const ResolutionGraph& g, const Arrangement& arr);

ResolutionGraph remove_leaf(const ResolutionGraph& g, VertexId v);

// Drop the last chain vertex and its satellites; the new last chain
// vertex absorbs the pinched neck as a +1 on its weight.
ResolutionGraph reduce_for_capping(const ResolutionGraph& g, const Arrangement& arr);

enum class WeightMode { strict, relaxed_last };

struct HypothesesReport {
    bool pass = true;
    std::vector<VertexId> offending;
};
// strict: every weight <= -5. relaxed_last: the final chain vertex of
// the canonical arrangement may be -4, everything else <= -5.
HypothesesReport validate_weight_hypotheses(const ResolutionGraph& g, WeightMode mode);

enum class HypothesisStatus { strict, relaxed_last, fails };
HypothesisStatus hypothesis_status(const ResolutionGraph& g);

// DOT text; with an arrangement the chain is ranked in order and each
// nonempty satellite set becomes a cluster. Byte-deterministic.
std::string export_dot(const ResolutionGraph& g, const Arrangement* arr = nullptr);

int tree_distance(const ResolutionGraph& g, VertexId a, VertexId b);
std::vector<VertexId> tree_path(const ResolutionGraph& g, VertexId a, VertexId b);

}  // namespace openbook
