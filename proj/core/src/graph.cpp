#include "openbook/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace openbook {

namespace {

std::pair<VertexId, VertexId> norm_edge(VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

bool ResolutionGraph::has_edge(VertexId a, VertexId b) const {
    return edges.count(norm_edge(a, b)) != 0;
}

int ResolutionGraph::weight(VertexId v) const {
    auto it = weights.find(v);
    if (it == weights.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

int ResolutionGraph::valency(VertexId v) const {
    int a = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++a;
    return a;
}

std::vector<VertexId> ResolutionGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> ResolutionGraph::vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(weights.size());
    for (const auto& [v, w] : weights) out.push_back(v);
    return out;
}

ParseError::ParseError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

namespace {

bool parse_int(const std::string& tok, long& out) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (std::size_t j = i; j < tok.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(tok[j]))) return false;
    try {
        out = std::stol(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

ResolutionGraph parse_graph(const std::string& text) {
    ResolutionGraph g;
    std::vector<std::tuple<int, VertexId, VertexId>> pending_edges;  // line, a, b

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;          // blank
        if (word[0] == '#') continue;         // comment

        if (word == "vertex") {
            std::string id_tok, w_tok, extra;
            if (!(ls >> id_tok >> w_tok)) throw ParseError(lineno, "expected: vertex <id> <weight>");
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after vertex declaration");
            long id, w;
            if (!parse_int(id_tok, id) || id <= 0)
                throw ParseError(lineno, "vertex id must be a positive integer");
            if (!parse_int(w_tok, w))
                throw ParseError(lineno, "weight must be an integer");
            if (w >= 0)
                throw ParseError(lineno, "weight must be negative");
            if (g.weights.count(static_cast<VertexId>(id)))
                throw ParseError(lineno, "duplicate vertex " + std::to_string(id));
            g.weights[static_cast<VertexId>(id)] = static_cast<int>(w);
        } else if (word == "edge") {
            std::string a_tok, b_tok, extra;
            if (!(ls >> a_tok >> b_tok)) throw ParseError(lineno, "expected: edge <id> <id>");
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge declaration");
            long a, b;
            if (!parse_int(a_tok, a) || a <= 0 || !parse_int(b_tok, b) || b <= 0)
                throw ParseError(lineno, "edge endpoints must be positive integers");
            if (a == b) throw ParseError(lineno, "self-loop edge");
            auto e = norm_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
            bool inserted = g.edges.insert(e).second;
            if (!inserted)
                throw ParseError(lineno, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
            pending_edges.emplace_back(lineno, e.first, e.second);
        } else {
            throw ParseError(lineno, "unknown directive '" + word + "'");
        }
    }

    // Declarations may appear in any order, so unknown endpoints are
    // checked only after the whole file is read.
    for (const auto& [ln, a, b] : pending_edges) {
        if (!g.has_vertex(a)) throw ParseError(ln, "unknown vertex " + std::to_string(a));
        if (!g.has_vertex(b)) throw ParseError(ln, "unknown vertex " + std::to_string(b));
    }
    return g;
}

bool is_tree(const ResolutionGraph& g) {
    if (g.weights.empty()) return false;
    if (g.edge_count() != g.vertex_count() - 1) return false;
    // connectivity
    std::set<VertexId> seen;
    std::deque<VertexId> queue{g.weights.begin()->first};
    seen.insert(g.weights.begin()->first);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : g.neighbors(v))
            if (seen.insert(u).second) queue.push_back(u);
    }
    return seen.size() == g.vertex_count();
}

BadVertexReport validate_no_bad_vertices(const ResolutionGraph& g) {
    BadVertexReport report;
    for (const auto& [v, w] : g.weights) {
        if (g.valency(v) > -w) {
            report.pass = false;
            report.offending.push_back(v);
        }
    }
    return report;
}

const std::vector<VertexId>& Arrangement::satellite(int j) const {
    static const std::vector<VertexId> empty;
    if (j < 2 || j >= static_cast<int>(satellites.size())) return empty;
    return satellites[j];
}

int Arrangement::domain_of(VertexId v) const {
    for (int j = 1; j <= k(); ++j) {
        if (chain[j - 1] == v) return j;
        for (VertexId s : satellite(j))
            if (s == v) return j;
    }
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in arrangement");
}

namespace {

// BFS distances from a single source.
std::map<VertexId, int> bfs_distances(const ResolutionGraph& g, VertexId src) {
    std::map<VertexId, int> dist{{src, 0}};
    std::deque<VertexId> queue{src};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : g.neighbors(v)) {
            if (!dist.count(u)) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

}  // namespace

int tree_distance(const ResolutionGraph& g, VertexId a, VertexId b) {
    auto dist = bfs_distances(g, a);
    auto it = dist.find(b);
    if (it == dist.end()) throw std::invalid_argument("vertices not connected");
    return it->second;
}

std::vector<VertexId> tree_path(const ResolutionGraph& g, VertexId a, VertexId b) {
    std::map<VertexId, VertexId> parent;
    std::deque<VertexId> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (VertexId u : g.neighbors(v)) {
            if (!parent.count(u)) {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    if (!parent.count(b)) throw std::invalid_argument("vertices not connected");
    std::vector<VertexId> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<VertexId> longest_chain(const ResolutionGraph& g) {
    if (!is_tree(g)) throw std::invalid_argument("longest_chain requires a tree");
    auto ids = g.vertex_ids();
    if (ids.size() == 1) return {ids.front()};

    int best_len = -1;
    std::vector<VertexId> best;
    for (VertexId u : ids) {
        auto dist = bfs_distances(g, u);
        for (const auto& [v, d] : dist) {
            if (v == u) continue;
            if (d < best_len) continue;
            auto path = tree_path(g, u, v);
            if (d > best_len || path < best) {
                best_len = d;
                best = std::move(path);
            }
        }
    }
    return best;
}

namespace {

// Component of g - cut containing seed, as a sorted vertex list.
std::vector<VertexId> component_without(const ResolutionGraph& g, VertexId cut, VertexId seed) {
    std::set<VertexId> seen{seed};
    std::deque<VertexId> queue{seed};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : g.neighbors(v)) {
            if (u == cut) continue;
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

Arrangement arrange_conveniently(const ResolutionGraph& g) {
    if (!is_tree(g)) throw std::invalid_argument("arrange_conveniently requires a tree");
    Arrangement arr;
    if (g.vertex_count() == 1) {
        arr.chain = {g.weights.begin()->first};
        arr.satellites.resize(2);
        return arr;
    }

    std::vector<VertexId> c = longest_chain(g);
    arr.satellites.resize(c.size() + 1);
    arr.chain = {c[0]};
    for (std::size_t j = 2; j <= c.size(); ++j) {
        VertexId ej = c[j - 1];
        VertexId prev = c[j - 2];
        arr.chain.push_back(ej);

        // Everything hanging past E_j, away from the chain so far.
        std::vector<VertexId> far = component_without(g, prev, ej);
        far.erase(std::find(far.begin(), far.end(), ej));

        bool all_close = true;
        for (VertexId f : far) {
            if (tree_distance(g, ej, f) > static_cast<int>(j) - 1) {
                all_close = false;
                break;
            }
        }
        if (all_close) {
            arr.satellites[j] = std::move(far);
            arr.satellites.resize(j + 1);
            break;
        }
        // Side components of g - E_j, excluding the two chain directions.
        std::vector<VertexId> side;
        for (VertexId u : g.neighbors(ej)) {
            if (u == prev || u == c[j]) continue;
            auto comp = component_without(g, ej, u);
            side.insert(side.end(), comp.begin(), comp.end());
        }
        std::sort(side.begin(), side.end());
        arr.satellites[j] = std::move(side);
    }
    return arr;
}

ResolutionGraph remove_leaf(const ResolutionGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    if (g.valency(v) != 1) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
    ResolutionGraph out = g;
    out.weights.erase(v);
    for (auto it = out.edges.begin(); it != out.edges.end();) {
        if (it->first == v || it->second == v) it = out.edges.erase(it);
        else ++it;
    }
    return out;
}

Arrangement rearrange_after_removal(const ResolutionGraph& g, const Arrangement& arr) {
    if (arr.k() < 2) throw std::invalid_argument("rearrange_after_removal requires k >= 2");
    const int k = arr.k();
    const VertexId e1 = arr.chain[0];

    // Flip case: first satellite set containing a chain of maximal length.
    for (int j = 2; j <= k; ++j) {
        const VertexId ej = arr.chain[j - 1];
        std::vector<VertexId> deepest;
        for (VertexId f : arr.satellite(j))
            if (tree_distance(g, ej, f) == j - 1) deepest.push_back(f);
        if (deepest.empty()) continue;

        // Promote the lexicographically smallest maximal chain, read from
        // its leaf end toward E_j.
        std::vector<VertexId> promoted;
        for (VertexId f : deepest) {
            auto path = tree_path(g, f, ej);
            path.pop_back();  // drop E_j itself
            if (promoted.empty() || path < promoted) promoted = std::move(path);
        }

        Arrangement out;
        out.chain = promoted;
        out.chain.insert(out.chain.end(), arr.chain.begin() + (j - 1), arr.chain.end());
        out.satellites.resize(out.chain.size() + 1);

        // Subtrees hanging off the promoted vertices become the low sets.
        std::set<VertexId> hung;
        for (int i = 2; i <= j - 1; ++i) {
            VertexId pi = promoted[i - 1];
            VertexId below = promoted[i - 2];
            std::vector<VertexId> hang;
            for (VertexId u : g.neighbors(pi)) {
                if (u == below) continue;
                if (i < j - 1 && u == promoted[i]) continue;
                if (i == j - 1 && u == ej) continue;
                auto comp = component_without(g, pi, u);
                hang.insert(hang.end(), comp.begin(), comp.end());
            }
            std::sort(hang.begin(), hang.end());
            hung.insert(hang.begin(), hang.end());
            out.satellites[i] = std::move(hang);
        }

        // Everything displaced lands next to E_j: the rest of R_j, the old
        // chain prefix E_2..E_{j-1}, and the old sets R_2..R_{j-1}.
        std::set<VertexId> rj_new;
        for (VertexId f : arr.satellite(j))
            if (!hung.count(f) && std::find(promoted.begin(), promoted.end(), f) == promoted.end())
                rj_new.insert(f);
        for (int i = 2; i <= j - 1; ++i) {
            rj_new.insert(arr.chain[i - 1]);
            for (VertexId f : arr.satellite(i)) rj_new.insert(f);
        }
        out.satellites[j] = {rj_new.begin(), rj_new.end()};

        for (int i = j + 1; i <= k; ++i) out.satellites[i] = arr.satellite(i);
        return out;
    }

    // Shift case: no maximal chains anywhere, so the chain slides down.
    Arrangement out;
    out.chain.assign(arr.chain.begin() + 1, arr.chain.end());
    out.satellites.resize(out.chain.size() + 1);
    for (int i = 2; i <= k - 1; ++i) out.satellites[i] = arr.satellite(i + 1);
    (void)e1;
    return out;
}

ResolutionGraph reduce_for_capping(const ResolutionGraph& g, const Arrangement& arr) {
    if (arr.k() < 2) throw std::invalid_argument("reduce_for_capping requires k >= 2");
    std::set<VertexId> removed{arr.chain.back()};
    for (VertexId v : arr.satellite(arr.k())) removed.insert(v);

    ResolutionGraph out;
    for (const auto& [v, w] : g.weights)
        if (!removed.count(v)) out.weights[v] = w;
    for (const auto& e : g.edges)
        if (!removed.count(e.first) && !removed.count(e.second)) out.edges.insert(e);
    out.weights[arr.chain[arr.k() - 2]] += 1;
    return out;
}

HypothesesReport validate_weight_hypotheses(const ResolutionGraph& g, WeightMode mode) {
    HypothesesReport report;
    VertexId last = 0;
    if (mode == WeightMode::relaxed_last)
        last = arrange_conveniently(g).chain.back();
    for (const auto& [v, w] : g.weights) {
        int bound = (mode == WeightMode::relaxed_last && v == last) ? -4 : -5;
        if (w > bound) {
            report.pass = false;
            report.offending.push_back(v);
        }
    }
    return report;
}

HypothesisStatus hypothesis_status(const ResolutionGraph& g) {
    if (!is_tree(g) || !validate_no_bad_vertices(g).pass) return HypothesisStatus::fails;
    if (validate_weight_hypotheses(g, WeightMode::strict).pass) return HypothesisStatus::strict;
    if (validate_weight_hypotheses(g, WeightMode::relaxed_last).pass) return HypothesisStatus::relaxed_last;
    return HypothesisStatus::fails;
}

std::string export_dot(const ResolutionGraph& g, const Arrangement* arr) {
    std::ostringstream out;
    out << "graph plumbing {\n";
    out << "  node [shape=circle];\n";
    for (const auto& [v, w] : g.weights)
        out << "  v" << v << " [label=\"" << w << "\"];\n";
    if (arr != nullptr) {
        out << "  { rank=same;";
        for (VertexId v : arr->chain) out << " v" << v << ";";
        out << " }\n";
        for (int j = 2; j <= arr->k(); ++j) {
            const auto& r = arr->satellite(j);
            if (r.empty()) continue;
            out << "  subgraph cluster_R" << j << " {\n";
            out << "    label=\"R" << j << "\";\n    ";
            for (VertexId v : r) out << "v" << v << "; ";
            out << "\n  }\n";
        }
    }
    for (const auto& e : g.edges)
        out << "  v" << e.first << " -- v" << e.second << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace openbook
