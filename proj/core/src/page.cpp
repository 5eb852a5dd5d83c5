#include "openbook/page.hpp"

#include <algorithm>
#include <deque>

namespace openbook {

std::vector<HoleId> PlanarPage::hole_ids() const {
    std::vector<HoleId> out;
    out.reserve(holes.size());
    for (const Hole& h : holes) out.push_back(h.id);
    return out;
}

std::vector<HoleId> PlanarPage::holes_of(VertexId v) const {
    std::vector<HoleId> out;
    for (const Hole& h : holes)
        if (h.owner == v) out.push_back(h.id);
    return out;
}

VertexId PlanarPage::owner_of(HoleId h) const {
    for (const Hole& hole : holes)
        if (hole.id == h) return hole.owner;
    throw std::invalid_argument("unknown hole " + std::to_string(h));
}

int PlanarPage::domain_of(HoleId h) const {
    auto it = domain.find(h);
    if (it == domain.end()) throw std::invalid_argument("unknown hole " + std::to_string(h));
    return it->second;
}

bool CurveClass::contains(HoleId h) const {
    return std::binary_search(enclosed.begin(), enclosed.end(), h);
}

bool CurveClass::subset_of(const CurveClass& other) const {
    return std::includes(other.enclosed.begin(), other.enclosed.end(),
                         enclosed.begin(), enclosed.end());
}

bool CurveClass::disjoint_from(const CurveClass& other) const {
    auto a = enclosed.begin();
    auto b = other.enclosed.begin();
    while (a != enclosed.end() && b != other.enclosed.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return false;
    }
    return true;
}

CurveClass class_of(std::vector<HoleId> holes) {
    std::sort(holes.begin(), holes.end());
    holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
    if (holes.empty()) throw std::invalid_argument("curve class must enclose at least one hole");
    return CurveClass{std::move(holes)};
}

CurveClass class_union(const CurveClass& a, const CurveClass& b) {
    std::vector<HoleId> out;
    std::set_union(a.enclosed.begin(), a.enclosed.end(),
                   b.enclosed.begin(), b.enclosed.end(), std::back_inserter(out));
    return CurveClass{std::move(out)};
}

CurveClass class_intersection(const CurveClass& a, const CurveClass& b) {
    std::vector<HoleId> out;
    std::set_intersection(a.enclosed.begin(), a.enclosed.end(),
                          b.enclosed.begin(), b.enclosed.end(), std::back_inserter(out));
    return CurveClass{std::move(out)};  // may be empty; callers check
}

bool class_order_less(const CurveClass& a, const CurveClass& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.enclosed < b.enclosed;
}

Factorization canonical_form(Factorization f) {
    std::sort(f.twists.begin(), f.twists.end(), class_order_less);
    return f;
}

bool factorization_less(const Factorization& a, const Factorization& b) {
    Factorization ca = canonical_form(a);
    Factorization cb = canonical_form(b);
    return std::lexicographical_compare(ca.twists.begin(), ca.twists.end(),
                                        cb.twists.begin(), cb.twists.end(),
                                        class_order_less);
}

bool same_factorization(const Factorization& a, const Factorization& b) {
    return canonical_form(a).twists == canonical_form(b).twists;
}

PlanarPage build_page(const ResolutionGraph& g, const Arrangement& arr) {
    auto bad = validate_no_bad_vertices(g);
    if (!bad.pass)
        throw std::invalid_argument("graph has bad vertices; page circles would be negative");

    PlanarPage page;
    page.graph = g;
    page.arrangement = arr;

    const VertexId e1 = arr.chain.front();
    if (-g.weight(e1) - g.valency(e1) == 0)
        throw std::invalid_argument("first chain vertex has no hole to serve as the outer boundary");

    // Hole ids run domain by domain; inside a domain, owners ascend by
    // vertex id; E_1's local index 0 is reserved for the outer boundary.
    HoleId next = 1;
    for (int j = 1; j <= arr.k(); ++j) {
        std::vector<VertexId> owners{arr.chain[j - 1]};
        for (VertexId v : arr.satellite(j)) owners.push_back(v);
        std::sort(owners.begin(), owners.end());
        for (VertexId v : owners) {
            int circles = -g.weight(v) - g.valency(v);
            int local = 0;
            if (v == e1) {
                page.outer = Hole{0, e1, local++};
                --circles;
            }
            for (int i = 0; i < circles; ++i) {
                page.holes.push_back(Hole{next, v, local++});
                page.domain[next] = j;
                ++next;
            }
        }
    }
    return page;
}

Factorization standard_factorization(const PlanarPage& page) {
    if (page.holes.empty())
        throw std::invalid_argument("page has no disk holes; the boundary twist has no homology content");

    Factorization f;
    f.twists.push_back(class_of(page.hole_ids()));  // outer twist
    for (const Hole& h : page.holes) f.twists.push_back(class_of({h.id}));
    for (const auto& e : page.graph.edges)
        f.twists.push_back(neck_class(page, e.first, e.second));
    return f;
}

CurveClass neck_class(const PlanarPage& page, VertexId a, VertexId b) {
    if (!page.graph.has_edge(a, b))
        throw std::invalid_argument("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    const VertexId e1 = page.arrangement.chain.front();
    // Far endpoint: the one whose side of the cut edge misses E_1.
    VertexId far = a;
    auto path = tree_path(page.graph, e1, a);
    if (std::find(path.begin(), path.end(), b) == path.end()) far = b;

    std::vector<HoleId> ids;
    std::set<VertexId> far_side;
    {
        // component of graph - edge containing far
        std::deque<VertexId> queue{far};
        far_side.insert(far);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId u : page.graph.neighbors(v)) {
                if ((v == a && u == b) || (v == b && u == a)) continue;
                if (far_side.insert(u).second) queue.push_back(u);
            }
        }
    }
    for (const Hole& h : page.holes)
        if (far_side.count(h.owner)) ids.push_back(h.id);
    return class_of(std::move(ids));
}

namespace {

// Satellite branch containing f: identified by the neighbor of E_j the
// branch hangs from.
VertexId branch_root(const ResolutionGraph& g, VertexId ej, VertexId f) {
    auto path = tree_path(g, ej, f);
    return path[1];
}

}  // namespace

MarkedHoles select_marked_holes(const PlanarPage& page) {
    const ResolutionGraph& g = page.graph;
    const Arrangement& arr = page.arrangement;
    MarkedHoles out;

    for (int j = 1; j <= arr.k(); ++j) {
        const VertexId ej = arr.chain[j - 1];
        std::vector<HoleId> picked;

        // Holes on the chain vertex itself first.
        for (HoleId h : page.holes_of(ej)) {
            if (static_cast<int>(picked.size()) == 3) break;
            picked.push_back(h);
        }

        if (static_cast<int>(picked.size()) < 3) {
            // One hole per satellite branch, branches by ascending root id;
            // inside a branch the deepest owner, then the lowest hole id.
            std::map<VertexId, std::vector<VertexId>> branches;
            for (VertexId f : arr.satellite(j))
                branches[branch_root(g, ej, f)].push_back(f);
            for (const auto& [root, members] : branches) {
                if (static_cast<int>(picked.size()) == 3) break;
                HoleId best = 0;
                int best_depth = -1;
                for (VertexId f : members) {
                    int depth = tree_distance(g, ej, f);
                    for (HoleId h : page.holes_of(f)) {
                        if (depth > best_depth || (depth == best_depth && h < best)) {
                            best = h;
                            best_depth = depth;
                        }
                        break;  // holes_of ascends, first id is lowest
                    }
                }
                if (best_depth >= 0) picked.push_back(best);
            }
        }

        if (static_cast<int>(picked.size()) < 3)
            throw std::invalid_argument("fewer than 3 markable holes in domain " + std::to_string(j));
        out.marks.push_back({picked[0], picked[1], picked[2]});
    }
    return out;
}

std::pair<PlanarPage, Factorization> cap_holes(const PlanarPage& page,
                                               const Factorization& f,
                                               const std::set<HoleId>& capped) {
    for (HoleId h : capped) {
        if (h == page.outer.id)
            throw std::invalid_argument("the outer boundary cannot be capped");
        if (!page.domain.count(h))
            throw std::invalid_argument("unknown hole " + std::to_string(h));
    }

    PlanarPage reduced = page;
    reduced.holes.clear();
    reduced.domain.clear();
    for (const Hole& h : page.holes) {
        if (capped.count(h.id)) continue;
        reduced.holes.push_back(h);
        reduced.domain[h.id] = page.domain.at(h.id);
    }

    // Capping away the whole last domain mirrors the graph reduction: the
    // surviving page is the page of the reduced graph, so its bookkeeping
    // follows the truncated arrangement.
    if (!capped.empty()) {
        const int k = page.arrangement.k();
        bool whole_last_domain = true;
        for (const Hole& h : page.holes) {
            bool in_last = page.domain.at(h.id) == k;
            if (in_last != (capped.count(h.id) != 0)) {
                whole_last_domain = false;
                break;
            }
        }
        if (whole_last_domain && k >= 2) {
            reduced.graph = reduce_for_capping(page.graph, page.arrangement);
            reduced.arrangement.chain.assign(page.arrangement.chain.begin(),
                                             page.arrangement.chain.end() - 1);
            reduced.arrangement.satellites.assign(
                page.arrangement.satellites.begin(),
                page.arrangement.satellites.begin() + k);
        }
    }

    Factorization out;
    for (const CurveClass& c : f.twists) {
        std::vector<HoleId> kept;
        for (HoleId h : c.enclosed)
            if (!capped.count(h)) kept.push_back(h);
        if (!kept.empty()) out.twists.push_back(CurveClass{std::move(kept)});
    }
    return {std::move(reduced), std::move(out)};
}

Factorization lantern_replace_last(const PlanarPage& page, const Factorization& f) {
    const Arrangement& arr = page.arrangement;
    const VertexId ek = arr.chain.back();
    const int k = arr.k();
    if (page.graph.weight(ek) != -4)
        throw std::invalid_argument("last chain vertex does not have weight -4");

    // The chain twist through E_k's sphere.
    CurveClass dk = (k == 1) ? class_of(page.hole_ids())
                             : neck_class(page, arr.chain[k - 2], ek);

    // The other three circles of E_k's sphere: its own holes and the
    // necks toward its satellite branches.
    std::vector<CurveClass> circles;
    for (HoleId h : page.holes_of(ek)) circles.push_back(class_of({h}));
    for (VertexId u : page.graph.neighbors(ek)) {
        if (k >= 2 && u == arr.chain[k - 2]) continue;
        circles.push_back(neck_class(page, ek, u));
    }
    if (circles.size() != 3)
        throw std::invalid_argument("the -4 sphere does not carry exactly three replaceable circles");

    Factorization out = f;
    auto remove_one = [&out](const CurveClass& c) {
        auto it = std::find(out.twists.begin(), out.twists.end(), c);
        if (it == out.twists.end())
            throw std::invalid_argument("factorization does not contain the required twist");
        out.twists.erase(it);
    };
    remove_one(dk);
    for (const CurveClass& c : circles) remove_one(c);
    out.twists.push_back(class_union(circles[0], circles[1]));
    out.twists.push_back(class_union(circles[0], circles[2]));
    out.twists.push_back(class_union(circles[1], circles[2]));
    return out;
}

}  // namespace openbook
