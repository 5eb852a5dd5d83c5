#pragma once
// The planar page of the open book attached to an arranged tree, its
// standard positive factorization, marked holes, hole capping, and the
// lantern rewrite at a -4 end vertex. Curves are represented purely by
// their homology content: the set of holes they enclose.

#include <array>
#include <compare>
#include <set>
#include <utility>

#include "openbook/graph.hpp"

namespace openbook {

using HoleId = int;  // disk holes are 1..N; 0 is the outer boundary

struct Hole {
    HoleId id = 0;
    VertexId owner = 0;
    int local_index = 0;

    bool operator==(const Hole&) const = default;
};

// Disk-with-holes model: each vertex E contributes -E.E - a(E) boundary
// circles, one of E_1's serving as the outer boundary of the disk.
struct PlanarPage {
    ResolutionGraph graph;
    Arrangement arrangement;
    std::vector<Hole> holes;       // disk holes, ascending id
    Hole outer;                    // id 0, owner E_1
    std::map<HoleId, int> domain;  // disk hole -> annular domain index j

    std::vector<HoleId> hole_ids() const;
    std::vector<HoleId> holes_of(VertexId v) const;
    VertexId owner_of(HoleId h) const;
    int domain_of(HoleId h) const;
};

// Homology class of a simple closed curve: the nonempty set of enclosed holes.
struct CurveClass {
    std::vector<HoleId> enclosed;  // sorted ascending, unique

    auto operator<=>(const CurveClass&) const = default;
    std::size_t size() const { return enclosed.size(); }
    bool contains(HoleId h) const;
    bool subset_of(const CurveClass& other) const;
    bool disjoint_from(const CurveClass& other) const;
};

CurveClass class_of(std::vector<HoleId> holes);
CurveClass class_union(const CurveClass& a, const CurveClass& b);
CurveClass class_intersection(const CurveClass& a, const CurveClass& b);

// Canonical class order: larger classes first, ascending hole ids within
// a size. Canonical factorizations sort their twists this way.
bool class_order_less(const CurveClass& a, const CurveClass& b);

struct Factorization {
    std::vector<CurveClass> twists;  // multiset

    bool operator==(const Factorization&) const = default;
};

Factorization canonical_form(Factorization f);
bool factorization_less(const Factorization& a, const Factorization& b);
bool same_factorization(const Factorization& a, const Factorization& b);

// Three marked holes per annular domain, in distinct branches where the
// satellite set forces it; marks (j, 1..3).
struct MarkedHoles {
    std::vector<std::array<HoleId, 3>> marks;  // marks[j-1] = domain j

    int k() const { return static_cast<int>(marks.size()); }
};

PlanarPage build_page(const ResolutionGraph& g, const Arrangement& arr);

// Outer twist around the whole disk, one boundary twist per hole, one
// neck twist per edge (enclosing the holes on the far side from E_1).
Factorization standard_factorization(const PlanarPage& page);

CurveClass neck_class(const PlanarPage& page, VertexId a, VertexId b);

MarkedHoles select_marked_holes(const PlanarPage& page);

// Fill the given holes with disks: they vanish from the page and from
// every twist; classes left empty disappear. Capping every hole of the
// last annular domain reproduces the page of the reduced graph.
std::pair<PlanarPage, Factorization> cap_holes(const PlanarPage& page,
                                               const Factorization& f,
                                               const std::set<HoleId>& capped);

// At a -4 last chain vertex, replace the chain twist through it together
// with the three other circles of its sphere by the three pair unions.
Factorization lantern_replace_last(const PlanarPage& page, const Factorization& f);

}  // namespace openbook
