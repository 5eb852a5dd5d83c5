#pragma once
// Multiplicity profiles: how many twists of a factorization enclose each
// hole and each pair of holes. This is the lantern-invariant fingerprint
// of a monodromy, stored densely over a declared hole universe.

#include "openbook/page.hpp"

namespace openbook {

struct MultiplicityProfile {
    std::map<HoleId, int> single;                       // m(v), zeros included
    std::map<std::pair<HoleId, HoleId>, int> joint;     // m(v,w), v < w, dense

    std::vector<HoleId> universe() const;
    int m(HoleId v) const;
    int m(HoleId v, HoleId w) const;
    long total_single() const;
    long total_joint() const;

    bool operator==(const MultiplicityProfile&) const = default;
};

MultiplicityProfile profile(const Factorization& f, const std::vector<HoleId>& universe);

// Entrywise equality; the two profiles must speak about the same holes.
bool profiles_equal(const MultiplicityProfile& a, const MultiplicityProfile& b);

struct MarkPairViolation {
    int i = 0, r = 0, j = 0, s = 0;
    HoleId a = 0, b = 0;
    int expected = 0, actual = 0;
};
struct MarkCheckReport {
    bool pass = true;
    std::vector<MarkPairViolation> violations;
};
// Joint multiplicity of marks (i,r), (j,s) must equal min(i, j).
MarkCheckReport check_min_formula(const PlanarPage& page, const MarkedHoles& marks,
                                  const MultiplicityProfile& p);

struct BoundViolation {
    HoleId hole = 0;
    int expected = 0, actual = 0;
    std::string rule;
};
struct BoundsReport {
    bool pass = true;
    std::vector<BoundViolation> violations;
};
// For the standard factorization: m(v) = 2 + dist(E_1, owner(v)), and in
// particular every hole of domain j has m <= 2j.
BoundsReport check_bounds(const PlanarPage& page, const MultiplicityProfile& p);

}  // namespace openbook
