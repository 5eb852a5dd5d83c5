#include "openbook/multiplicity.hpp"

#include <algorithm>

namespace openbook {

std::vector<HoleId> MultiplicityProfile::universe() const {
    std::vector<HoleId> out;
    out.reserve(single.size());
    for (const auto& [h, c] : single) out.push_back(h);
    return out;
}

int MultiplicityProfile::m(HoleId v) const {
    auto it = single.find(v);
    if (it == single.end()) throw std::invalid_argument("hole outside profile universe");
    return it->second;
}

int MultiplicityProfile::m(HoleId v, HoleId w) const {
    if (v == w) throw std::invalid_argument("joint multiplicity needs two distinct holes");
    auto key = v < w ? std::make_pair(v, w) : std::make_pair(w, v);
    auto it = joint.find(key);
    if (it == joint.end()) throw std::invalid_argument("hole pair outside profile universe");
    return it->second;
}

long MultiplicityProfile::total_single() const {
    long t = 0;
    for (const auto& [h, c] : single) t += c;
    return t;
}

long MultiplicityProfile::total_joint() const {
    long t = 0;
    for (const auto& [p, c] : joint) t += c;
    return t;
}

MultiplicityProfile profile(const Factorization& f, const std::vector<HoleId>& universe) {
    MultiplicityProfile p;
    for (HoleId v : universe) p.single[v] = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            HoleId a = universe[i], b = universe[j];
            p.joint[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = 0;
        }

    for (const CurveClass& c : f.twists) {
        for (HoleId v : c.enclosed) {
            auto it = p.single.find(v);
            if (it == p.single.end())
                throw std::invalid_argument("twist encloses a hole outside the universe");
            ++it->second;
        }
        for (std::size_t i = 0; i < c.enclosed.size(); ++i)
            for (std::size_t j = i + 1; j < c.enclosed.size(); ++j)
                ++p.joint[{c.enclosed[i], c.enclosed[j]}];
    }
    return p;
}

bool profiles_equal(const MultiplicityProfile& a, const MultiplicityProfile& b) {
    auto keys_match = [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return false;
        auto ix = x.begin();
        auto iy = y.begin();
        for (; ix != x.end(); ++ix, ++iy)
            if (ix->first != iy->first) return false;
        return true;
    };
    if (!keys_match(a.single, b.single) || !keys_match(a.joint, b.joint))
        throw std::invalid_argument("profiles over different hole universes");
    return a.single == b.single && a.joint == b.joint;
}

MarkCheckReport check_min_formula(const PlanarPage& page, const MarkedHoles& marks,
                                  const MultiplicityProfile& p) {
    (void)page;
    MarkCheckReport report;
    const int k = marks.k();
    for (int i = 1; i <= k; ++i)
        for (int r = 0; r < 3; ++r)
            for (int j = i; j <= k; ++j)
                for (int s = (j == i ? r + 1 : 0); s < 3; ++s) {
                    HoleId a = marks.marks[i - 1][r];
                    HoleId b = marks.marks[j - 1][s];
                    int expected = std::min(i, j);
                    int actual = p.m(a, b);
                    if (actual != expected) {
                        report.pass = false;
                        report.violations.push_back({i, r + 1, j, s + 1, a, b, expected, actual});
                    }
                }
    return report;
}

BoundsReport check_bounds(const PlanarPage& page, const MultiplicityProfile& p) {
    BoundsReport report;
    const VertexId e1 = page.arrangement.chain.front();
    for (const Hole& h : page.holes) {
        int d = tree_distance(page.graph, e1, h.owner);
        int expected = 2 + d;
        int actual = p.m(h.id);
        if (actual != expected) {
            report.pass = false;
            report.violations.push_back({h.id, expected, actual, "m(v) = 2 + dist"});
        }
        int j = page.domain_of(h.id);
        if (actual > 2 * j) {
            report.pass = false;
            report.violations.push_back({h.id, 2 * j, actual, "m(v) <= 2j"});
        }
    }
    return report;
}

}  // namespace openbook
