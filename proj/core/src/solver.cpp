#include "openbook/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace openbook {

namespace {

// Search state over holes indexed 0..n-1. Residual budgets start at the
// target profile and are consumed class by class; a branch closes when
// every pair budget is zero and the leftovers are paid with singletons.
struct Search {
    std::vector<HoleId> ids;                 // index -> hole id
    int n = 0;
    std::vector<int> singles;                // residual m(v)
    std::vector<std::vector<int>> pairs;     // residual m(v,w)
    std::vector<long> pair_load;             // row sums of pairs
    long total_singles = 0;
    long total_pairs = 0;

    const SolverConfig* cfg = nullptr;
    std::size_t nodes = 0;
    bool stop = false;
    SearchStatus status = SearchStatus::complete;
    std::vector<std::vector<int>> path;      // chosen classes (index form)
    std::vector<Factorization> found;

    void emit();
    void close_with_singletons(const std::vector<int>* last);
    bool feasible(std::size_t size_cap) const;
    void run(const std::vector<int>* last);
    void try_class(const std::vector<int>& cls);
};

void Search::emit() {
    Factorization f;
    for (const auto& cls : path) {
        std::vector<HoleId> holes;
        holes.reserve(cls.size());
        for (int i : cls) holes.push_back(ids[i]);
        f.twists.push_back(CurveClass{std::move(holes)});
    }
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < singles[i]; ++c)
            f.twists.push_back(CurveClass{{ids[i]}});
    if (found.size() == cfg->max_solutions) {
        status = SearchStatus::truncated_by_solutions;
        stop = true;
        return;
    }
    found.push_back(canonical_form(std::move(f)));
}

void Search::close_with_singletons(const std::vector<int>* last) {
    // All pair budgets are zero, so only singletons can follow. They are
    // canonical only if they do not precede the last chosen class.
    if (last != nullptr && last->size() == 1) {
        for (int i = 0; i < (*last)[0]; ++i)
            if (singles[i] > 0) return;
    }
    emit();
}

bool Search::feasible(std::size_t size_cap) const {
    if (size_cap < 2) return false;
    // Pair budget per single cannot beat classes of the largest allowed size.
    if (2 * total_pairs > total_singles * static_cast<long>(size_cap - 1)) return false;
    for (int i = 0; i < n; ++i) {
        if (pair_load[i] == 0) continue;
        if (singles[i] == 0) return false;
        int partners = 0;
        for (int j = 0; j < n; ++j)
            if (pairs[i][j] > 0) ++partners;
        long cap = std::min<long>(static_cast<long>(size_cap) - 1, partners);
        if (pair_load[i] > static_cast<long>(singles[i]) * cap) return false;
    }
    return true;
}

void Search::try_class(const std::vector<int>& cls) {
    if (stop) return;
    if (++nodes > cfg->node_budget) {
        status = SearchStatus::truncated_by_budget;
        stop = true;
        return;
    }

    for (int i : cls) {
        --singles[i];
        --total_singles;
    }
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) {
            int i = cls[a], j = cls[b];
            --pairs[i][j];
            --pairs[j][i];
            pair_load[i] -= 1;
            pair_load[j] -= 1;
            total_pairs -= 1;
        }

    path.push_back(cls);
    run(&path.back());
    path.pop_back();

    for (int i : cls) {
        ++singles[i];
        ++total_singles;
    }
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) {
            int i = cls[a], j = cls[b];
            ++pairs[i][j];
            ++pairs[j][i];
            pair_load[i] += 1;
            pair_load[j] += 1;
            total_pairs += 1;
        }
}

void Search::run(const std::vector<int>* last) {
    if (stop) return;
    if (total_pairs == 0) {
        close_with_singletons(last);
        return;
    }

    std::size_t size_cap = last ? last->size() : static_cast<std::size_t>(n);
    if (!feasible(size_cap)) return;

    std::vector<int> live;
    for (int i = 0; i < n; ++i)
        if (singles[i] > 0) live.push_back(i);
    if (live.size() < 2) return;
    size_cap = std::min(size_cap, live.size());

    // Classes shrink along the canonical order, so every hole must be able
    // to pay its remaining pair load with classes no bigger than the one
    // chosen now: pair_load(v) <= m(v) * (s - 1) for every live hole.
    std::size_t size_floor = 2;
    for (int i : live) {
        if (pair_load[i] == 0) continue;
        long need = 1 + (pair_load[i] + singles[i] - 1) / singles[i];
        size_floor = std::max(size_floor, static_cast<std::size_t>(need));
    }
    if (size_floor > size_cap) return;

    // Partners a class member drags along: when the pair budget equals the
    // single budget, every remaining class through one contains the other.
    std::vector<std::vector<int>> forced(n);
    for (int i : live)
        for (int j : live)
            if (j != i && pairs[i][j] == singles[i]) forced[i].push_back(j);

    // Candidate classes in canonical order: size descending, lexicographic
    // ascending within a size; pair compatibility and forced-partner
    // closure pruned while building.
    std::vector<int> combo;
    std::vector<int> pending;  // forced partners that must still be placed
    auto extend = [&](auto&& self, std::size_t want, std::size_t from) -> void {
        if (stop) return;
        if (combo.size() == want) {
            if (!pending.empty()) return;
            if (last != nullptr && want == last->size() && combo < *last) return;
            try_class(combo);
            return;
        }
        if (combo.size() + pending.size() > want) return;
        for (std::size_t idx = from; idx < live.size(); ++idx) {
            if (live.size() - idx < want - combo.size()) break;
            const int cand = live[idx];

            // A skipped forced partner kills this and every later branch.
            bool missed = false;
            for (int p : pending)
                if (p < cand) missed = true;
            if (missed) break;

            bool compat = true;
            for (int chosen : combo)
                if (pairs[chosen][cand] == 0) {
                    compat = false;
                    break;
                }
            if (!compat) continue;

            // Fold in the candidate's forced partners.
            bool ok = true;
            std::vector<int> added;
            for (int q : forced[cand]) {
                if (q == cand) continue;
                if (std::find(combo.begin(), combo.end(), q) != combo.end()) continue;
                if (std::find(pending.begin(), pending.end(), q) != pending.end()) continue;
                if (q < cand) {
                    ok = false;  // ascending order: q is out of reach
                    break;
                }
                for (int chosen : combo)
                    if (pairs[chosen][q] == 0) {
                        ok = false;
                        break;
                    }
                if (!ok || pairs[cand][q] == 0) {
                    ok = false;
                    break;
                }
                pending.push_back(q);
                added.push_back(q);
            }

            auto pend_it = std::find(pending.begin(), pending.end(), cand);
            const bool was_pending = pend_it != pending.end();
            if (ok && was_pending) pending.erase(pend_it);

            if (ok && combo.size() + 1 + pending.size() <= want) {
                combo.push_back(cand);
                self(self, want, idx + 1);
                combo.pop_back();
            }
            if (ok && was_pending) pending.push_back(cand);
            for (int q : added)
                pending.erase(std::find(pending.begin(), pending.end(), q));
        }
    };
    for (std::size_t s = size_cap; s >= size_floor && !stop; --s) extend(extend, s, 0);
}

}  // namespace

SolutionSet enumerate_candidates(const std::vector<HoleId>& holes,
                                 const MultiplicityProfile& target,
                                 const SolverConfig& cfg) {
    std::vector<HoleId> ids = holes;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Search s;
    s.ids = ids;
    s.n = static_cast<int>(ids.size());
    s.cfg = &cfg;
    s.singles.assign(s.n, 0);
    s.pairs.assign(s.n, std::vector<int>(s.n, 0));
    s.pair_load.assign(s.n, 0);

    std::map<HoleId, int> index;
    for (int i = 0; i < s.n; ++i) index[ids[i]] = i;

    for (int i = 0; i < s.n; ++i) {
        s.singles[i] = target.m(ids[i]);
        if (s.singles[i] < 0) throw std::invalid_argument("negative multiplicity in target");
        s.total_singles += s.singles[i];
    }
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j) {
            int v = target.m(ids[i], ids[j]);
            if (v < 0) throw std::invalid_argument("negative joint multiplicity in target");
            if (v > std::min(s.singles[i], s.singles[j])) {
                std::ostringstream msg;
                msg << "infeasible target: m(" << ids[i] << "," << ids[j] << ") = " << v
                    << " exceeds min(m(" << ids[i] << "), m(" << ids[j] << "))";
                throw std::invalid_argument(msg.str());
            }
            s.pairs[i][j] = s.pairs[j][i] = v;
            s.pair_load[i] += v;
            s.pair_load[j] += v;
            s.total_pairs += v;
        }

    s.run(nullptr);

    SolutionSet out;
    out.status = s.status;
    out.nodes_expanded = s.nodes;
    if (s.status == SearchStatus::complete || cfg.report_partial)
        out.solutions = std::move(s.found);
    std::sort(out.solutions.begin(), out.solutions.end(), factorization_less);
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                        out.solutions.end());
    return out;
}

bool is_laminar(const Factorization& f) {
    for (std::size_t i = 0; i < f.twists.size(); ++i)
        for (std::size_t j = i + 1; j < f.twists.size(); ++j) {
            const CurveClass& a = f.twists[i];
            const CurveClass& b = f.twists[j];
            if (!a.subset_of(b) && !b.subset_of(a) && !a.disjoint_from(b)) return false;
        }
    return true;
}

std::string LanternMove::describe() const {
    auto show = [](const CurveClass& c) {
        std::string s = "{";
        for (std::size_t i = 0; i < c.enclosed.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c.enclosed[i]);
        }
        return s + "}";
    };
    std::string s = forward ? "forward " : "backward ";
    s += show(parts[0]) + " " + show(parts[1]) + " " + show(parts[2]) + " | " + show(merged);
    return s;
}

std::vector<std::pair<LanternMove, Factorization>> lantern_moves(const Factorization& f) {
    const Factorization canon = canonical_form(f);
    const auto& cls = canon.twists;
    const std::size_t n = cls.size();

    std::vector<std::pair<LanternMove, Factorization>> out;
    std::set<std::vector<CurveClass>> seen;

    auto remainder = [&cls](const std::vector<std::size_t>& drop) {
        Factorization rest;
        std::size_t d = 0;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (d < drop.size() && drop[d] == i) {
                ++d;
                continue;
            }
            rest.twists.push_back(cls[i]);
        }
        return rest;
    };

    // Forward: three pairwise disjoint classes plus their union.
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t a = 0; a < n; ++a) {
            if (a == u) continue;
            if (!cls[a].subset_of(cls[u])) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (b == u) continue;
                if (!cls[b].subset_of(cls[u]) || !cls[a].disjoint_from(cls[b])) continue;
                for (std::size_t c = b + 1; c < n; ++c) {
                    if (c == u) continue;
                    if (!cls[c].subset_of(cls[u])) continue;
                    if (!cls[a].disjoint_from(cls[c]) || !cls[b].disjoint_from(cls[c])) continue;
                    if (cls[a].size() + cls[b].size() + cls[c].size() != cls[u].size()) continue;

                    std::vector<std::size_t> drop{a, b, c, u};
                    std::sort(drop.begin(), drop.end());
                    Factorization result = remainder(drop);
                    result.twists.push_back(class_union(cls[a], cls[b]));
                    result.twists.push_back(class_union(cls[a], cls[c]));
                    result.twists.push_back(class_union(cls[b], cls[c]));
                    result = canonical_form(std::move(result));
                    if (seen.insert(result.twists).second) {
                        LanternMove move{true, {cls[a], cls[b], cls[c]}, cls[u]};
                        out.emplace_back(std::move(move), std::move(result));
                    }
                }
            }
        }
    }

    // Backward: three classes pairwise overlapping like pair unions.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            for (std::size_t z = y + 1; z < n; ++z) {
                CurveClass a = class_intersection(cls[x], cls[y]);
                CurveClass b = class_intersection(cls[x], cls[z]);
                CurveClass c = class_intersection(cls[y], cls[z]);
                if (a.enclosed.empty() || b.enclosed.empty() || c.enclosed.empty()) continue;
                if (!a.disjoint_from(b) || !a.disjoint_from(c) || !b.disjoint_from(c)) continue;
                if (class_union(a, b) != cls[x]) continue;
                if (class_union(a, c) != cls[y]) continue;
                if (class_union(b, c) != cls[z]) continue;

                Factorization result = remainder({x, y, z});
                CurveClass u = class_union(class_union(a, b), c);
                result.twists.push_back(a);
                result.twists.push_back(b);
                result.twists.push_back(c);
                result.twists.push_back(u);
                result = canonical_form(std::move(result));
                if (seen.insert(result.twists).second) {
                    LanternMove move{false, {a, b, c}, u};
                    out.emplace_back(std::move(move), std::move(result));
                }
            }

    return out;
}

OrbitResult lantern_orbit(const Factorization& f, std::size_t node_cap) {
    OrbitResult out;
    Factorization start = canonical_form(f);
    std::set<std::vector<CurveClass>> visited{start.twists};
    std::deque<Factorization> queue{start};

    while (!queue.empty()) {
        Factorization cur = std::move(queue.front());
        queue.pop_front();
        for (auto& [move, next] : lantern_moves(cur)) {
            if (visited.count(next.twists)) continue;
            if (visited.size() >= node_cap) {
                out.complete = false;
                queue.clear();
                break;
            }
            visited.insert(next.twists);
            queue.push_back(std::move(next));
        }
    }
    for (const auto& twists : visited) out.states.push_back(Factorization{twists});
    std::sort(out.states.begin(), out.states.end(), factorization_less);
    return out;
}

namespace {

// Classes covering every mark of index >= depth.
bool covers_marks_from(const CurveClass& c, const MarkedHoles& marks, int depth) {
    for (int j = depth; j <= marks.k(); ++j)
        for (HoleId m : marks.marks[j - 1])
            if (!c.contains(m)) return false;
    return true;
}

// Backtracking over instance-distinct classes: a nested chain D_1..D_len
// (D_1 the full class) covering the marks, then optionally the lantern
// trio on the last domain's marks.
bool find_chain_then_trio(const Factorization& f, const MarkedHoles& marks,
                          const CurveClass& all_holes, int len, bool want_trio,
                          std::vector<bool>& used, int depth, const CurveClass* prev) {
    if (depth > len) {
        if (!want_trio) return true;
        const auto& top = marks.marks[marks.k() - 1];
        auto matches = [&top](const CurveClass& c, int skip) {
            for (int s = 0; s < 3; ++s)
                if (c.contains(top[s]) != (s != skip)) return false;
            return true;
        };
        std::function<bool(int)> place = [&](int s) -> bool {
            if (s == 3) return true;
            for (std::size_t i = 0; i < f.twists.size(); ++i) {
                if (used[i] || !matches(f.twists[i], s)) continue;
                used[i] = true;
                if (place(s + 1)) return true;
                used[i] = false;
            }
            return false;
        };
        return place(0);
    }
    for (std::size_t i = 0; i < f.twists.size(); ++i) {
        if (used[i]) continue;
        const CurveClass& c = f.twists[i];
        if (depth == 1 && !(c == all_holes)) continue;
        if (prev != nullptr && !c.subset_of(*prev)) continue;
        if (!covers_marks_from(c, marks, depth)) continue;
        used[i] = true;
        if (find_chain_then_trio(f, marks, all_holes, len, want_trio, used, depth + 1, &c))
            return true;
        used[i] = false;
    }
    return false;
}

bool has_property_f1(const Factorization& f, const MarkedHoles& marks, const CurveClass& all_holes) {
    std::vector<bool> used(f.twists.size(), false);
    return find_chain_then_trio(f, marks, all_holes, marks.k(), false, used, 1, nullptr);
}

bool has_property_f2(const Factorization& f, const MarkedHoles& marks, const CurveClass& all_holes) {
    std::vector<bool> used(f.twists.size(), false);
    return find_chain_then_trio(f, marks, all_holes, marks.k() - 1, true, used, 1, nullptr);
}

}  // namespace

ClassificationReport classify_solutions(const SolutionSet& sols,
                                        const Factorization& standard,
                                        const MarkedHoles& marks,
                                        std::size_t orbit_cap) {
    ClassificationReport report;

    CurveClass all_holes;
    for (const CurveClass& c : standard.twists)
        for (HoleId h : c.enclosed) all_holes.enclosed.push_back(h);
    std::sort(all_holes.enclosed.begin(), all_holes.enclosed.end());
    all_holes.enclosed.erase(std::unique(all_holes.enclosed.begin(), all_holes.enclosed.end()),
                             all_holes.enclosed.end());

    OrbitResult orbit = lantern_orbit(standard, orbit_cap);
    report.orbit_complete = orbit.complete;
    std::set<std::vector<CurveClass>> orbit_set;
    for (const Factorization& s : orbit.states) orbit_set.insert(s.twists);

    bool contains_standard = false;
    bool all_in_orbit = true;
    for (const Factorization& sol : sols.solutions) {
        SolutionFlags flags;
        flags.is_standard = same_factorization(sol, standard);
        flags.has_outer =
            std::find(sol.twists.begin(), sol.twists.end(), all_holes) != sol.twists.end();
        flags.f1 = has_property_f1(sol, marks, all_holes);
        flags.f2 = has_property_f2(sol, marks, all_holes);
        flags.in_orbit = orbit_set.count(canonical_form(sol).twists) != 0;
        contains_standard = contains_standard || flags.is_standard;
        if (!flags.is_standard && !flags.in_orbit) all_in_orbit = false;
        report.flags.push_back(flags);
    }

    if (sols.status != SearchStatus::complete) {
        report.verdict = Verdict::inconclusive;
    } else if (sols.solutions.size() == 1 && contains_standard) {
        report.verdict = Verdict::unique_standard;
    } else if (contains_standard && all_in_orbit) {
        report.verdict = Verdict::standard_plus_lantern;
    } else {
        report.verdict = Verdict::other;
    }
    return report;
}

}  // namespace openbook
