#include "openbook/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace openbook {

namespace {

using ordered_json = nlohmann::ordered_json;

// The factorization document sorts twists purely lexicographically by
// hole ids; repeats stay adjacent.
std::vector<std::vector<HoleId>> lex_sorted_twists(const Factorization& f) {
    std::vector<std::vector<HoleId>> out;
    out.reserve(f.twists.size());
    for (const CurveClass& c : f.twists) out.push_back(c.enclosed);
    std::sort(out.begin(), out.end());
    return out;
}

// Solution sets keep the canonical class order (size descending).
std::vector<std::vector<HoleId>> canonical_twists(const Factorization& f) {
    Factorization c = canonical_form(f);
    std::vector<std::vector<HoleId>> out;
    out.reserve(c.twists.size());
    for (const CurveClass& t : c.twists) out.push_back(t.enclosed);
    return out;
}

void print_twist_line(std::ostream& out, const std::vector<HoleId>& t) {
    out << "  ";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out << ' ';
        out << t[i];
    }
    out << '\n';
}

}  // namespace

std::string render_validation(const ValidationDocument& doc, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["tree"] = doc.tree_ok;
        j["bad_vertices"] = doc.bad_vertices.offending;
        j["mode"] = to_string(doc.mode);
        j["offending"] = doc.hypotheses.offending;
        j["status"] = to_string(doc.status);
        j["pass"] = doc.pass;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "tree: " << (doc.tree_ok ? "ok" : "not-a-tree") << '\n';
    out << "bad-vertices:";
    if (doc.bad_vertices.offending.empty()) out << " none";
    for (VertexId v : doc.bad_vertices.offending) out << ' ' << v;
    out << '\n';
    out << "mode: " << to_string(doc.mode) << '\n';
    out << "offending:";
    if (doc.hypotheses.offending.empty()) out << " none";
    for (VertexId v : doc.hypotheses.offending) out << ' ' << v;
    out << '\n';
    out << "status: " << to_string(doc.status) << '\n';
    out << "result: " << (doc.pass ? "pass" : "fail") << '\n';
    return out.str();
}

std::string render_arrangement(const Arrangement& arr, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["chain"] = arr.chain;
        ordered_json sat = ordered_json::object();
        for (int i = 2; i <= arr.k(); ++i)
            sat["R" + std::to_string(i)] = arr.satellite(i);
        j["satellites"] = sat;
        j["k"] = arr.k();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "chain:";
    for (VertexId v : arr.chain) out << ' ' << v;
    out << '\n';
    out << "satellites:\n";
    for (int i = 2; i <= arr.k(); ++i) {
        out << "  R" << i << ":";
        if (arr.satellite(i).empty()) out << " none";
        for (VertexId v : arr.satellite(i)) out << ' ' << v;
        out << '\n';
    }
    out << "k: " << arr.k() << '\n';
    return out.str();
}

std::string render_open_book(const PlanarPage& page, const Factorization& f, OutputFormat fmt) {
    auto twists = lex_sorted_twists(f);
    if (fmt == OutputFormat::json) {
        ordered_json j;
        ordered_json holes = ordered_json::array();
        for (const Hole& h : page.holes) {
            ordered_json rec;
            rec["id"] = h.id;
            rec["owner"] = h.owner;
            rec["domain"] = page.domain.at(h.id);
            holes.push_back(rec);
        }
        j["holes"] = holes;
        j["outer"] = page.outer.owner;
        j["twists"] = twists;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "holes:\n";
    for (const Hole& h : page.holes)
        out << "  " << h.id << " owner " << h.owner << " domain " << page.domain.at(h.id) << '\n';
    out << "outer: " << page.outer.owner << '\n';
    out << "twists:\n";
    for (const auto& t : twists) print_twist_line(out, t);
    return out.str();
}

std::string render_profile(const MultiplicityProfile& p, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        ordered_json single = ordered_json::array();
        for (const auto& [h, c] : p.single) single.push_back({h, c});
        ordered_json joint = ordered_json::array();
        for (const auto& [pr, c] : p.joint) joint.push_back({pr.first, pr.second, c});
        j["single"] = single;
        j["joint"] = joint;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "single:\n";
    for (const auto& [h, c] : p.single) out << "  " << h << ' ' << c << '\n';
    out << "joint:\n";
    for (const auto& [pr, c] : p.joint)
        out << "  " << pr.first << ' ' << pr.second << ' ' << c << '\n';
    return out.str();
}

std::string render_solutions(const SolutionSet& sols, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["status"] = to_string(sols.status);
        j["count"] = sols.solutions.size();
        ordered_json list = ordered_json::array();
        for (const Factorization& f : sols.solutions) list.push_back(canonical_twists(f));
        j["solutions"] = list;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "status: " << to_string(sols.status) << '\n';
    out << "count: " << sols.solutions.size() << '\n';
    for (std::size_t i = 0; i < sols.solutions.size(); ++i) {
        out << "solution " << (i + 1) << ":\n";
        for (const auto& t : canonical_twists(sols.solutions[i])) print_twist_line(out, t);
    }
    return out.str();
}

std::string render_orbit(const OrbitResult& orbit, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["status"] = orbit.complete ? "complete" : "truncated";
        j["count"] = orbit.states.size();
        ordered_json list = ordered_json::array();
        for (const Factorization& f : orbit.states) list.push_back(canonical_twists(f));
        j["orbit"] = list;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "status: " << (orbit.complete ? "complete" : "truncated") << '\n';
    out << "count: " << orbit.states.size() << '\n';
    for (std::size_t i = 0; i < orbit.states.size(); ++i) {
        out << "state " << (i + 1) << ":\n";
        for (const auto& t : canonical_twists(orbit.states[i])) print_twist_line(out, t);
    }
    return out.str();
}

std::string render_verification(const VerificationReport& r, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        ordered_json input;
        input["vertices"] = r.vertex_count;
        input["edges"] = r.edge_count;
        input["min_weight"] = r.min_weight;
        input["max_weight"] = r.max_weight;
        j["input"] = input;
        j["tree"] = r.tree_ok;
        j["bad_vertices"] = r.bad_vertices.offending;
        j["hypothesis_status"] = to_string(r.status);
        j["mode"] = to_string(r.mode);
        j["mode_met"] = r.mode_met;
        if (r.arrangement) {
            ordered_json arr;
            arr["chain"] = r.arrangement->chain;
            ordered_json sat = ordered_json::object();
            for (int i = 2; i <= r.arrangement->k(); ++i)
                sat["R" + std::to_string(i)] = r.arrangement->satellite(i);
            arr["satellites"] = sat;
            j["arrangement"] = arr;
        } else {
            j["arrangement"] = nullptr;
        }
        ordered_json page;
        page["holes"] = r.hole_count;
        ordered_json per = ordered_json::object();
        for (const auto& [dom, count] : r.holes_per_domain)
            per["V" + std::to_string(dom)] = count;
        page["holes_per_domain"] = per;
        j["page"] = page;
        ordered_json digest;
        digest["total_single"] = r.single_mass;
        digest["total_joint"] = r.joint_mass;
        j["profile_digest"] = digest;
        ordered_json solver;
        solver["status"] = r.solver_status ? to_string(*r.solver_status) : "not-run";
        solver["nodes"] = r.solver_nodes;
        solver["solutions"] = r.solution_count;
        j["solver"] = solver;
        if (r.classification) {
            ordered_json flags = ordered_json::array();
            for (const SolutionFlags& f : r.classification->flags) {
                ordered_json rec;
                rec["is_standard"] = f.is_standard;
                rec["has_outer"] = f.has_outer;
                rec["F1"] = f.f1;
                rec["F2"] = f.f2;
                rec["in_orbit"] = f.in_orbit;
                flags.push_back(rec);
            }
            j["classification"] = flags;
        } else {
            j["classification"] = nullptr;
        }
        j["verdict"] = to_string(r.verdict);
        j["informational"] = r.informational_other;
        ordered_json timing = ordered_json::object();
        for (const StageTiming& t : r.timings) timing[t.stage] = t.ms;
        j["timing_ms"] = timing;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "input: " << r.vertex_count << " vertices, " << r.edge_count
        << " edges, weights [" << r.min_weight << ", " << r.max_weight << "]\n";
    out << "tree: " << (r.tree_ok ? "ok" : "not-a-tree") << '\n';
    out << "bad-vertices:";
    if (r.bad_vertices.offending.empty()) out << " none";
    for (VertexId v : r.bad_vertices.offending) out << ' ' << v;
    out << '\n';
    out << "hypotheses: " << to_string(r.status) << " (mode " << to_string(r.mode)
        << (r.mode_met ? ", met" : ", not met") << ")\n";
    if (r.arrangement) {
        out << "chain:";
        for (VertexId v : r.arrangement->chain) out << ' ' << v;
        out << '\n';
    }
    out << "holes: " << r.hole_count;
    for (const auto& [dom, count] : r.holes_per_domain)
        out << " V" << dom << "=" << count;
    out << '\n';
    out << "profile: single-mass " << r.single_mass << ", joint-mass " << r.joint_mass << '\n';
    out << "solver: " << (r.solver_status ? to_string(*r.solver_status) : "not-run")
        << ", nodes " << r.solver_nodes << ", solutions " << r.solution_count << '\n';
    if (r.classification) {
        for (std::size_t i = 0; i < r.classification->flags.size(); ++i) {
            const SolutionFlags& f = r.classification->flags[i];
            out << "solution " << (i + 1) << ": standard=" << (f.is_standard ? "yes" : "no")
                << " outer=" << (f.has_outer ? "yes" : "no") << " F1=" << (f.f1 ? "yes" : "no")
                << " F2=" << (f.f2 ? "yes" : "no") << " orbit=" << (f.in_orbit ? "yes" : "no")
                << '\n';
        }
    }
    out << "verdict: " << to_string(r.verdict);
    if (r.informational_other) out << " (informational)";
    out << '\n';
    out << "timing:";
    for (const StageTiming& t : r.timings) {
        std::ostringstream ms;
        ms.setf(std::ios::fixed);
        ms.precision(3);
        ms << t.ms;
        out << ' ' << t.stage << "=" << ms.str() << "ms";
    }
    out << '\n';
    return out.str();
}

}  // namespace openbook
