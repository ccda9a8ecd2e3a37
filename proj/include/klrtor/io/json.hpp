#pragma once
// JSON encodings shared by the command-line tool and the acceptance runner.
// Needs nlohmann/json on the include path.

#include <nlohmann/json.hpp>

#include "klrtor/bmp/probe.hpp"
#include "klrtor/groth/decomposition.hpp"
#include "klrtor/groth/identity.hpp"
#include "klrtor/ks/ks.hpp"
#include "klrtor/strata/strata.hpp"

namespace klrtor::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const DimVector& d) {
    Json a = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i) a.push_back(d[i]);
    return a;
}

inline Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
    return {{"vertices", q.vertex_count()}, {"type", q.type().name()}, {"arrows", arrows}};
}

inline Json degrees_json(const GradedRank& r) {
    Json a = Json::array();
    for (int d : r.degrees()) a.push_back(d);
    return a;
}

inline Json to_json(const StratumInfo& s) {
    return {{"dim_ev", s.dim_ev}, {"dim_gv", s.dim_gv}, {"end_dim", s.end_dim}, {"orbit_dim", s.orbit_dim}, {"codim", s.codim}};
}

inline Json to_json(const bmp::ComparisonReport& r) {
    Json verts = Json::array();
    std::map<int, int> levels;
    for (const auto& v : r.vertices) {
        ++levels[v.length];
        Json jv{{"perm", v.perm.to_string()}, {"length", v.length}};
        jv["ranks_char0"] = v.char0 ? degrees_json(*v.char0) : Json(nullptr);
        jv["ranks_charp"] = v.charp ? degrees_json(*v.charp) : Json(nullptr);
        jv["divergent"] = v.divergent;
        verts.push_back(std::move(jv));
    }
    Json per_length = Json::array();
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) per_length.push_back({{"length", it->first}, {"vertices", it->second}});
    Json divergent = Json::array();
    for (const auto& z : r.divergent_at) divergent.push_back(z.to_string());
    std::size_t done0 = 0, donep = 0;
    for (const auto& v : r.vertices) {
        done0 += v.char0.has_value();
        donep += v.charp.has_value();
    }
    return {{"y", r.y.to_string()},
            {"w", r.w.to_string()},
            {"p", r.p},
            {"interval",
             {{"vertices", r.vertex_count},
              {"edges", r.edge_count},
              {"length_gap", r.length_gap},
              {"per_length", per_length},
              {"computed_char0", done0},
              {"computed_charp", donep}}},
            {"vertices", verts},
            {"verdict", bmp::to_string(r.verdict)},
            {"divergent_at", divergent},
            {"budget_exhausted", r.budget_exhausted},
            {"stop_reason", r.budget_exhausted ? Json(r.stop_reason) : Json(nullptr)}};
}

/// Inverse of to_json(ComparisonReport) for the fields the identity formatter needs.
inline bmp::ComparisonReport report_from_json(const Json& j) {
    bmp::ComparisonReport r;
    r.y = Permutation::parse(j.at("y").get<std::string>());
    r.w = Permutation::parse(j.at("w").get<std::string>());
    r.p = j.at("p").get<std::uint32_t>();
    r.verdict = bmp::verdict_from_string(j.at("verdict").get<std::string>());
    r.budget_exhausted = j.at("budget_exhausted").get<bool>();
    if (j.contains("stop_reason") && j["stop_reason"].is_string()) r.stop_reason = j["stop_reason"].get<std::string>();
    if (j.contains("interval")) {
        r.vertex_count = j["interval"].value("vertices", std::size_t{0});
        r.edge_count = j["interval"].value("edges", std::size_t{0});
        r.length_gap = j["interval"].value("length_gap", 0);
    }
    for (const auto& z : j.at("divergent_at")) r.divergent_at.push_back(Permutation::parse(z.get<std::string>()));
    for (const auto& jv : j.at("vertices")) {
        bmp::VertexRanks v;
        v.perm = Permutation::parse(jv.at("perm").get<std::string>());
        v.length = jv.value("length", v.perm.length());
        if (!jv.at("ranks_char0").is_null()) v.char0 = GradedRank(jv["ranks_char0"].get<std::vector<int>>());
        if (!jv.at("ranks_charp").is_null()) v.charp = GradedRank(jv["ranks_charp"].get<std::vector<int>>());
        v.divergent = jv.value("divergent", false);
        r.vertices.push_back(std::move(v));
    }
    return r;
}

inline Json to_json(const DecompositionMatrix& d, const std::vector<Permutation>& perms = {}) {
    Json order = Json::array();
    for (auto [i, j] : d.order) order.push_back({i, j});
    Json entries = Json::array(), raw = Json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        Json row = Json::array(), rrow = Json::array();
        for (std::size_t j = 0; j < d.size(); ++j) {
            row.push_back(d.entries[i][j].to_string("v"));
            rrow.push_back(d.kl_raw.empty() ? std::string("0") : d.kl_raw[i][j].to_string("q"));
        }
        entries.push_back(row);
        raw.push_back(rrow);
    }
    Json out{{"labels", d.labels}};
    if (!perms.empty()) {
        Json p = Json::array();
        for (const auto& w : perms) p.push_back(w.to_string());
        out["permutations"] = p;
    }
    out["order"] = order;
    out["entries"] = entries;
    out["kl_raw"] = raw;
    return out;
}

inline Json to_json(const ModularIdentity& id) {
    return {{"lower", {{"name", id.lower.name}, {"perm", id.lower.perm.to_string()}}},
            {"upper", {{"name", id.upper.name}, {"perm", id.upper.perm.to_string()}}},
            {"p", id.p},
            {"grothendieck", id.grothendieck},
            {"geometric", id.geometric}};
}

inline Json to_json(const ks::DimensionEstimate& e) {
    Json samples = Json::array();
    for (const auto& [q, c] : e.samples) samples.push_back({{"q", q}, {"count", c.get_str()}});
    Json coeffs = Json::array();
    for (const auto& c : e.polynomial.coefficients()) coeffs.push_back(c.get_str());
    return {{"samples", samples},
            {"holdout", {{"q", e.holdout.first}, {"count", e.holdout.second.get_str()}}},
            {"coefficients", coeffs},
            {"polynomial", e.polynomial.to_string("q")},
            {"degree", e.degree}};
}

} // namespace klrtor::io
