#pragma once
// Compare Braden-MacPherson stalk ranks over Q and over F_p on one Bruhat interval.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "klrtor/bmp/sheaf.hpp"

namespace klrtor::bmp {

enum class Verdict { Identical, Divergent, Incomplete };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Identical: return "IDENTICAL";
    case Verdict::Divergent: return "DIVERGENT";
    case Verdict::Incomplete: return "INCOMPLETE";
    }
    return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "IDENTICAL") return Verdict::Identical;
    if (s == "DIVERGENT") return Verdict::Divergent;
    if (s == "INCOMPLETE") return Verdict::Incomplete;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

struct VertexRanks {
    Permutation perm;
    int length = 0;
    std::optional<GradedRank> char0;
    std::optional<GradedRank> charp;
    bool divergent = false;
};

struct ComparisonReport {
    Permutation y, w;
    std::uint32_t p = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    int length_gap = 0;
    std::vector<VertexRanks> vertices; // graph order: length descending
    Verdict verdict = Verdict::Incomplete;
    std::vector<Permutation> divergent_at;
    bool budget_exhausted = false;
    std::string stop_reason; // "time" or "memory" when budget_exhausted
    double seconds = 0;

    bool divergent_at_vertex(const Permutation& z) const {
        return verdict == Verdict::Divergent && std::find(divergent_at.begin(), divergent_at.end(), z) != divergent_at.end();
    }
};

/// Runs both fields concurrently; `threads` is split between them. A divergence found before the budget
/// runs out is still reported as DIVERGENT; otherwise an unfinished run is INCOMPLETE.
inline ComparisonReport torsion_probe(const Permutation& y, const Permutation& w, std::uint32_t p, const Deadline* deadline = nullptr,
                                      unsigned threads = 1, std::size_t memory_limit_bytes = std::size_t{1} << 30) {
    const auto start = std::chrono::steady_clock::now();
    PrimeField fp(p);
    const MomentGraph graph = moment_graph(y, w);

    ComparisonReport report;
    report.y = y;
    report.w = w;
    report.p = p;
    report.vertex_count = graph.vertex_count();
    report.edge_count = graph.edges().size();
    report.length_gap = w.length() - y.length();

    BMPOptions opt;
    opt.deadline = deadline;
    opt.memory_limit_bytes = memory_limit_bytes;
    opt.threads = std::max(1u, threads / 2);
    auto run0 = [&] { return bmp_sheaf(graph, RationalField{}, opt); };
    auto runp = [&] { return bmp_sheaf(graph, fp, opt); };
    std::optional<BMPSheaf<RationalField>> s0;
    std::optional<BMPSheaf<PrimeField>> sp;
    // the two fields are independent; running them side by side shares a budget fairly
    auto f0 = std::async(std::launch::async, run0);
    sp.emplace(runp());
    s0.emplace(f0.get());

    report.budget_exhausted = s0->budget_exhausted() || sp->budget_exhausted();
    report.stop_reason = !s0->stop_reason().empty() ? s0->stop_reason() : sp->stop_reason();
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        VertexRanks vr;
        vr.perm = graph.vertices()[v];
        vr.length = graph.length(v);
        if (s0->has_stalk(v)) vr.char0 = s0->stalk_rank(v);
        if (sp->has_stalk(v)) vr.charp = sp->stalk_rank(v);
        if (vr.char0 && vr.charp) {
            if (!vr.charp->dominates(*vr.char0))
                throw std::logic_error("torsion_probe: F_" + std::to_string(p) + " stalk rank at " + vr.perm.to_string() +
                                       " is smaller than the rational one");
            if (!(*vr.charp == *vr.char0)) {
                vr.divergent = true;
                report.divergent_at.push_back(vr.perm);
            }
        }
        report.vertices.push_back(std::move(vr));
    }
    if (!report.divergent_at.empty()) report.verdict = Verdict::Divergent;
    else report.verdict = report.budget_exhausted ? Verdict::Incomplete : Verdict::Identical;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace klrtor::bmp
