#include <set>

#include <gtest/gtest.h>

#include "klrtor/bmp/probe.hpp"
#include "klrtor/weyl/kl.hpp"

using namespace klrtor;
using namespace klrtor::bmp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::pair<Permutation, Permutation>> all_intervals(std::size_t n) {
    std::vector<std::pair<Permutation, Permutation>> out;
    auto perms = all_permutations(n);
    for (const auto& y : perms)
        for (const auto& w : perms)
            if (bruhat_leq(y, w)) out.emplace_back(y, w);
    return out;
}

template <class Field>
std::vector<GradedRank> ranks(const BMPSheaf<Field>& s) {
    std::vector<GradedRank> out;
    for (std::size_t v = 0; v < s.graph().vertex_count(); ++v) out.push_back(s.stalk_rank(v));
    return out;
}

} // namespace

TEST(MomentGraph, SmallExamples) {
    auto g = moment_graph(P("12"), P("21"));
    EXPECT_EQ(g.vertex_count(), 2u);
    ASSERT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.edge(0).label(2), (std::vector<int>{1, -1}));
    EXPECT_EQ(g.vertices()[0], P("21"));

    auto g3 = moment_graph(Permutation::identity(3), Permutation::longest(3));
    EXPECT_EQ(g3.vertex_count(), 6u);
    EXPECT_EQ(g3.edges().size(), 9u);
    EXPECT_THROW(moment_graph(P("213"), P("132")), DomainError);
}

TEST(MomentGraph, EdgesMatchReflectionPairs) {
    for (const auto& [y, w] : all_intervals(4)) {
        auto g = moment_graph(y, w);
        const auto iv = bruhat_interval(y, w);
        const std::set<Permutation> inside(iv.begin(), iv.end());
        std::set<std::pair<Permutation, Permutation>> expected;
        for (const auto& z : iv)
            for (std::size_t i = 1; i <= 4; ++i)
                for (std::size_t j = i + 1; j <= 4; ++j) {
                    auto t = z.right_transposition(i, j);
                    if (inside.count(t) && z < t) expected.emplace(z, t);
                }
        std::set<std::pair<Permutation, Permutation>> got;
        for (const auto& e : g.edges()) {
            const auto& lo = g.vertices()[e.lower];
            const auto& hi = g.vertices()[e.upper];
            EXPECT_EQ((hi.length() - lo.length()) % 2, 1);
            auto lab = e.label(4);
            EXPECT_EQ(std::count(lab.begin(), lab.end(), 1), 1);
            EXPECT_EQ(std::count(lab.begin(), lab.end(), -1), 1);
            EXPECT_EQ(std::count(lab.begin(), lab.end(), 0), 2);
            EXPECT_EQ(lo.left_transposition(e.a, e.b), hi);
            got.emplace(std::min(lo, hi), std::max(lo, hi));
        }
        EXPECT_EQ(got, expected);
        EXPECT_EQ(g.vertex_count(), iv.size());
    }
}

TEST(BMPSheaf, S2StalksAreTrivial) {
    auto s = bmp_sheaf(moment_graph(P("12"), P("21")), RationalField{});
    EXPECT_TRUE(s.complete());
    EXPECT_EQ(stalk_rank(s, P("12")), GradedRank({0}));
    EXPECT_EQ(stalk_rank(s, P("21")), GradedRank({0}));
    EXPECT_THROW(stalk_rank(s, P("213")), std::invalid_argument);
}

TEST(BMPSheaf, S3AllStalksRankOne) {
    for (const auto& [y, w] : all_intervals(3)) {
        auto s = bmp_sheaf(moment_graph(y, w), RationalField{});
        for (const auto& r : ranks(s)) EXPECT_EQ(r, GradedRank({0}));
    }
}

TEST(BMPSheaf, SingularS4Stalk) {
    auto s = bmp_sheaf(moment_graph(P("1234"), P("3412")), RationalField{});
    EXPECT_EQ(stalk_rank(s, P("1234")), GradedRank({0, 2}));
    EXPECT_EQ(stalk_rank(s, P("1324")), GradedRank({0, 2}));
    EXPECT_EQ(stalk_rank(s, P("3412")), GradedRank({0}));
}

TEST(BMPSheaf, RationalStalksEqualKLPolynomials) {
    KLCache cache;
    for (std::size_t n : {3u, 4u})
        for (const auto& [y, w] : all_intervals(n)) {
            auto s = bmp_sheaf(moment_graph(y, w), RationalField{});
            ASSERT_TRUE(s.complete());
            EXPECT_EQ(s.stalk_rank(w), GradedRank({0}));
            for (std::size_t v = 0; v < s.graph().vertex_count(); ++v) {
                const auto& z = s.graph().vertices()[v];
                EXPECT_EQ(s.stalk_rank(v), GradedRank::from_poly(kl_polynomial(z, w, cache), 2))
                    << "stalk at " << z.to_string() << " in [" << y.to_string() << "," << w.to_string() << "]";
            }
        }
}

TEST(BMPSheaf, ModularRanksDominateRational) {
    for (std::uint32_t p : {2u, 3u})
        for (const auto& w : all_permutations(4)) {
            auto g = moment_graph(Permutation::identity(4), w);
            auto q = ranks(bmp_sheaf(g, RationalField{}));
            auto m = ranks(bmp_sheaf(g, PrimeField(p)));
            for (std::size_t v = 0; v < q.size(); ++v) EXPECT_TRUE(m[v].dominates(q[v]));
        }
}

TEST(BMPSheaf, OrderTruncationAndThreadInvariance) {
    const std::vector<std::pair<Permutation, Permutation>> cases{
        {P("1234"), P("4231")}, {P("1234"), P("4321")}, {P("12345"), P("34512")}, {P("12345"), P("35142")}};
    for (const auto& [y, w] : cases) {
        auto g = moment_graph(y, w);
        const auto base = ranks(bmp_sheaf(g, RationalField{}));
        BMPOptions rev;
        rev.reverse_ties = true;
        EXPECT_EQ(ranks(bmp_sheaf(g, RationalField{}, rev)), base) << w.to_string();
        BMPOptions slack;
        slack.truncation_slack = 2;
        EXPECT_EQ(ranks(bmp_sheaf(g, RationalField{}, slack)), base) << w.to_string();
        BMPOptions par;
        par.threads = 4;
        EXPECT_EQ(ranks(bmp_sheaf(g, RationalField{}, par)), base) << w.to_string();
        EXPECT_EQ(ranks(bmp_sheaf(g, PrimeField(2), par)), ranks(bmp_sheaf(g, PrimeField(2), rev))) << w.to_string();
    }
}

TEST(BMPSheaf, BudgetGivesPartialResult) {
    auto g = moment_graph(P("12345"), P("54321"));
    Deadline expired(0.0);
    BMPOptions opt;
    opt.deadline = &expired;
    auto s = bmp_sheaf(g, RationalField{}, opt);
    EXPECT_TRUE(s.budget_exhausted());
    EXPECT_EQ(s.stop_reason(), "time");
    EXPECT_FALSE(s.complete());
    EXPECT_LT(s.computed_count(), g.vertex_count());

    BMPOptions tiny;
    tiny.memory_limit_bytes = 64;
    auto m = bmp_sheaf(g, PrimeField(2), tiny);
    EXPECT_TRUE(m.budget_exhausted());
    EXPECT_EQ(m.stop_reason(), "memory");
    EXPECT_TRUE(m.has_stalk(g.top()));
    EXPECT_FALSE(m.complete());
}

TEST(BMPSheaf, RejectsLargeRank) {
    const auto w = Permutation::parse("2,1,3,4,5,6,7,8,9");
    EXPECT_THROW(bmp_sheaf(moment_graph(Permutation::identity(9), w), RationalField{}), std::invalid_argument);
}

TEST(Probe, S3IsIdentical) {
    for (const auto& [y, w] : all_intervals(3)) {
        auto r = torsion_probe(y, w, 2);
        EXPECT_EQ(r.verdict, Verdict::Identical);
        EXPECT_TRUE(r.divergent_at.empty());
        EXPECT_FALSE(r.budget_exhausted);
        EXPECT_EQ(r.vertex_count, r.vertices.size());
    }
}

TEST(Probe, S4LowerIntervalsAreIdentical) {
    for (const auto& w : all_permutations(4)) {
        auto r = torsion_probe(Permutation::identity(4), w, 2, nullptr, 2);
        EXPECT_EQ(r.verdict, Verdict::Identical) << w.to_string();
        for (const auto& v : r.vertices) {
            ASSERT_TRUE(v.char0 && v.charp);
            EXPECT_EQ(*v.char0, *v.charp);
        }
    }
}

TEST(Probe, ExpiredBudgetIsIncomplete) {
    Deadline expired(0.0);
    auto r = torsion_probe(P("12345"), P("54321"), 3, &expired);
    EXPECT_EQ(r.verdict, Verdict::Incomplete);
    EXPECT_TRUE(r.budget_exhausted);
    EXPECT_EQ(r.stop_reason, "time");
    EXPECT_EQ(r.vertex_count, 120u);
    EXPECT_EQ(r.length_gap, 10);
    EXPECT_THROW(torsion_probe(P("21"), P("12"), 2), DomainError);
    EXPECT_THROW(torsion_probe(P("12"), P("21"), 4), std::invalid_argument);
}

TEST(Probe, VerdictStrings) {
    for (auto v : {Verdict::Identical, Verdict::Divergent, Verdict::Incomplete}) EXPECT_EQ(verdict_from_string(to_string(v)), v);
    EXPECT_THROW(verdict_from_string("MAYBE"), std::invalid_argument);
}
