#pragma once
// Braden-MacPherson sheaf on a Bruhat moment graph over Q or F_p.
//
// Base ring S = k[x_1..x_n], x_i in degree 2. The stalk at z is free over S; an edge E with
// label e_a - e_b carries S/(x_a - x_b) times the stalk of its upper end, realised by the
// substitution x_a -> x_b. Vertices are processed from the top down; at x the sections over
// {z > x} are restricted to the upward edges at x and the stalk at x is a minimal free
// cover of that image.

#include <algorithm>
#include <atomic>
#include <future>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "klrtor/bmp/moment_graph.hpp"
#include "klrtor/bmp/monomials.hpp"
#include "klrtor/exact/laurent.hpp"
#include "klrtor/exact/matrix.hpp"

namespace klrtor::bmp {

struct BMPOptions {
    int truncation_slack = 0; // extra degrees computed beyond l(w) - l(x)
    bool reverse_ties = false; // process equal-length vertices in reverse lexicographic order
    unsigned threads = 1;
    const Deadline* deadline = nullptr;
    std::size_t memory_limit_bytes = std::size_t{1} << 30; // per constraint system
};

template <class Field>
struct Term {
    std::size_t gen = 0; // generator of the target free module
    Monomial mono = 0;
    typename Field::Element coeff{};
};

template <class Field>
class BMPSheaf {
public:
    using Element = typename Field::Element;
    using Section = std::vector<Term<Field>>;

    BMPSheaf(const MomentGraph& graph, Field field, BMPOptions options = {})
        : graph_(std::make_shared<const MomentGraph>(graph)), field_(std::move(field)), options_(options) {
        if (graph_->rank() > kMaxVariables) throw std::invalid_argument("bmp_sheaf: S_n with n <= 8 only");
        const auto& g = *graph_;
        stalks_.resize(g.vertex_count());
        slot_.resize(g.edges().size());
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            for (std::size_t s = 0; s < g.up_edges(v).size(); ++s) slot_[g.up_edges(v)[s]] = s;
        run();
    }

    const MomentGraph& graph() const { return *graph_; }
    const Field& field() const { return field_; }
    bool budget_exhausted() const { return exhausted_; }
    /// Why the run stopped early ("time" or "memory"); empty when complete.
    const std::string& stop_reason() const { return stop_reason_; }
    bool complete() const { return computed_ == stalks_.size(); }
    std::size_t computed_count() const { return computed_; }

    bool has_stalk(std::size_t v) const { return v < stalks_.size() && stalks_[v].done; }
    bool has_stalk(const Permutation& z) const { return graph_->contains(z) && has_stalk(graph_->index_of(z)); }

    const GradedRank& stalk_rank(std::size_t v) const {
        if (!has_stalk(v)) throw std::invalid_argument("stalk_rank: vertex " + std::to_string(v) + " has no computed stalk");
        return stalks_[v].rank;
    }
    const GradedRank& stalk_rank(const Permutation& z) const {
        if (!graph_->contains(z)) throw std::invalid_argument("stalk_rank: " + z.to_string() + " is not a vertex of the moment graph");
        return stalk_rank(graph_->index_of(z));
    }

private:
    struct Stalk {
        bool done = false;
        std::vector<int> degrees;              // generator degrees, nondecreasing
        std::vector<std::vector<Section>> images; // [slot of up-edge][generator] in the edge module
        GradedRank rank;
    };

    // Degree-k piece of a free module with the given generator degrees.
    struct Layout {
        std::vector<std::size_t> offset; // npos when the generator is above degree k
        std::vector<int> mono_degree;
        std::size_t total = 0;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static Layout layout(const std::vector<int>& degrees, int k, std::size_t n, int omitted) {
        Layout l;
        for (int d : degrees) {
            if (d > k) {
                l.offset.push_back(npos);
                l.mono_degree.push_back(-1);
                continue;
            }
            l.offset.push_back(l.total);
            l.mono_degree.push_back((k - d) / 2);
            l.total += MonomialBasis::get(n, (k - d) / 2, omitted).size();
        }
        return l;
    }

    void run() {
        const auto& g = *graph_;
        // top vertex: S in degree 0
        stalks_[0].degrees = {0};
        stalks_[0].rank = GradedRank({0});
        stalks_[0].done = true;
        computed_ = 1;

        std::size_t begin = 1;
        while (begin < g.vertex_count()) {
            std::size_t end = begin;
            while (end < g.vertex_count() && g.length(end) == g.length(begin)) ++end;
            std::vector<std::size_t> level;
            for (std::size_t v = begin; v < end; ++v) level.push_back(v);
            if (options_.reverse_ties) std::reverse(level.begin(), level.end());
            try {
                check_deadline(options_.deadline);
                process_level(level);
            } catch (const MemoryBudgetExceeded&) {
                exhausted_ = true;
                stop_reason_ = "memory";
                return;
            } catch (const BudgetExhausted&) {
                exhausted_ = true;
                stop_reason_ = "time";
                return;
            }
            begin = end;
        }
    }

    void process_level(const std::vector<std::size_t>& level) {
        const unsigned threads = std::max(1u, std::min<unsigned>(options_.threads, static_cast<unsigned>(level.size())));
        if (threads == 1) {
            for (auto v : level) {
                compute_vertex(v);
                ++computed_;
            }
            return;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::future<void>> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next++; i < level.size(); i = next++) compute_vertex(level[i]);
            }));
        std::exception_ptr failure;
        for (auto& f : workers) {
            try {
                f.get();
            } catch (...) {
                if (!failure) failure = std::current_exception();
            }
        }
        for (auto v : level)
            if (stalks_[v].done) ++computed_;
        if (failure) std::rethrow_exception(failure);
    }

    void compute_vertex(std::size_t x) {
        const auto& g = *graph_;
        const std::size_t n = g.rank();
        const Permutation& px = g.vertices()[x];

        std::vector<std::size_t> upper;
        std::vector<char> in_upper(g.vertex_count(), 0);
        for (std::size_t z = 0; z < x; ++z)
            if (g.length(z) > g.length(x) && bruhat_leq(px, g.vertices()[z])) {
                upper.push_back(z);
                in_upper[z] = 1;
            }
        std::vector<std::size_t> inner;
        for (auto z : upper)
            for (auto e : g.up_edges(z))
                if (in_upper[g.edge(e).upper]) inner.push_back(e);
        const auto& boundary = g.up_edges(x);

        const int gap = g.length(0) - g.length(x);
        const int bound = gap + options_.truncation_slack;

        Stalk out;
        out.images.resize(boundary.size());

        struct Coord {
            std::size_t slot, gen;
            Monomial mono;
        };
        std::vector<Section> prev_rows; // basis of the boundary image in degree k - 2

        for (int k = 0; k <= bound; k += 2) {
            check_deadline(options_.deadline);

            // unknowns: a value in the stalk at every z in upper
            std::vector<std::size_t> col_off(g.vertex_count(), npos);
            std::vector<Layout> vlay(g.vertex_count());
            std::size_t cols = 0;
            for (auto z : upper) {
                vlay[z] = layout(stalks_[z].degrees, k, n, -1);
                col_off[z] = cols;
                cols += vlay[z].total;
            }
            std::vector<Layout> elay(inner.size());
            std::vector<std::size_t> row_off(inner.size());
            std::size_t rows = 0;
            for (std::size_t i = 0; i < inner.size(); ++i) {
                const auto& e = g.edge(inner[i]);
                elay[i] = layout(stalks_[e.upper].degrees, k, n, e.a - 1);
                row_off[i] = rows;
                rows += elay[i].total;
            }

            // the matrix plus a worst-case kernel basis
            const double bytes = (static_cast<double>(rows) + static_cast<double>(cols)) * static_cast<double>(cols) * sizeof(Element);
            if (bytes > static_cast<double>(options_.memory_limit_bytes))
                throw MemoryBudgetExceeded("bmp_sheaf: constraint system at " + px.to_string() + " in degree " + std::to_string(k) + " is " +
                                           std::to_string(rows) + " x " + std::to_string(cols));
            ExactMatrix<Field> c(field_, rows, cols);
            for (std::size_t i = 0; i < inner.size(); ++i) {
                const auto& e = g.edge(inner[i]);
                const std::size_t a = static_cast<std::size_t>(e.a - 1), b = static_cast<std::size_t>(e.b - 1);
                const auto& hi = stalks_[e.upper];
                for (std::size_t gen = 0; gen < hi.degrees.size(); ++gen) {
                    if (vlay[e.upper].offset[gen] == npos) continue;
                    const auto& vb = MonomialBasis::get(n, vlay[e.upper].mono_degree[gen]);
                    const auto& rb = MonomialBasis::get(n, elay[i].mono_degree[gen], static_cast<int>(a));
                    for (std::size_t m = 0; m < vb.size(); ++m) {
                        auto& entry = c(row_off[i] + elay[i].offset[gen] + rb.index(substitute(vb[m], a, b)),
                                        col_off[e.upper] + vlay[e.upper].offset[gen] + m);
                        entry = field_.sub(entry, field_.one());
                    }
                }
                const auto& lo = stalks_[e.lower];
                const auto& rho = lo.images[slot_[inner[i]]];
                for (std::size_t h = 0; h < lo.degrees.size(); ++h) {
                    if (vlay[e.lower].offset[h] == npos) continue;
                    const auto& vb = MonomialBasis::get(n, vlay[e.lower].mono_degree[h]);
                    for (std::size_t m = 0; m < vb.size(); ++m) {
                        const Monomial sm = substitute(vb[m], a, b);
                        const std::size_t col = col_off[e.lower] + vlay[e.lower].offset[h] + m;
                        for (const auto& t : rho[h]) {
                            const auto& rb = MonomialBasis::get(n, elay[i].mono_degree[t.gen], static_cast<int>(a));
                            auto& entry = c(row_off[i] + elay[i].offset[t.gen] + rb.index(times(t.mono, sm)), col);
                            entry = field_.add(entry, t.coeff);
                        }
                    }
                }
            }

            // restriction of sections to the boundary edges at x
            std::vector<Layout> blay(boundary.size());
            std::vector<std::size_t> boff(boundary.size());
            std::size_t btotal = 0;
            std::vector<Coord> decode;
            for (std::size_t s = 0; s < boundary.size(); ++s) {
                const auto& e = g.edge(boundary[s]);
                blay[s] = layout(stalks_[e.upper].degrees, k, n, e.a - 1);
                boff[s] = btotal;
                btotal += blay[s].total;
                for (std::size_t gen = 0; gen < blay[s].offset.size(); ++gen) {
                    if (blay[s].offset[gen] == npos) continue;
                    for (auto m : MonomialBasis::get(n, blay[s].mono_degree[gen], e.a - 1).monomials()) decode.push_back({s, gen, m});
                }
            }
            IncrementalBasis<Field> image(field_, btotal);
            if (cols > 0 && btotal > 0) {
                auto kernel = rank_and_kernel(c, options_.deadline).kernel;
                for (const auto& sec : kernel) {
                    check_deadline(options_.deadline);
                    std::vector<Element> v(btotal, field_.zero());
                    for (std::size_t s = 0; s < boundary.size(); ++s) {
                        const auto& e = g.edge(boundary[s]);
                        const std::size_t a = static_cast<std::size_t>(e.a - 1), b = static_cast<std::size_t>(e.b - 1);
                        const auto& lay = vlay[e.upper];
                        for (std::size_t gen = 0; gen < lay.offset.size(); ++gen) {
                            if (lay.offset[gen] == npos) continue;
                            const auto& vb = MonomialBasis::get(n, lay.mono_degree[gen]);
                            const auto& rb = MonomialBasis::get(n, blay[s].mono_degree[gen], static_cast<int>(a));
                            for (std::size_t m = 0; m < vb.size(); ++m) {
                                const auto& val = sec[col_off[e.upper] + lay.offset[gen] + m];
                                if (field_.is_zero(val)) continue;
                                auto& dst = v[boff[s] + blay[s].offset[gen] + rb.index(substitute(vb[m], a, b))];
                                dst = field_.add(dst, val);
                            }
                        }
                    }
                    image.insert(v);
                }
            }

            // image in degree k generated from lower degrees: x_i times the degree k-2 image
            IncrementalBasis<Field> decomposable(field_, btotal);
            for (const auto& row : prev_rows) {
                check_deadline(options_.deadline);
                for (std::size_t var = 0; var < n; ++var) {
                    std::vector<Element> v(btotal, field_.zero());
                    for (const auto& [s, t] : row_terms(row)) {
                        const auto& e = g.edge(boundary[s]);
                        const std::size_t a = static_cast<std::size_t>(e.a - 1), b = static_cast<std::size_t>(e.b - 1);
                        const auto& rb = MonomialBasis::get(n, blay[s].mono_degree[t.gen], static_cast<int>(a));
                        auto& dst = v[boff[s] + blay[s].offset[t.gen] + rb.index(times(t.mono, substitute(variable(var), a, b)))];
                        dst = field_.add(dst, t.coeff);
                    }
                    decomposable.insert(v);
                }
            }

            std::vector<Section> rows_now;
            for (const auto& v : image.rows()) {
                Section sparse;
                for (std::size_t j = 0; j < btotal; ++j)
                    if (!field_.is_zero(v[j])) sparse.push_back({decode[j].slot * kSlotStride + decode[j].gen, decode[j].mono, v[j]});
                rows_now.push_back(sparse);
                if (!decomposable.insert(v)) continue;
                // a new generator in degree k
                if (k > gap || (field_.characteristic() == 0 && k >= gap && gap > 0))
                    throw std::logic_error("bmp_sheaf: generator in degree " + std::to_string(k) + " at " + px.to_string() +
                                           " exceeds the truncation bound " + std::to_string(gap));
                out.degrees.push_back(k);
                for (auto& per_slot : out.images) per_slot.emplace_back();
                for (const auto& t : sparse) out.images[t.gen / kSlotStride].back().push_back({t.gen % kSlotStride, t.mono, t.coeff});
            }
            prev_rows = std::move(rows_now);
        }

        out.rank = GradedRank(out.degrees);
        out.done = true;
        stalks_[x] = std::move(out);
    }

    // Rows of the boundary image are stored with gen = slot * kSlotStride + generator.
    static constexpr std::size_t kSlotStride = std::size_t{1} << 32;

    static std::vector<std::pair<std::size_t, Term<Field>>> row_terms(const Section& row) {
        std::vector<std::pair<std::size_t, Term<Field>>> out;
        out.reserve(row.size());
        for (const auto& t : row) out.push_back({t.gen / kSlotStride, {t.gen % kSlotStride, t.mono, t.coeff}});
        return out;
    }

    std::shared_ptr<const MomentGraph> graph_;
    Field field_;
    BMPOptions options_;
    std::vector<Stalk> stalks_;
    std::vector<std::size_t> slot_; // position of each edge among the up-edges of its lower end
    std::size_t computed_ = 0;
    bool exhausted_ = false;
    std::string stop_reason_;
};

template <class Field>
BMPSheaf<Field> bmp_sheaf(const MomentGraph& graph, Field field, BMPOptions options = {}) {
    return BMPSheaf<Field>(graph, std::move(field), options);
}

template <class Field>
const GradedRank& stalk_rank(const BMPSheaf<Field>& sheaf, const Permutation& z) {
    return sheaf.stalk_rank(z);
}

} // namespace klrtor::bmp
