// klrtor: command-line front end. Every subcommand writes one JSON document to --output
// (or stdout); human-readable summaries go to stderr.
//
// exit status: 0 ok, 1 usage or domain error, 2 budget exhausted (partial JSON is written)

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "klrtor/io/json.hpp"
#include "klrtor/klrtor.hpp"

using namespace klrtor;
using io::Json;

namespace {

struct Common {
    std::string output;
    unsigned threads = 1;
    bool quiet = false;
};

struct QuiverArgs {
    std::string quiver_path;
    std::size_t equioriented = 0;
    std::string dim;

    Quiver quiver() const {
        if (!quiver_path.empty() && equioriented) throw std::invalid_argument("give either --quiver or --equioriented, not both");
        if (!quiver_path.empty()) return Quiver::load(quiver_path);
        if (equioriented) return Quiver::equioriented_a(equioriented);
        throw std::invalid_argument("missing --quiver <spec file> or --equioriented <n>");
    }
    DimVector dimension() const {
        if (dim.empty()) throw std::invalid_argument("missing --dim");
        std::vector<int> v;
        std::stringstream ss(dim);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad --dim entry '" + tok + "'");
            v.push_back(x);
        }
        return DimVector(std::move(v));
    }
};

void add_quiver_options(CLI::App* app, QuiverArgs& q, bool need_dim) {
    app->add_option("--quiver", q.quiver_path, "quiver spec file ('vertices n' / 'arrow i j')");
    app->add_option("--equioriented", q.equioriented, "use the equioriented A_n quiver 1 -> 2 -> ... -> n");
    if (need_dim) app->add_option("--dim", q.dim, "dimension vector, comma separated")->required();
}

void emit(const Common& c, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (c.output.empty() || c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) throw std::invalid_argument("cannot write " + c.output);
    out << text;
}

void note(const Common& c, const std::string& msg) {
    if (!c.quiet) std::cerr << msg << "\n";
}

std::string root_label(const DimVector& r) {
    if (auto iv = r.interval()) return "[" + std::to_string(iv->first + 1) + "," + std::to_string(iv->second + 1) + "]";
    return r.to_string();
}

Permutation parse_perm(const std::string& s, std::size_t n) {
    Permutation w = Permutation::parse(s);
    if (n && w.size() != n) throw std::invalid_argument("permutation " + s + " is not in S_" + std::to_string(n));
    return w;
}

unsigned default_threads() {
    if (const char* env = std::getenv("KLRTOR_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring KLRTOR_THREADS=" << env << "\n";
    }
    return 1;
}

std::unique_ptr<Deadline> make_deadline(double budget) {
    if (budget < 0) throw std::invalid_argument("--budget must be positive");
    if (budget == 0) return nullptr;
    return std::make_unique<Deadline>(budget);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver strata, Kazhdan-Lusztig polynomials and moment-graph torsion probes"};
    app.require_subcommand(1);
    Common common;
    common.threads = default_threads();
    app.add_option("-o,--output", common.output, "write JSON here instead of stdout");
    app.add_option("--threads", common.threads, "worker threads (default: $KLRTOR_THREADS or 1)")->check(CLI::PositiveNumber);
    app.add_flag("-q,--quiet", common.quiet, "no summary on stderr");

    // roots
    QuiverArgs roots_q;
    auto* roots = app.add_subcommand("roots", "positive roots of a Dynkin quiver");
    add_quiver_options(roots, roots_q, false);

    // strata
    auto* strata = app.add_subcommand("strata", "orbit strata of E_V");
    strata->require_subcommand(1);
    QuiverArgs strata_q;
    bool with_info = false;
    auto* s_enum = strata->add_subcommand("enumerate", "list all strata for a dimension vector");
    add_quiver_options(s_enum, strata_q, true);
    s_enum->add_flag("--info", with_info, "include orbit dimension and codimension");
    std::string lambda_text, mu_text;
    auto* s_order = strata->add_subcommand("order", "closure order between two strata");
    add_quiver_options(s_order, strata_q, true);
    s_order->add_option("--lambda", lambda_text, "first stratum, e.g. 12+23+2*33")->required();
    s_order->add_option("--mu", mu_text, "second stratum")->required();
    auto* s_info = strata->add_subcommand("info", "dimension data of one stratum");
    add_quiver_options(s_info, strata_q, true);
    s_info->add_option("--lambda", lambda_text, "the stratum")->required();

    // seqcount
    std::string seq_dim;
    auto* seq = app.add_subcommand("seqcount", "number of vertex sequences of weight d");
    seq->add_option("--dim", seq_dim, "dimension vector, comma separated")->required();

    // klpoly
    std::size_t kl_n = 0;
    std::string kl_y, kl_w;
    auto* kl = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{y,w}");
    kl->add_option("--n", kl_n, "rank of the symmetric group");
    kl->add_option("--y", kl_y, "lower permutation, one-line")->required();
    kl->add_option("--w", kl_w, "upper permutation, one-line")->required();

    // zelevinsky
    std::size_t z_n = 0;
    std::string z_lambda, z_w;
    bool to_perm = false, to_ms = false;
    auto* zel = app.add_subcommand("zelevinsky", "injective-arrow strata of A_{2n-1} versus S_n");
    zel->add_flag("--to-perm", to_perm, "multisegment -> permutation");
    zel->add_flag("--to-multisegment", to_ms, "permutation -> multisegment");
    zel->add_option("--n", z_n, "flag size n");
    zel->add_option("--lambda", z_lambda, "multisegment on A_{2n-1}");
    zel->add_option("--w", z_w, "permutation in S_n");

    // ks
    auto* ksc = app.add_subcommand("ks", "Kashiwara-Saito variety");
    ksc->require_subcommand(1);
    std::uint64_t ks_q = 0;
    std::string ks_method = "stratified";
    double ks_budget = 0;
    auto* ks_count = ksc->add_subcommand("count", "|S(F_q)|");
    ks_count->add_option("--q", ks_q, "field size")->required();
    ks_count->add_option("--method", ks_method, "brute or stratified")->check(CLI::IsMember({"brute", "stratified"}));
    ks_count->add_option("--budget", ks_budget, "seconds");
    std::vector<std::uint64_t> ks_samples = ks::default_samples();
    std::uint64_t ks_holdout = ks::kDefaultHoldout;
    auto* ks_dim = ksc->add_subcommand("dimension", "degree of the point-count polynomial");
    ks_dim->add_option("--samples", ks_samples, "prime powers used for the fit")->delimiter(',');
    ks_dim->add_option("--holdout", ks_holdout, "prime power used to check the fit");
    ks_dim->add_option("--budget", ks_budget, "seconds");

    // bmp
    auto* bmpc = app.add_subcommand("bmp", "Braden-MacPherson moment-graph sheaves");
    bmpc->require_subcommand(1);
    std::string b_y, b_w;
    std::uint32_t b_p = 2;
    double b_budget = 0;
    double b_memory_gib = 1.0;
    auto* probe = bmpc->add_subcommand("probe", "compare stalk ranks over Q and F_p on [y, w]");
    probe->add_option("--y", b_y, "bottom of the interval")->required();
    probe->add_option("--w", b_w, "top of the interval")->required();
    probe->add_option("--p", b_p, "prime")->required();
    probe->add_option("--budget", b_budget, "wall-clock seconds (0 = unlimited)");
    probe->add_option("--memory-gib", b_memory_gib, "largest constraint system allowed, GiB")->check(CLI::PositiveNumber);

    // decomp-matrix
    std::size_t dm_n = 0;
    auto* dm = app.add_subcommand("decomp-matrix", "characteristic-zero graded decomposition matrix for flag_quiver(n)");
    dm->add_option("--n", dm_n, "flag size n (1..5)")->required();

    // predict-identity
    std::string pi_report, pi_lower_name = "π", pi_upper_name = "σ", pi_lower, pi_upper;
    auto* pid = app.add_subcommand("predict-identity", "format the modular identity certified by a DIVERGENT probe report");
    pid->add_option("--report", pi_report, "bmp probe JSON")->required();
    pid->add_option("--lower-name", pi_lower_name, "name of the smaller stratum");
    pid->add_option("--upper-name", pi_upper_name, "name of the larger stratum");
    pid->add_option("--lower", pi_lower, "vertex of the smaller stratum (default: report y)");
    pid->add_option("--upper", pi_upper, "vertex of the larger stratum (default: report w)");

    // global options may follow the subcommand
    for (auto* sc : app.get_subcommands({})) {
        sc->fallthrough();
        for (auto* inner : sc->get_subcommands({})) inner->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*roots) {
            const Quiver q = roots_q.quiver();
            Json list = Json::array();
            for (const auto& r : positive_roots(q)) list.push_back({{"root", io::to_json(r)}, {"label", root_label(r)}});
            emit(common, {{"quiver", io::to_json(q)}, {"count", list.size()}, {"roots", list}});
            note(common, q.type().name() + ": " + std::to_string(list.size()) + " positive roots");
        } else if (*strata) {
            const Quiver q = strata_q.quiver();
            const DimVector d = strata_q.dimension();
            auto system = RootSystem::make(q);
            if (*s_enum) {
                const auto all = enumerate_strata(system, d);
                Json list = Json::array();
                for (const auto& s : all) {
                    Json js{{"label", s.to_string()}};
                    if (with_info) js["info"] = io::to_json(stratum_info(s));
                    list.push_back(js);
                }
                emit(common, {{"quiver", io::to_json(q)}, {"dim", io::to_json(d)}, {"count", all.size()}, {"strata", list}});
                note(common, std::to_string(all.size()) + " strata for d = " + d.to_string());
            } else if (*s_order) {
                const auto l = Multisegment::parse(system, lambda_text);
                const auto m = Multisegment::parse(system, mu_text);
                if (!(l.dim() == d) || !(m.dim() == d)) throw DomainError("strata do not have dimension vector " + d.to_string());
                Json j{{"lambda", l.to_string()}, {"mu", m.to_string()}, {"closure_leq", closure_leq(l, m)}, {"closure_geq", closure_leq(m, l)}};
                j["rank_function_leq"] = q.is_equioriented_a() ? Json(rank_function_leq(l, m)) : Json(nullptr);
                emit(common, j);
                note(common, std::string("X_mu ") + (closure_leq(l, m) ? "lies" : "does not lie") + " in the closure of X_lambda");
            } else {
                const auto l = Multisegment::parse(system, lambda_text);
                if (!(l.dim() == d)) throw DomainError("stratum " + l.to_string() + " does not have dimension vector " + d.to_string());
                const auto info = stratum_info(l);
                emit(common, {{"lambda", l.to_string()}, {"dim", io::to_json(d)}, {"info", io::to_json(info)}});
                note(common, l.to_string() + ": orbit dim " + std::to_string(info.orbit_dim) + ", codim " + std::to_string(info.codim));
            }
        } else if (*seq) {
            QuiverArgs tmp;
            tmp.dim = seq_dim;
            const DimVector d = tmp.dimension();
            const BigInt c = enumerate_seq_count(d);
            emit(common, {{"dim", io::to_json(d)}, {"count", c.get_str()}});
            note(common, "|Seq(d)| = " + c.get_str());
        } else if (*kl) {
            const Permutation y = parse_perm(kl_y, kl_n);
            const Permutation w = parse_perm(kl_w, kl_n ? kl_n : y.size());
            KLCache cache;
            const LaurentPoly p = kl_polynomial(y, w, cache);
            Json coeffs = Json::array();
            if (!p.is_zero())
                for (int e = 0; e <= p.max_exponent(); ++e) coeffs.push_back(p.coeff(e).get_str());
            emit(common, {{"n", y.size()}, {"y", y.to_string()}, {"w", w.to_string()}, {"bruhat_leq", bruhat_leq(y, w)},
                          {"P", p.to_string("q")}, {"coefficients", coeffs}});
            note(common, "P_{" + y.to_string() + "," + w.to_string() + "} = " + p.to_string("q"));
        } else if (*zel) {
            if (to_perm == to_ms) throw std::invalid_argument("give exactly one of --to-perm, --to-multisegment");
            if (to_ms) {
                if (z_w.empty()) throw std::invalid_argument("--to-multisegment needs --w");
                const Permutation w = parse_perm(z_w, z_n);
                const Multisegment m = multisegment_of_permutation(w);
                const auto info = stratum_info(m, false);
                emit(common, {{"n", w.size()}, {"permutation", w.to_string()}, {"multisegment", m.to_string()},
                              {"dim", io::to_json(m.dim())}, {"info", io::to_json(info)}});
                note(common, w.to_string() + " -> " + m.to_string());
            } else {
                if (z_lambda.empty() || z_n == 0) throw std::invalid_argument("--to-perm needs --n and --lambda");
                auto system = RootSystem::make(flag_quiver(z_n));
                const Multisegment m = Multisegment::parse(system, z_lambda);
                const Permutation w = zelevinsky_permutation(m);
                emit(common, {{"n", z_n}, {"multisegment", m.to_string()}, {"permutation", w.to_string()}, {"length", w.length()}});
                note(common, m.to_string() + " -> " + w.to_string());
            }
        } else if (*ksc) {
            auto deadline = make_deadline(ks_budget);
            const Deadline* dl = deadline.get();
            if (*ks_count) {
                BigInt c = ks_method == "brute" ? ks::count_points_bruteforce(static_cast<std::uint32_t>(ks_q), dl)
                                                : ks::count_points_stratified(ks_q);
                emit(common, {{"q", ks_q}, {"count", c.get_str()}, {"method", ks_method}});
                note(common, "|S(F_" + std::to_string(ks_q) + ")| = " + c.get_str());
            } else {
                const auto est = ks::dimension_estimate(ks_samples, ks_holdout, dl);
                emit(common, io::to_json(est));
                note(common, "|S(F_q)| = " + est.polynomial.to_string("q") + ", degree " + std::to_string(est.degree));
            }
        } else if (*bmpc) {
            const Permutation y = Permutation::parse(b_y);
            const Permutation w = parse_perm(b_w, y.size());
            auto deadline = make_deadline(b_budget);
            const auto limit = static_cast<std::size_t>(b_memory_gib * static_cast<double>(std::size_t{1} << 30));
            const auto report = bmp::torsion_probe(y, w, b_p, deadline.get(), common.threads, limit);
            emit(common, io::to_json(report));
            if (!common.quiet) {
                std::cerr << "[" << y.to_string() << ", " << w.to_string() << "]: " << report.vertex_count << " vertices, " << report.edge_count
                          << " edges; verdict " << bmp::to_string(report.verdict) << " (" << report.seconds << " s)\n";
                for (const auto& v : report.vertices) {
                    if (!v.char0 && !v.charp) continue;
                    auto show = [](const std::optional<GradedRank>& r) { return r ? r->to_poly(2).to_string("q") : std::string("-"); };
                    if ((v.char0 && v.char0->total() > 1) || v.divergent)
                        std::cerr << "  " << v.perm.to_string() << "  Q: " << show(v.char0) << "  F_" << b_p << ": " << show(v.charp)
                                  << (v.divergent ? "  DIVERGENT" : "") << "\n";
                }
                if (report.budget_exhausted) std::cerr << "budget exhausted (" << report.stop_reason << "); partial report written\n";
            }
            if (report.budget_exhausted) return 2;
        } else if (*dm) {
            KLCache cache;
            const auto d = char0_decomposition_matrix(dm_n, cache);
            emit(common, io::to_json(d, char0_label_permutations(dm_n)));
            note(common, std::to_string(d.size()) + " x " + std::to_string(d.size()) + " decomposition matrix, " +
                             std::to_string(d.order.size()) + " order relations");
        } else if (*pid) {
            std::ifstream in(pi_report);
            if (!in) throw std::invalid_argument("cannot open " + pi_report);
            const auto report = io::report_from_json(Json::parse(in));
            StratumLabel lower{pi_lower_name, pi_lower.empty() ? report.y : Permutation::parse(pi_lower)};
            StratumLabel upper{pi_upper_name, pi_upper.empty() ? report.w : Permutation::parse(pi_upper)};
            const auto id = predicted_modular_identity(report, lower, upper);
            emit(common, io::to_json(id));
            note(common, id.grothendieck + "\n" + id.geometric);
        }
    } catch (const BudgetExhausted& e) {
        emit(common, {{"error", e.what()}, {"budget_exhausted", true}});
        std::cerr << "klrtor: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "klrtor: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
