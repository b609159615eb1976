#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdg/asymptotics.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/series_io.hpp"
#include "cdg/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputTarget {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw cdg::BadInput("cannot open output file " + path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
};

cdg::json meta_header(const std::string& command, const cdg::json& config, bool timestamp) {
    cdg::json m{{"tool", "cdg"}, {"version", kVersion}, {"command", command}, {"config", config}};
    if (timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        m["timestamp"] = buf;
    }
    return m;
}

std::string csv_meta(const cdg::json& meta) {
    std::ostringstream s;
    s << "# " << meta.dump() << "\n";
    return s.str();
}

int cmd_enumerate(const std::string& mode_name, int max_arcs, std::optional<int> genus,
                  std::optional<bool> irreducible, std::optional<bool> connected,
                  const std::string& ab, std::optional<int> gamma, int threads, int cap,
                  const std::string& format, const OutputTarget& out, bool timestamp) {
    cdg::EnumMode mode;
    if (mode_name == "matchings_1bb") mode = cdg::EnumMode::matchings_1bb;
    else if (mode_name == "matchings_2bb") mode = cdg::EnumMode::matchings_2bb;
    else if (mode_name == "shadows_1bb") mode = cdg::EnumMode::shadows_1bb;
    else if (mode_name == "shadows_2bb") mode = cdg::EnumMode::shadows_2bb;
    else throw CLI::ValidationError("unknown mode " + mode_name);
    cdg::EnumFilters f;
    f.genus = genus;
    f.irreducible = irreducible;
    f.connected = connected;
    f.gamma = gamma;
    if (ab == "A") f.ab = cdg::ShadowClass::A;
    else if (ab == "B") f.ab = cdg::ShadowClass::B;
    else if (!ab.empty()) throw CLI::ValidationError("class must be A or B");
    cdg::EnumLimits limits;
    if (cap > 0) limits.matchings_cap = limits.two_bb_cap = cap;
    auto census = cdg::enumerate_census(mode, max_arcs, f, limits, threads);
    cdg::json config{{"mode", mode_name}, {"max_arcs", max_arcs}, {"threads", threads}};
    cdg::json meta = meta_header("enumerate", config, timestamp);
    std::ostringstream s;
    if (format == "csv") {
        s << csv_meta(meta) << "mode,genus,arcs,class,count\n";
        for (const auto& [key, count] : census.counts) {
            auto [g, m, cls] = key;
            s << mode_name << ',' << g << ',' << m << ','
              << (cls < 0 ? "-" : (cls == 0 ? "A" : "B")) << ',' << count << '\n';
        }
    } else {
        cdg::json rows = cdg::json::array();
        for (const auto& [key, count] : census.counts) {
            auto [g, m, cls] = key;
            rows.push_back({{"genus", g}, {"arcs", m},
                            {"class", cls < 0 ? "-" : (cls == 0 ? "A" : "B")}, {"count", count}});
        }
        s << cdg::json{{"meta", meta}, {"census", rows}}.dump(2);
    }
    out.write(s.str());
    return 0;
}

int cmd_tables(const std::string& kind, int max_genus, int max_arcs, const OutputTarget& out,
               bool timestamp) {
    cdg::json config{{"kind", kind}, {"max_genus", max_genus}};
    cdg::json meta = meta_header("tables", config, timestamp);
    cdg::json payload;
    if (kind == "c" || kind == "q") {
        if (max_arcs <= 0) max_arcs = 6 * (max_genus + 1) + 2;
        auto c = cdg::harer_zagier(max_genus + 1, max_arcs + 1);
        cdg::json layers = cdg::json::array();
        if (kind == "c") {
            for (int g = 0; g <= max_genus; ++g)
                layers.push_back(cdg::to_json(c[static_cast<size_t>(g)].truncated(max_arcs)));
        } else {
            auto q = cdg::bicellular_q(max_genus, max_arcs, c);
            for (int g = 0; g <= max_genus; ++g) layers.push_back(cdg::to_json(q[static_cast<size_t>(g)]));
        }
        payload = cdg::json{{"kind", kind}, {"by_genus", layers}};
    } else if (kind == "i1") {
        auto i1 = cdg::irreducible_1bb(max_genus);
        cdg::json layers = cdg::json::array();
        for (int g = 0; g <= max_genus; ++g) layers.push_back(cdg::to_json(i1[static_cast<size_t>(g)]));
        payload = cdg::json{{"kind", kind}, {"by_genus", layers}};
    } else if (kind == "i2A" || kind == "i2B") {
        auto ab = cdg::two_bb_shadow_polys(max_genus);
        cdg::json layers = cdg::json::array();
        for (int g = 0; g <= max_genus; ++g)
            layers.push_back(cdg::to_json(kind == "i2A" ? ab.A[static_cast<size_t>(g)]
                                                        : ab.B[static_cast<size_t>(g)]));
        payload = cdg::json{{"kind", kind}, {"by_genus", layers}};
    } else {
        throw CLI::ValidationError("unknown table kind " + kind);
    }
    out.write(cdg::json{{"meta", meta}, {"table", payload}}.dump(2));
    return 0;
}

int cmd_series(int gamma, int tau, int order, bool bivariate, const std::string& variant_name,
               const std::string& format, const OutputTarget& out, bool timestamp) {
    auto variant = variant_name == "printed" ? cdg::SubstitutionVariant::as_printed
                                             : cdg::SubstitutionVariant::self_consistent;
    int table_genus = std::max(gamma, 1);
    auto i1 = cdg::irreducible_1bb(table_genus);
    auto ab = cdg::two_bb_shadow_polys(table_genus);
    cdg::json config{{"gamma", gamma}, {"tau", tau}, {"order", order},
                     {"bivariate", bivariate}, {"variant", variant_name}};
    cdg::json meta = meta_header("series", config, timestamp);
    std::ostringstream s;
    if (!bivariate) {
        cdg::SeriesQ H = cdg::h_gamma_scalar<cdg::Rational>(gamma, order, cdg::Rational(1), i1);
        cdg::SeriesQ Q = cdg::q_gamma_scalar<cdg::Rational>(gamma, order, cdg::Rational(1), i1, ab, variant);
        if (format == "csv") {
            s << csv_meta(meta) << "series,n,coefficient\n";
            for (int n = 0; n <= order; ++n) s << "H," << n << ',' << H.coeff(n) << '\n';
            for (int n = 0; n <= order; ++n) s << "Q," << n << ',' << Q.coeff(n) << '\n';
        } else {
            s << cdg::json{{"meta", meta}, {"H", cdg::to_json(H)}, {"Q", cdg::to_json(Q)}}.dump(2);
        }
    } else {
        cdg::GammaConfig cfg;
        cfg.gamma = gamma;
        cfg.tau = tau;
        cfg.u_order = order;
        cdg::SeriesB Q = cdg::q_gamma_bivariate(cfg, i1, ab);
        cdg::SeriesB Qt = cdg::canonical_gf(cfg, order, i1, ab);
        if (format == "csv") {
            s << csv_meta(meta) << "series,n,g,coefficient\n";
            for (int n = 0; n <= order; ++n)
                for (int g = 0; g <= Q.coeff(n).degree(); ++g)
                    if (sgn(Q.coeff(n).coeff(g)) != 0)
                        s << "Q," << n << ',' << g << ',' << Q.coeff(n).coeff(g) << '\n';
            for (int n = 0; n <= order; ++n)
                for (int g = 0; g <= Qt.coeff(n).degree(); ++g)
                    if (sgn(Qt.coeff(n).coeff(g)) != 0)
                        s << "Q_tau," << n << ',' << g << ',' << Qt.coeff(n).coeff(g) << '\n';
        } else {
            s << cdg::json{{"meta", meta}, {"Q", cdg::to_json(Q)},
                           {"Q_tau", cdg::to_json(Qt, "z", "t")}}.dump(2);
        }
    }
    out.write(s.str());
    return 0;
}

int cmd_verify(int max_arcs, int max_genus, std::uint64_t seed, int threads,
               const OutputTarget& out, bool timestamp) {
    cdg::VerifyOptions opt;
    opt.max_arcs = max_arcs;
    opt.max_genus = max_genus;
    opt.seed = seed;
    opt.threads = threads;
    auto results = cdg::run_verification(opt);
    cdg::json config{{"max_arcs", max_arcs}, {"max_genus", max_genus},
                     {"seed", seed}, {"threads", threads}};
    cdg::json meta = meta_header("verify", config, timestamp);
    std::ostringstream s;
    s << csv_meta(meta);
    bool all_ok = true;
    for (const auto& r : results) {
        s << (r.passed ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << '\n';
        all_ok = all_ok && r.passed;
    }
    s << (all_ok ? "verification: all checks passed\n" : "verification: FAILURES above\n");
    out.write(s.str());
    return all_ok ? 0 : 1;
}

int cmd_clt(int gamma, int tau, int order, double h, double mu_tol, const std::string& variant_name,
            const OutputTarget& out, bool timestamp) {
    auto variant = variant_name == "printed" ? cdg::SubstitutionVariant::as_printed
                                             : cdg::SubstitutionVariant::self_consistent;
    int table_genus = std::max(gamma, 1);
    auto i1 = cdg::irreducible_1bb(table_genus);
    auto ab = cdg::two_bb_shadow_polys(table_genus);
    cdg::CltOptions opt;
    opt.z_order = order;
    opt.step_h = static_cast<long double>(h);
    opt.mu_tolerance = mu_tol;
    opt.variant = variant;
    cdg::CltReport rep = cdg::clt_params(gamma, tau, opt, i1, ab);
    cdg::json config{{"gamma", gamma}, {"tau", tau}, {"order", order}, {"step", h},
                     {"variant", variant_name}};
    cdg::json meta = meta_header("clt", config, timestamp);
    cdg::json body{{"gamma", rep.gamma}, {"tau", rep.tau}, {"mu", rep.mu},
                   {"sigma_sq", rep.sigma_sq}, {"theta_at_1", rep.theta_at_1},
                   {"theta_prime", rep.theta_prime}, {"theta_second", rep.theta_second},
                   {"step_h", rep.step_h}, {"mu_halving_delta", rep.mu_halving_delta},
                   {"sigma_sq_halving_delta", rep.sigma_sq_halving_delta}};
    out.write(cdg::json{{"meta", meta}, {"clt", body}}.dump(2));
    return 0;
}

int cmd_distribution(int n, int gamma, int tau, const std::string& format, const OutputTarget& out,
                     bool timestamp) {
    int table_genus = std::max(gamma, 1);
    auto i1 = cdg::irreducible_1bb(table_genus);
    cdg::TwoBackbonePolys ab = cdg::two_bb_shadow_polys(table_genus);
    cdg::GenusDistribution dist = cdg::genus_distribution(n, gamma, tau, i1, ab);
    cdg::json config{{"n", n}, {"gamma", gamma}, {"tau", tau}};
    cdg::json meta = meta_header("distribution", config, timestamp);
    std::ostringstream s;
    if (format == "csv") {
        s << csv_meta(meta) << "g,probability\n";
        for (size_t g = 0; g < dist.probabilities.size(); ++g)
            s << g << ',' << cdg::to_double(dist.probabilities[g]) << '\n';
        s << "# mean=" << dist.mean << " variance=" << dist.variance
          << " skewness=" << dist.skewness << " excess_kurtosis=" << dist.excess_kurtosis << '\n';
    } else {
        cdg::json probs = cdg::json::array();
        for (const auto& p : dist.probabilities) probs.push_back(cdg::to_json(p));
        s << cdg::json{{"meta", meta},
                       {"distribution",
                        {{"n", dist.n}, {"gamma", dist.gamma}, {"tau", dist.tau},
                         {"probabilities", probs}, {"mean", dist.mean}, {"variance", dist.variance},
                         {"skewness", dist.skewness}, {"excess_kurtosis", dist.excess_kurtosis}}}}
                 .dump(2);
    }
    out.write(s.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus-filtered chord diagram series over one and two backbones"};
    app.require_subcommand(1);
    bool timestamp = false;
    app.add_flag("--timestamp", timestamp, "include a wall-clock timestamp in output metadata");

    std::string output_path;
    app.add_option("--output", output_path, "write output to a file instead of stdout");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "exhaustive diagram censuses");
    std::string en_mode = "matchings_1bb";
    int en_arcs = 4, en_threads = 1, en_cap = 0;
    std::string en_class;
    std::optional<int> en_genus, en_gamma;
    std::optional<bool> en_irred, en_conn;
    bool en_irred_flag = false, en_conn_flag = false;
    std::string en_format = "csv";
    en->add_option("--mode", en_mode, "matchings_1bb|matchings_2bb|shadows_1bb|shadows_2bb");
    en->add_option("--max-arcs", en_arcs, "enumerate up to this arc count");
    int en_genus_v = -1, en_gamma_v = -1;
    en->add_option("--genus", en_genus_v, "keep only this total genus");
    en->add_option("--gamma", en_gamma_v, "keep only diagrams with irreducible shadows of genus <= gamma");
    en->add_flag("--irreducible", en_irred_flag, "keep only irreducible diagrams");
    en->add_flag("--connected", en_conn_flag, "keep only connected diagrams");
    en->add_option("--class", en_class, "A or B (two-backbone shadows)");
    en->add_option("--threads", en_threads, "worker threads");
    en->add_option("--cap", en_cap, "override the brute-force arc cap");
    en->add_option("--format", en_format, "csv|json");

    // tables
    auto* tb = app.add_subcommand("tables", "genus tables and shadow polynomials");
    std::string tb_kind = "i2A";
    int tb_genus = 2, tb_arcs = 0;
    tb->add_option("--kind", tb_kind, "c|q|i1|i2A|i2B");
    tb->add_option("--max-genus", tb_genus, "table depth");
    tb->add_option("--max-arcs", tb_arcs, "series order for c/q tables");

    // series
    auto* se = app.add_subcommand("series", "gamma-filtered generating functions");
    int se_gamma = 0, se_tau = 1, se_order = 60;
    bool se_biv = false;
    std::string se_variant = "consistent", se_format = "json";
    se->add_option("--gamma", se_gamma, "maximum irreducible-shadow genus");
    se->add_option("--tau", se_tau, "minimum stack length");
    se->add_option("--order", se_order, "truncation order");
    se->add_flag("--bivariate", se_biv, "emit genus-marked series");
    se->add_option("--variant", se_variant, "consistent|printed inner substitution");
    se->add_option("--format", se_format, "json|csv");

    // verify
    auto* ve = app.add_subcommand("verify", "run every recursion against its brute-force oracle");
    int ve_arcs = 5, ve_genus = 2, ve_threads = 1;
    std::uint64_t ve_seed = 20240901;
    ve->add_option("--max-arcs", ve_arcs, "brute-force arc range");
    ve->add_option("--max-genus", ve_genus, "recursion depth to check");
    ve->add_option("--seed", ve_seed, "seed for randomized property checks");
    ve->add_option("--threads", ve_threads, "worker threads");

    // clt
    auto* cl = app.add_subcommand("clt", "central-limit parameters of the genus distribution");
    int cl_gamma = 0, cl_tau = 1, cl_order = 400;
    double cl_h = 2e-3, cl_tol = 2e-3;
    std::string cl_variant = "consistent";
    cl->add_option("--gamma", cl_gamma, "maximum irreducible-shadow genus (0 or 1)");
    cl->add_option("--tau", cl_tau, "minimum stack length");
    cl->add_option("--order", cl_order, "z-series order");
    cl->add_option("--step", cl_h, "finite-difference step");
    cl->add_option("--mu-tol", cl_tol, "step-halving tolerance on mu");
    cl->add_option("--variant", cl_variant, "consistent|printed inner substitution");

    // distribution
    auto* di = app.add_subcommand("distribution", "exact genus distribution at fixed n");
    int di_n = 50, di_gamma = 0, di_tau = 1;
    std::string di_format = "csv";
    di->add_option("--n", di_n, "vertex count");
    di->add_option("--gamma", di_gamma, "maximum irreducible-shadow genus");
    di->add_option("--tau", di_tau, "minimum stack length");
    di->add_option("--format", di_format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OutputTarget out{output_path};
    try {
        if (*en) {
            if (en_genus_v >= 0) en_genus = en_genus_v;
            if (en_gamma_v >= 0) en_gamma = en_gamma_v;
            if (en_irred_flag) en_irred = true;
            if (en_conn_flag) en_conn = true;
            return cmd_enumerate(en_mode, en_arcs, en_genus, en_irred, en_conn, en_class, en_gamma,
                                 en_threads, en_cap, en_format, out, timestamp);
        }
        if (*tb) return cmd_tables(tb_kind, tb_genus, tb_arcs, out, timestamp);
        if (*se) return cmd_series(se_gamma, se_tau, se_order, se_biv, se_variant, se_format, out, timestamp);
        if (*ve) return cmd_verify(ve_arcs, ve_genus, ve_seed, ve_threads, out, timestamp);
        if (*cl) return cmd_clt(cl_gamma, cl_tau, cl_order, cl_h, cl_tol, cl_variant, out, timestamp);
        if (*di) return cmd_distribution(di_n, di_gamma, di_tau, di_format, out, timestamp);
    } catch (const cdg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
