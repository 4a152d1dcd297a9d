#include "supertree/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "supertree/certificates.hpp"
#include "supertree/constructors.hpp"
#include "supertree/error.hpp"
#include "supertree/io.hpp"
#include "supertree/ordering.hpp"
#include "supertree/spectral.hpp"

namespace supertree::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return values;
}

// star:N, path:N, double-star:A,B or f:N
OrdinaryTree parse_tree(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidArgument("tree spec must look like path:5");
    const std::string kind = spec.substr(0, colon);
    const auto args = parse_int_list(spec.substr(colon + 1));
    if (kind == "star" && args.size() == 1) return star(args[0]);
    if (kind == "path" && args.size() == 1) return path(args[0]);
    if (kind == "f" && args.size() == 1) return f_tree(args[0]);
    if (kind == "double-star" && args.size() == 2) return double_star(args[0], args[1]);
    throw InvalidArgument("unknown tree spec '" + spec + "'");
}

std::string human(double value) {
    std::ostringstream os;
    os << std::setprecision(9) << value;
    return os.str();
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

void print_report(std::ostream& out, const SpectraReport& report) {
    out << "k=" << report.k << " m=" << report.m << " classes=" << report.entries.size() << '\n';
    out << std::left << std::setw(6) << "rank" << std::setw(14) << "rho" << std::setw(9) << "method" << "key\n";
    for (const auto& e : report.entries) {
        out << std::left << std::setw(6) << e.rank << std::setw(14) << human(e.rho) << std::setw(9)
            << to_string(e.method) << e.key << (e.tied_with_next ? "  [tie]" : "") << '\n';
    }
}

struct GenArgs {
    std::string family;
    int k = 3;
    int m = 0;
    std::string t;
    std::string tree;
    std::string out_path;
};

Hypergraph build_family(const GenArgs& a) {
    if (a.family == "hyperstar") return hyperstar(a.m, a.k);
    if (a.family == "path-power") return tree_power(path(a.m + 1), a.k);
    if (a.family == "f-tree-power") return tree_power(f_tree(a.m + 1), a.k);
    if (a.family == "tree-power") return tree_power(parse_tree(a.tree), a.k);
    if (a.family == "double-star-power") {
        auto ab = parse_int_list(a.t);
        if (ab.size() != 2) throw InvalidArgument("double-star-power needs --t a,b");
        return tree_power(double_star(ab[0], ab[1]), a.k);
    }
    if (a.family == "broom") {
        auto ts = parse_int_list(a.t);
        if (ts.size() != 3) throw InvalidArgument("broom needs --t t1,t2,t3");
        std::sort(ts.begin(), ts.end());
        return broom(ts[0], ts[1], ts[2], a.k);
    }
    throw InvalidArgument("unknown family '" + a.family + "'");
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    Hypergraph h = build_family(a);
    const std::string text = io::to_json(h).dump() + "\n";
    std::ostream& summary = a.out_path.empty() ? err : out;
    emit(out, a.out_path, text);
    summary << "n=" << h.n() << " m=" << h.m() << " k=" << h.k() << " N2=" << non_pendent_count(h) << '\n';
    return 0;
}

int cmd_rho(const std::string& file, const CliConfig& cfg, std::ostream& out) {
    Hypergraph h = io::hypergraph_from_json(io::read_json_file(file));
    nlohmann::json doc{{"n", h.n()}, {"m", h.m()}, {"k", h.k()}};
    std::ostringstream text;

    auto run_power = [&](nlohmann::json& slot) {
        PrincipalPair p = power_iteration(h, cfg.tol, cfg.max_iter);
        slot = {{"method", "power"}, {"rho", p.rho}, {"residual", p.residual}, {"iterations", p.iterations}};
        text << "method=power rho=" << human(p.rho) << " residual=" << human(p.residual)
             << " iterations=" << p.iterations << '\n';
        return p.rho;
    };
    auto run_alpha = [&](nlohmann::json& slot) {
        AlphaRadius a = alpha_normal_solve(h);
        slot = {{"method", "alpha"}, {"rho", a.rho}, {"alpha", a.alpha}, {"iterations", a.iterations}};
        text << "method=alpha rho=" << human(a.rho) << " alpha=" << human(a.alpha)
             << " iterations=" << a.iterations << '\n';
        return a.rho;
    };

    if (cfg.method == "auto") {
        nlohmann::json results = nlohmann::json::array({nullptr, nullptr});
        const double p = run_power(results[0]);
        const double a = run_alpha(results[1]);
        doc["results"] = results;
        doc["gap"] = std::abs(p - a);
        text << "gap=" << human(std::abs(p - a)) << '\n';
    } else if (cfg.method == "power") {
        run_power(doc["result"]);
    } else if (cfg.method == "alpha") {
        run_alpha(doc["result"]);
    } else if (cfg.method == "formula") {
        auto tree = underlying_tree(h);
        if (!tree) throw InvalidArgument("formula method applies only to powers of ordinary trees");
        const double rho = power_formula_radius(*tree, h.k(), cfg.tol);
        doc["result"] = {{"method", "formula"}, {"rho", rho}};
        text << "method=formula rho=" << human(rho) << '\n';
    } else {
        throw InvalidArgument("unknown method '" + cfg.method + "'");
    }

    if (cfg.output == OutputFormat::json) {
        out << doc.dump() << '\n';
    } else {
        out << "n=" << h.n() << " m=" << h.m() << " k=" << h.k() << '\n' << text.str();
    }
    return 0;
}

struct CertifyArgs {
    std::string file;
    std::string cert_path;
    std::string construct;
    double alpha = 0.0;
    bool alpha_given = false;
};

int cmd_certify(const CertifyArgs& a, const CliConfig& cfg, std::ostream& out) {
    io::CertificateFile input = io::certificate_from_json(io::read_json_file(a.file));
    std::optional<double> alpha = a.alpha_given ? std::optional<double>(a.alpha) : input.alpha;
    std::optional<WeightedIncidence> b = input.certificate;

    if (!a.cert_path.empty()) {
        io::CertificateFile cert = io::certificate_from_json(io::read_json_file(a.cert_path));
        if (!(cert.graph == input.graph)) throw IncidenceMismatch("certificate file describes a different hypergraph");
        b = cert.certificate;
        if (!a.alpha_given && cert.alpha) alpha = cert.alpha;
    }
    if (!alpha) throw InvalidArgument("certify needs --alpha or an \"alpha\" field");
    if (!(*alpha > 0.0)) throw InvalidArgument("alpha must be positive");

    if (!a.construct.empty()) {
        if (a.construct != "t11m3") throw InvalidArgument("unknown construction '" + a.construct + "'");
        const int m = input.graph.m();
        const int k = input.graph.k();
        if (m < 4 || k < 3 || !is_supertree(input.graph) ||
            canonical_key(input.graph) != canonical_key(broom(1, 1, m - 3, k))) {
            throw IncidenceMismatch("--construct t11m3 needs the hypergraph T(1,1,m-3)");
        }
        b = t11m3_certificate(m, k, *alpha);
    }
    if (!b) throw InvalidArgument("no weighted incidence matrix: pass --cert, --construct or a \"B\" field");

    CertificateVerdict v = classify(*b, *alpha);
    const double bound = std::pow(*alpha, -1.0 / b->host().k());
    auto [vmin, vmax] = std::minmax_element(v.vertex_slacks.begin(), v.vertex_slacks.end());
    auto [emin, emax] = std::minmax_element(v.edge_slacks.begin(), v.edge_slacks.end());

    std::string implication = "none";
    if (v.cls == CertificateClass::strictly_subnormal) {
        implication = "rho < " + human(bound);
    } else if (v.cls == CertificateClass::strictly_supernormal && v.consistent) {
        implication = "rho > " + human(bound);
    } else if (v.cls == CertificateClass::normal && v.consistent) {
        implication = "rho = " + human(bound);
    }

    if (cfg.output == OutputFormat::json) {
        nlohmann::json doc{{"class", std::string(to_string(v.cls))},
                           {"alpha", *alpha},
                           {"bound", bound},
                           {"consistent", v.consistent},
                           {"vertex_slack_min", *vmin},
                           {"vertex_slack_max", *vmax},
                           {"edge_slack_min", *emin},
                           {"edge_slack_max", *emax},
                           {"vertex_slacks", v.vertex_slacks},
                           {"edge_slacks", v.edge_slacks},
                           {"implication", implication}};
        out << doc.dump() << '\n';
    } else {
        out << "class=" << to_string(v.cls) << '\n'
            << "alpha=" << human(*alpha) << " alpha^(-1/k)=" << human(bound) << '\n'
            << "vertex slack min=" << human(*vmin) << " max=" << human(*vmax) << '\n'
            << "edge slack min=" << human(*emin) << " max=" << human(*emax) << '\n'
            << "consistent=" << (v.consistent ? "true" : "false") << '\n'
            << "implication: " << implication << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string theorem;
    int k = 3;
    int m = 5;
    int trials = 50;
};

int cmd_verify(const VerifyArgs& a, const CliConfig& cfg, std::ostream& out) {
    const SolverConfig solver{cfg.tol, cfg.max_iter};
    VerificationRecord rec;
    try {
        if (a.theorem == "main1") {
            rec = verify_top_four(a.m, a.k, 3, solver);
        } else if (a.theorem == "main2") {
            rec = verify_top_four(a.m, a.k, 4, solver);
        } else if (a.theorem == "hofmeister") {
            rec = verify_top_four(a.m, 2, 4, solver);
        } else if (a.theorem == "moving-edges") {
            MovingEdgesOptions options;
            options.k = a.k;
            rec = verify_moving_edges(a.trials, cfg.seed, options, solver);
        } else if (a.theorem == "partition") {
            rec = verify_partition_lemma(a.m, a.k, solver);
        } else if (a.theorem == "sandwich") {
            rec = verify_sandwich(a.m, a.k, solver);
        } else {
            throw InvalidArgument("unknown theorem '" + a.theorem + "'");
        }
    } catch (const CounterexampleFound& ex) {
        out << "FAIL " << a.theorem << ": " << ex.what() << '\n';
        return kExitFailure;
    }

    if (cfg.output == OutputFormat::json) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& c : rec.values) values.push_back({{"label", c.label}, {"value", c.rho}});
        nlohmann::json doc{{"theorem", a.theorem}, {"name", rec.name}, {"pass", true}, {"values", values}};
        if (!rec.report.entries.empty()) doc["report"] = io::to_json(rec.report);
        out << doc.dump() << '\n';
        return 0;
    }
    if (!rec.report.entries.empty()) print_report(out, rec.report);
    for (const auto& c : rec.values) out << c.label << ": " << human(c.rho) << '\n';
    out << "PASS " << a.theorem << " (" << rec.name << ")\n";
    return 0;
}

struct EnumerateArgs {
    int k = 3;
    int m = 4;
    std::string out_path;
};

int cmd_enumerate(const EnumerateArgs& a, const CliConfig& cfg, std::ostream& out) {
    if (cfg.method == "auto") throw InvalidArgument("enumerate needs a single method");
    SpectraReport report = rank_spectra(a.m, a.k, parse_method(cfg.method), SolverConfig{cfg.tol, cfg.max_iter});
    switch (cfg.output) {
        case OutputFormat::json: emit(out, a.out_path, io::to_json(report).dump(2) + "\n"); break;
        case OutputFormat::csv: emit(out, a.out_path, io::to_csv(report)); break;
        case OutputFormat::human: {
            std::ostringstream os;
            print_report(os, report);
            emit(out, a.out_path, os.str());
            break;
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral radii of k-uniform supertrees", "supertree"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, OutputFormat> formats{
        {"human", OutputFormat::human}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    auto add_solver_flags = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tol, "relative bracket tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", cfg.max_iter, "power iteration budget")->check(CLI::PositiveNumber);
    };
    auto add_output_flag = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "human, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "build a supertree and write it as JSON");
    gen_cmd->add_option("family", gen.family,
                        "hyperstar, double-star-power, tree-power, broom, f-tree-power or path-power")
        ->required();
    gen_cmd->add_option("--k", gen.k, "edge size")->check(CLI::Range(2, 64));
    gen_cmd->add_option("--m", gen.m, "number of edges");
    gen_cmd->add_option("--t", gen.t, "a,b for double stars or t1,t2,t3 for brooms");
    gen_cmd->add_option("--tree", gen.tree, "star:N, path:N, double-star:A,B or f:N");
    gen_cmd->add_option("--out", gen.out_path, "output file (stdout when omitted)");

    std::string rho_file;
    auto* rho_cmd = app.add_subcommand("rho", "spectral radius of a hypergraph file");
    rho_cmd->add_option("file", rho_file)->required();
    rho_cmd->add_option("--method", cfg.method, "power, alpha, formula or auto")
        ->check(CLI::IsMember({"power", "alpha", "formula", "auto"}));
    add_solver_flags(rho_cmd);
    add_output_flag(rho_cmd);

    CertifyArgs cert;
    auto* cert_cmd = app.add_subcommand("certify", "classify a weighted incidence matrix");
    cert_cmd->add_option("file", cert.file, "hypergraph or certificate JSON")->required();
    auto* alpha_opt = cert_cmd->add_option("--alpha", cert.alpha, "alpha")->check(CLI::PositiveNumber);
    cert_cmd->add_option("--cert", cert.cert_path, "certificate JSON with \"B\" entries");
    cert_cmd->add_option("--construct", cert.construct, "build a known certificate (t11m3)");
    add_output_flag(cert_cmd);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check an ordering result exhaustively");
    verify_cmd->add_option("theorem", verify.theorem, "main1, main2, hofmeister, moving-edges, partition, sandwich")
        ->required();
    verify_cmd->add_option("--k", verify.k)->check(CLI::Range(2, 64));
    verify_cmd->add_option("--m", verify.m)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trials", verify.trials)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", cfg.seed);
    add_solver_flags(verify_cmd);
    add_output_flag(verify_cmd);

    EnumerateArgs en;
    auto* enum_cmd = app.add_subcommand("enumerate", "rank every supertree with m edges");
    enum_cmd->add_option("--k", en.k)->check(CLI::Range(2, 64));
    enum_cmd->add_option("--m", en.m)->check(CLI::PositiveNumber);
    enum_cmd->add_option("--method", cfg.method, "power, alpha or formula")
        ->check(CLI::IsMember({"power", "alpha", "formula"}));
    enum_cmd->add_option("--out", en.out_path, "output file (stdout when omitted)");
    add_solver_flags(enum_cmd);
    add_output_flag(enum_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out, err);
        if (*rho_cmd) return cmd_rho(rho_file, cfg, out);
        if (*cert_cmd) {
            cert.alpha_given = alpha_opt->count() > 0;
            return cmd_certify(cert, cfg, out);
        }
        if (*verify_cmd) return cmd_verify(verify, cfg, out);
        if (*enum_cmd) return cmd_enumerate(en, cfg, out);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace supertree::cli
