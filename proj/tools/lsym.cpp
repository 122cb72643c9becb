// lsym: exact symmetric power series calculator with invariant-theory
// queries and verification oracles.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsym/expr.hpp"
#include "lsym/invariants.hpp"
#include "lsym/random_gen.hpp"
#include "lsym/series_json.hpp"

namespace {

using namespace lsym;
using nlohmann::json;

struct GlobalOptions {
    int degree = 8;
    std::string ring = "Q";
    std::string basis = "m";
    bool json_out = false;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
};

int max_degree_cap() {
    if (const char* env = std::getenv("LSYM_MAX_DEGREE")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw std::domain_error("LSYM_MAX_DEGREE is not an integer");
        }
    }
    return 12;
}

void check_degree(const GlobalOptions& g) {
    int cap = max_degree_cap();
    if (g.degree < 0 || g.degree > cap)
        throw std::domain_error("degree bound " + std::to_string(g.degree) +
                                " outside [0, " + std::to_string(cap) +
                                "] (cap set by LSYM_MAX_DEGREE)");
}

// "Q" or "laurent:x,y,z"
std::vector<std::string> laurent_vars(const std::string& ring) {
    if (ring == "Q") return {};
    if (ring.rfind("laurent:", 0) == 0) {
        std::vector<std::string> vars;
        std::stringstream ss(ring.substr(8));
        std::string v;
        while (std::getline(ss, v, ','))
            if (!v.empty()) vars.push_back(v);
        if (vars.empty())
            throw std::domain_error("laurent ring needs at least one variable");
        return vars;
    }
    throw std::domain_error("unknown ring '" + ring + "' (expected Q or laurent:<vars>)");
}

bool is_laurent(const std::string& ring) { return ring != "Q"; }

template <AdamsScalar C>
void emit_result(const EvalResult<C>& r, const GlobalOptions& g) {
    Basis b = parse_basis(g.basis);
    if (g.json_out) {
        if (r.scalar) {
            std::cout << json{{"scalar", ring_traits<C>::to_string(r.series.constant_term())}}
                      << "\n";
        } else {
            std::cout << series_to_json(r.series, b) << "\n";
        }
        return;
    }
    if (r.scalar)
        std::cout << render_scalar(r.series.constant_term()) << "\n";
    else
        std::cout << render(r.series, b) << "\n";
}

template <AdamsScalar C>
void run_eval(const std::string& src, const GlobalOptions& g,
              const std::vector<std::string>& vars) {
    EvalConfig<C> cfg;
    cfg.degree_bound = g.degree;
    cfg.variables.insert(vars.begin(), vars.end());
    auto ast = parse_expr(src);
    emit_result(eval<C>(ast, cfg), g);
}

json read_json_input(const std::string& path) {
    if (path == "-") {
        json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

template <AdamsScalar C>
void run_convert(const std::string& input, const GlobalOptions& g) {
    auto f = series_from_json<C>(read_json_input(input));
    emit_result(EvalResult<C>{f, false}, g);
}

json invariant_record(Group group, int n, const Partition& tau, PowerKind kind,
                      bool unstable_ok, bool oracle_checks, const GlobalOptions& g) {
    auto res = invariant_dim(InvariantQuery{group, n, tau, kind}, unstable_ok);
    json rec{{"group", group_name(group)},
             {"n", n},
             {"tau", tau.parts()},
             {"kind", power_kind_name(kind)},
             {"dim", res.dim},
             {"stable", res.stable}};
    if (oracle_checks) {
        json checks;
        if (res.stable)
            checks["multigraph"] = multigraph_count(
                tau, (group == Group::Sp) == (kind == PowerKind::exterior));
        checks["weyl_ct"] = group == Group::Sp
                                ? weyl_ct_sp(n, tau, kind == PowerKind::symmetric)
                                : weyl_ct_o(n, tau, kind == PowerKind::symmetric);
        auto mc = haar_mc_dim(group, n, tau, g.samples, g.seed);
        checks["mc"] = {{"estimate", mc.estimate},
                        {"stderr", mc.stderr_est},
                        {"samples", g.samples},
                        {"seed", g.seed}};
        rec["oracle_checks"] = checks;
    }
    return rec;
}

int run_oracle(Group group, int n, const Partition& tau, PowerKind kind,
               const GlobalOptions& g) {
    json report;
    report["query"] = {{"group", group_name(group)},
                       {"n", n},
                       {"tau", tau.parts()},
                       {"kind", power_kind_name(kind)}};
    json exact;
    bool stable = tau.weight() <= n;
    if (stable) {
        exact["series_dim"] = invariant_dim(group, n, tau, kind);
        exact["multigraph"] =
            multigraph_count(tau, (group == Group::Sp) == (kind == PowerKind::exterior));
    }
    // exact at any weight, stable or not
    std::int64_t reference = group == Group::Sp
                                 ? weyl_ct_sp(n, tau, kind == PowerKind::symmetric)
                                 : weyl_ct_o(n, tau, kind == PowerKind::symmetric);
    exact["weyl_ct"] = reference;
    report["exact_values"] = exact;
    auto mc = haar_mc_dim(group, n, tau, g.samples, g.seed);
    report["mc"] = {{"estimate", mc.estimate},
                    {"stderr", mc.stderr_est},
                    {"imag_mean", mc.imag_mean},
                    {"samples", g.samples},
                    {"seed", g.seed}};
    bool ok = true;
    double err = std::abs(mc.estimate - static_cast<double>(reference));
    double tol = 3.0 * std::max(mc.stderr_est, 1e-12);
    ok = err <= tol;
    std::string verdict = ok ? "agree" : "DISAGREE";
    if (stable &&
        exact["weyl_ct"].get<std::int64_t>() != exact["series_dim"].get<std::int64_t>()) {
        ok = false;
        verdict = "DISAGREE (weyl vs series)";
    }
    report["verdict"] = verdict;
    std::cout << report.dump(g.json_out ? -1 : 2) << "\n";
    return ok ? 0 : 1;
}

int run_theorem_check(int trials, const GlobalOptions& g,
                      const std::vector<std::string>& vars) {
    if (vars.empty())
        throw std::domain_error("theorem-check needs --ring laurent:<vars>");
    auto report = run_theorem_trials(vars, trials, g.degree, g.seed);
    if (g.json_out) {
        std::cout << json{{"trials", report.trials},
                          {"degree_bound", g.degree},
                          {"counterexamples", report.counterexamples},
                          {"first_failure", report.first_failure}}
                  << "\n";
    } else {
        std::cout << "trials: " << report.trials << ", degree bound: " << g.degree
                  << ", counterexamples: " << report.counterexamples << "\n";
        if (!report.first_failure.empty())
            std::cout << report.first_failure << "\n";
    }
    return report.counterexamples == 0 ? 0 : 1;
}

template <AdamsScalar C>
void run_moments(const std::string& rv_path, bool negative, bool check,
                 const GlobalOptions& g) {
    auto x = random_variable_from_json<C>(read_json_input(rv_path));
    if (check) {
        auto r = theorem_negation_check(x, g.degree);
        if (g.json_out) {
            json j{{"ok", r.ok}};
            if (!r.ok) {
                j["first_diff"] = r.first_diff->parts();
                j["lhs"] = ring_traits<C>::to_string(r.lhs);
                j["rhs"] = ring_traits<C>::to_string(r.rhs);
            }
            std::cout << j << "\n";
        } else {
            std::cout << (r.ok ? "negation identity holds"
                               : "negation identity FAILS at m_" + r.first_diff->str())
                      << "\n";
        }
        return;
    }
    SymSeries<C> f = negative ? neg_sigma_mgf_direct(x, g.degree) : sigma_mgf(x, g.degree);
    emit_result(EvalResult<C>{f, false}, g);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric power series engine with invariant-theory oracles"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global flags after the subcommand name

    GlobalOptions g;
    app.add_option("-D,--degree", g.degree, "series degree bound")->capture_default_str();
    app.add_option("--ring", g.ring, "coefficient ring: Q or laurent:<v1,v2,...>")
        ->capture_default_str();
    app.add_option("--basis", g.basis, "output basis: m|e|h|p|s")->capture_default_str();
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo sample count")
        ->capture_default_str();

    std::string expr_src, input = "-", rv_path, group_s = "O", tau_s = "[]", kind_s = "ext";
    int n = 2, trials = 50;
    bool unstable = false, oracle_checks = false, neg = false, check = false;

    auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
    cmd_eval->add_option("expr", expr_src, "expression source")->required();

    auto* cmd_convert =
        app.add_subcommand("convert", "re-render a JSON series in another basis");
    cmd_convert->add_option("-i,--input", input, "series JSON file, or - for stdin");

    auto* cmd_inv = app.add_subcommand("invariant", "stable invariant dimension");
    cmd_inv->add_option("--group", group_s, "O or Sp")->required();
    cmd_inv->add_option("-n", n, "rank of the standard representation")->required();
    cmd_inv->add_option("--tau", tau_s, "partition, e.g. [2,1]")->required();
    cmd_inv->add_option("--kind", kind_s, "ext or sym")->capture_default_str();
    cmd_inv->add_flag("--unstable", unstable,
                      "return the raw series coefficient outside the stable range "
                      "(not a dimension there)");
    cmd_inv->add_flag("--oracle-checks", oracle_checks, "attach oracle comparisons");

    auto* cmd_oracle = app.add_subcommand("oracle", "cross-oracle comparison report");
    cmd_oracle->add_option("--group", group_s, "O or Sp")->required();
    cmd_oracle->add_option("-n", n, "rank")->required();
    cmd_oracle->add_option("--tau", tau_s, "partition")->required();
    cmd_oracle->add_option("--kind", kind_s, "ext or sym")->capture_default_str();

    auto* cmd_thm =
        app.add_subcommand("theorem-check", "randomized negation-identity check");
    cmd_thm->add_option("--trials", trials, "number of random variables")
        ->capture_default_str();

    auto* cmd_moments =
        app.add_subcommand("moments", "sigma-moment generating function of a "
                                      "JSON random variable");
    cmd_moments->add_option("--rv", rv_path, "random variable JSON file")->required();
    cmd_moments->add_flag("--neg", neg, "negative mgf, computed directly");
    cmd_moments->add_flag("--check", check, "run the negation identity check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad command line is a syntax error
    }

    try {
        check_degree(g);
        auto vars = laurent_vars(g.ring);
        if (cmd_eval->parsed()) {
            if (is_laurent(g.ring))
                run_eval<lsym::LaurentScalar>(expr_src, g, vars);
            else
                run_eval<lsym::Rational>(expr_src, g, vars);
        } else if (cmd_convert->parsed()) {
            if (is_laurent(g.ring))
                run_convert<lsym::LaurentScalar>(input, g);
            else
                run_convert<lsym::Rational>(input, g);
        } else if (cmd_inv->parsed()) {
            auto rec = invariant_record(parse_group(group_s), n, parse_partition(tau_s),
                                        parse_power_kind(kind_s), unstable,
                                        oracle_checks, g);
            if (g.json_out)
                std::cout << rec << "\n";
            else
                std::cout << rec.dump(2) << "\n";
        } else if (cmd_oracle->parsed()) {
            return run_oracle(parse_group(group_s), n, parse_partition(tau_s),
                              parse_power_kind(kind_s), g);
        } else if (cmd_thm->parsed()) {
            return run_theorem_check(trials, g, vars);
        } else if (cmd_moments->parsed()) {
            if (is_laurent(g.ring))
                run_moments<lsym::LaurentScalar>(rv_path, neg, check, g);
            else
                run_moments<lsym::Rational>(rv_path, neg, check, g);
        }
    } catch (const lsym::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
