// Command-line front end: single-item pricing, two-item bound analysis,
// random sweeps, worst-case ratio search, and a raw LP solver.
//
// Exit codes (stable, scripts rely on them):
//   0  success
//   1  a bound check failed (slack below -tolerance)
//   2  input/validation error
//   3  excessive solver failures

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "revmax/bounds.hpp"
#include "revmax/errors.hpp"
#include "revmax/harness.hpp"
#include "revmax/lp.hpp"
#include "revmax/myerson.hpp"

namespace {

using namespace revmax;

std::string fmt_g(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

int run_myerson(const std::string& dist_path, const std::string& format) {
    DiscreteDistribution d = load_distribution(dist_path);
    MyersonResult res = optimal_price(d);
    if (format == "json") {
        nlohmann::json j;
        j["price"] = res.price;
        j["revenue"] = res.revenue;
        j["argmax_prices"] = res.argmax_prices;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "price=" << fmt_g(res.price) << " revenue=" << fmt_g(res.revenue)
                  << " argmax=";
        for (std::size_t i = 0; i < res.argmax_prices.size(); ++i)
            std::cout << (i ? "," : "") << fmt_g(res.argmax_prices[i]);
        std::cout << "\n";
    }
    return 0;
}

int run_analyze(const std::string& d1_path, const std::string& d2_path,
                std::size_t grid_limit, double tol, const std::string& format,
                const std::string& dump_path) {
    ProductInstance inst{load_distribution(d1_path), load_distribution(d2_path)};
    if (!dump_path.empty()) {
        LinearProgram lp = build_revenue_lp(inst, grid_limit);
        write_file_atomic(dump_path, dump_lp(lp, revenue_lp_var_names(inst)));
    }
    AnalyzeOptions opts;
    opts.lp.grid_limit = grid_limit;
    opts.check_tol = tol;
    BoundReport rep = analyze(inst, opts);
    bool ok = report_passes(rep, tol);

    if (format == "json") {
        std::cout << report_to_json(rep) << "\n";
    } else {
        std::cout << "r1=" << fmt_g(rep.r1) << " r2=" << fmt_g(rep.r2)
                  << " alpha=" << fmt_g(rep.alpha) << " srev=" << fmt_g(rep.srev)
                  << " rev=" << fmt_g(rep.rev) << " emin=" << fmt_g(rep.emin)
                  << " g_alpha=" << fmt_g(rep.g_alpha) << "\n";
        std::cout << "theorem_slack=" << fmt_g(rep.theorem_slack)
                  << " lemma1_slack=" << fmt_g(rep.lemma1_slack)
                  << " lemma2_slack=" << fmt_g(rep.lemma2_slack)
                  << " ratio=" << fmt_g(rep.srev > 0 ? rep.ratio() : NAN) << "\n";
        if (rep.degenerate)
            std::cout << "degenerate instance (r2=0): ratio-based checks skipped\n";
        std::cout << (ok ? "all checks passed" : "BOUND VIOLATION") << "\n";
    }
    return ok ? 0 : 1;
}

ExperimentConfig shared_config(std::uint64_t seed, int min_support, int max_support,
                               const std::pair<double, double>& value_range,
                               std::size_t grid_limit, double tol,
                               const std::string& out, const std::string& format) {
    ExperimentConfig cfg;
    cfg.seed = seed;
    cfg.min_support = min_support;
    cfg.max_support = max_support;
    cfg.value_range = value_range;
    cfg.grid_limit = grid_limit;
    cfg.check_tol = tol;
    cfg.output_path = out;
    cfg.format = format == "json" ? ExperimentConfig::Format::json
                                  : ExperimentConfig::Format::csv;
    return cfg;
}

int run_sweep(ExperimentConfig cfg) {
    SuiteSummary s = run_random_suite(cfg);
    save_suite(s, cfg);

    std::cout << "instances=" << cfg.num_instances << " solved=" << s.solved
              << " degenerate=" << s.degenerate << " unsolved=" << s.unsolved
              << " violations=" << s.violating_ids.size() << "\n";
    if (s.argmax_instance >= 0)
        std::cout << "max_ratio=" << fmt_g(s.max_ratio) << " at instance "
                  << s.argmax_instance << "\n";
    for (const auto& b : s.alpha_deciles)
        std::cout << "alpha [" << fmt_g(b.alpha_lo) << ", " << fmt_g(b.alpha_hi)
                  << "] n=" << b.count << " max_ratio=" << fmt_g(b.max_ratio) << "\n";
    if (!s.violating_ids.empty()) {
        std::cerr << "bound violations at instances:";
        for (int id : s.violating_ids) std::cerr << " " << id;
        std::cerr << "\n";
        return 1;
    }
    if (10 * s.unsolved > cfg.num_instances) {
        std::cerr << "more than 10% of instances unsolved (" << s.unsolved << "/"
                  << cfg.num_instances << ")\n";
        return 3;
    }
    return 0;
}

int run_search(ExperimentConfig cfg) {
    SearchResult r = worst_case_search(cfg);
    save_search(r, cfg);

    if (!r.violations.empty()) {
        std::cerr << "bound violations during search (restart,step):";
        for (auto [restart, step] : r.violations)
            std::cerr << " (" << restart << "," << step << ")";
        std::cerr << "\n";
        return 1;
    }
    if (!r.best_instance) {
        std::cerr << "search failed: no restart produced a solvable instance\n";
        return 3;
    }
    const BoundReport& rep = r.best_report;
    std::cout << "best_ratio=" << fmt_g(rep.ratio()) << " alpha=" << fmt_g(rep.alpha)
              << " rev=" << fmt_g(rep.rev) << " srev=" << fmt_g(rep.srev)
              << " g_alpha=" << fmt_g(rep.g_alpha) << " restart=" << r.best_restart
              << "\n";
    std::cout << "d1=" << distribution_to_json(r.best_instance->d1) << "\n";
    std::cout << "d2=" << distribution_to_json(r.best_instance->d2) << "\n";
    return 0;
}

LinearProgram lp_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("lp json: ") + e.what());
    }
    try {
        LinearProgram lp;
        int num_vars = j.at("num_vars").get<int>();
        auto objective = j.at("objective").get<std::vector<double>>();
        if (static_cast<int>(objective.size()) != num_vars)
            throw validation_error("lp json: objective length != num_vars");
        for (int v = 0; v < num_vars; ++v) {
            double lo = 0.0, hi = LinearProgram::infinity();
            if (j.contains("bounds")) {
                const auto& b = j.at("bounds").at(static_cast<std::size_t>(v));
                lo = b.at(0).is_null() ? -LinearProgram::infinity() : b.at(0).get<double>();
                hi = b.at(1).is_null() ? LinearProgram::infinity() : b.at(1).get<double>();
            }
            lp.add_variable(lo, hi, objective[static_cast<std::size_t>(v)]);
        }
        for (const auto& c : j.value("constraints", nlohmann::json::array())) {
            LinearConstraint::Relation rel;
            std::string r = c.at("relation").get<std::string>();
            if (r == "<=") rel = LinearConstraint::Relation::less_equal;
            else if (r == ">=") rel = LinearConstraint::Relation::greater_equal;
            else if (r == "=") rel = LinearConstraint::Relation::equal;
            else throw validation_error("lp json: unknown relation " + r);
            std::vector<std::pair<int, double>> coeffs;
            for (const auto& t : c.at("coeffs"))
                coeffs.emplace_back(t.at(0).get<int>(), t.at(1).get<double>());
            lp.add_constraint(std::move(coeffs), rel, c.at("rhs").get<double>());
        }
        return lp;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("lp json: ") + e.what());
    }
}

int run_lp_solve(const std::string& lp_path, const std::string& format, bool dump) {
    std::ifstream in(lp_path);
    if (!in) throw validation_error("file: cannot open " + lp_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    LinearProgram lp = lp_from_json(buf.str());
    if (dump) std::cout << dump_lp(lp);
    LpSolution sol = solve_lp(lp);
    if (format == "json") {
        nlohmann::json j;
        j["status"] = to_string(sol.status);
        if (sol.status == LpStatus::optimal) {
            j["objective_value"] = sol.objective_value;
            j["assignment"] = sol.assignment;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "status=" << to_string(sol.status);
        if (sol.status == LpStatus::optimal) {
            std::cout << " objective=" << fmt_g(sol.objective_value) << " x=";
            for (std::size_t i = 0; i < sol.assignment.size(); ++i)
                std::cout << (i ? "," : "") << fmt_g(sol.assignment[i]);
        }
        std::cout << "\n";
    }
    return 0;
}

// comma-separated pair for --value-range / --alpha-window
std::pair<double, double> parse_pair(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw validation_error(std::string(what) + ": expected LO,HI");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw validation_error(std::string(what) + ": expected LO,HI");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal two-item revenue versus separate sale, exactly, on discrete distributions"};
    app.require_subcommand(1);

    std::string dist_path, d1_path, d2_path, out_path, dump_path, lp_path;
    std::string format = "human";
    std::string value_range_s = "0,10", alpha_window_s;
    std::uint64_t seed = 0;
    int count = 200, min_support = 1, max_support = 8;
    int restarts = 20, steps = 200;
    std::size_t grid_limit = 200;
    double tol = 1e-7;
    bool dump = false;

    auto* myerson = app.add_subcommand("myerson", "optimal posted price for one item");
    myerson->add_option("--dist", dist_path, "distribution JSON file")->required();
    myerson->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    auto* analyze = app.add_subcommand("analyze", "full bound report for a pair of items");
    analyze->add_option("--d1", d1_path, "item 1 distribution JSON")->required();
    analyze->add_option("--d2", d2_path, "item 2 distribution JSON")->required();
    analyze->add_option("--grid-limit", grid_limit, "max product-support size");
    analyze->add_option("--tolerance", tol, "check tolerance");
    analyze->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));
    analyze->add_option("--dump-lp", dump_path, "write the revenue LP in plain text");

    auto* sweep = app.add_subcommand("sweep", "analyze a seeded suite of random instances");
    sweep->add_option("--seed", seed, "RNG seed");
    sweep->add_option("--count", count, "number of instances")->required();
    sweep->add_option("--min-support", min_support);
    sweep->add_option("--max-support", max_support);
    sweep->add_option("--value-range", value_range_s, "LO,HI");
    sweep->add_option("--grid-limit", grid_limit);
    sweep->add_option("--tolerance", tol);
    long max_lp_iterations = 0;
    sweep->add_option("--max-lp-iterations", max_lp_iterations,
                      "simplex iteration cap (0: default)");
    sweep->add_option("--out", out_path, "report file");
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* search = app.add_subcommand("search", "hill-climb for large rev/srev ratios");
    search->add_option("--seed", seed, "RNG seed");
    search->add_option("--alpha-window", alpha_window_s, "LO,HI revenue-ratio window");
    search->add_option("--restarts", restarts);
    search->add_option("--steps", steps);
    search->add_option("--min-support", min_support);
    int search_max_support = 5;
    search->add_option("--max-support", search_max_support);
    search->add_option("--value-range", value_range_s, "LO,HI");
    search->add_option("--grid-limit", grid_limit);
    search->add_option("--tolerance", tol);
    search->add_option("--out", out_path, "result JSON file");

    auto* lp_solve = app.add_subcommand("lp-solve", "solve a maximization LP from JSON");
    lp_solve->add_option("--lp", lp_path, "LP JSON file")->required();
    lp_solve->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));
    lp_solve->add_flag("--dump", dump, "print the LP in plain text before solving");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // parse failures are input errors
    }

    try {
        if (*myerson) return run_myerson(dist_path, format);
        if (*analyze) return run_analyze(d1_path, d2_path, grid_limit, tol, format, dump_path);
        if (*sweep) {
            ExperimentConfig cfg =
                shared_config(seed, min_support, max_support,
                              parse_pair(value_range_s, "value-range"), grid_limit, tol,
                              out_path, format.empty() ? "csv" : format);
            if (format == "human") cfg.format = ExperimentConfig::Format::csv;
            cfg.num_instances = count;
            cfg.max_lp_iterations = max_lp_iterations;
            return run_sweep(cfg);
        }
        if (*search) {
            ExperimentConfig cfg =
                shared_config(seed, min_support, search_max_support,
                              parse_pair(value_range_s, "value-range"), grid_limit, tol,
                              out_path, "json");
            if (!alpha_window_s.empty())
                cfg.alpha_window = parse_pair(alpha_window_s, "alpha-window");
            cfg.restarts = restarts;
            cfg.steps = steps;
            return run_search(cfg);
        }
        if (*lp_solve) return run_lp_solve(lp_path, format, dump);
    } catch (const validation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const size_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const lp_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
