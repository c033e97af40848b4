#include "revmax/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revmax/errors.hpp"
#include "revmax/myerson.hpp"
#include "revmax/rng.hpp"

namespace revmax {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// search streams live far away from sweep streams (instance i uses stream i)
constexpr std::uint64_t kSearchStreamBase = 1ULL << 32;

void validate_config(const ExperimentConfig& cfg, bool for_search) {
    if (cfg.num_instances < 0)
        throw validation_error("num_instances: must be >= 0");
    if (cfg.min_support < 1 || cfg.max_support < cfg.min_support)
        throw validation_error("support range: need 1 <= min <= max");
    if (!(cfg.value_range.second > cfg.value_range.first) || cfg.value_range.first < 0.0)
        throw validation_error("value_range: need 0 <= lo < hi");
    std::size_t worst_grid = static_cast<std::size_t>(cfg.max_support) *
                             static_cast<std::size_t>(cfg.max_support);
    if (worst_grid > cfg.grid_limit)
        throw validation_error("support range: max_support^2 = " +
                               std::to_string(worst_grid) + " exceeds grid_limit " +
                               std::to_string(cfg.grid_limit));
    if (cfg.alpha_window) {
        if (!(cfg.alpha_window->first >= 1.0) ||
            !(cfg.alpha_window->second >= cfg.alpha_window->first))
            throw validation_error("alpha_window: need 1 <= lo <= hi");
    }
    if (for_search && (cfg.restarts < 1 || cfg.steps < 0))
        throw validation_error("search: need restarts >= 1 and steps >= 0");
}

ProductInstance draw_instance(Rng& rng, const ExperimentConfig& cfg) {
    int n1 = rng.uniform_int(cfg.min_support, cfg.max_support);
    int n2 = rng.uniform_int(cfg.min_support, cfg.max_support);
    DiscreteDistribution d1 = random_distribution(rng, n1, cfg.value_range);
    DiscreteDistribution d2 = random_distribution(rng, n2, cfg.value_range);
    return {std::move(d1), std::move(d2)};
}

// report for an instance whose LP failed: item statistics are still known
BoundReport unsolved_report(const ProductInstance& inst) {
    BoundReport rep;
    double a = optimal_price(inst.d1).revenue;
    double b = optimal_price(inst.d2).revenue;
    rep.labels_swapped = a < b;
    rep.r1 = std::max(a, b);
    rep.r2 = std::min(a, b);
    rep.srev = rep.r1 + rep.r2;
    rep.emin = expected_min(inst.d1, inst.d2);
    rep.alpha = rep.r2 > 0.0 ? rep.r1 / rep.r2 : kNaN;
    rep.g_alpha = rep.r2 > 0.0 ? guarantee_factor(rep.alpha) : kNaN;
    rep.rev = kNaN;
    rep.theorem_slack = kNaN;
    rep.lemma1_slack = kNaN;
    rep.lemma2_slack = kNaN;
    rep.degenerate = rep.r2 <= 0.0;
    return rep;
}

std::string fmt_g(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::json dist_json(const DiscreteDistribution& d) {
    return nlohmann::json{{"values", d.values()}, {"probs", d.probs()}};
}

nlohmann::json record_json(const InstanceRecord& rec) {
    nlohmann::json j = nlohmann::json::parse(report_to_json(rec.report));
    j["instance_id"] = rec.instance_id;
    j["n1"] = rec.n1;
    j["n2"] = rec.n2;
    j["status"] = rec.status;
    j["ratio"] = std::isnan(rec.report.rev) || rec.report.srev <= 0.0
                     ? nlohmann::json()
                     : nlohmann::json(rec.report.ratio());
    j["d1"] = dist_json(rec.instance.d1);
    j["d2"] = dist_json(rec.instance.d2);
    return j;
}

void finalize_summary(SuiteSummary& s) {
    // alpha deciles over solved, non-degenerate records
    std::vector<const InstanceRecord*> usable;
    for (const auto& rec : s.records) {
        if (rec.status == "unsolved") continue;
        if (rec.report.degenerate) continue;
        usable.push_back(&rec);
        double ratio = rec.report.ratio();
        if (s.argmax_instance < 0 || ratio > s.max_ratio) {
            s.max_ratio = ratio;
            s.argmax_instance = rec.instance_id;
        }
    }
    std::sort(usable.begin(), usable.end(), [](const auto* a, const auto* b) {
        if (a->report.alpha != b->report.alpha) return a->report.alpha < b->report.alpha;
        return a->instance_id < b->instance_id;
    });
    std::size_t n = usable.size();
    for (std::size_t k = 0; k < 10 && n > 0; ++k) {
        std::size_t lo = k * n / 10, hi = (k + 1) * n / 10;
        if (lo >= hi) continue;
        SuiteSummary::AlphaBucket b;
        b.alpha_lo = usable[lo]->report.alpha;
        b.alpha_hi = usable[hi - 1]->report.alpha;
        b.count = static_cast<int>(hi - lo);
        b.max_ratio = usable[lo]->report.ratio();
        for (std::size_t i = lo; i < hi; ++i)
            b.max_ratio = std::max(b.max_ratio, usable[i]->report.ratio());
        s.alpha_deciles.push_back(b);
    }
}

}  // namespace

SuiteSummary run_random_suite(const ExperimentConfig& cfg) {
    validate_config(cfg, false);
    AnalyzeOptions opts;
    opts.lp.grid_limit = cfg.grid_limit;
    opts.lp.simplex.max_iterations = cfg.max_lp_iterations;
    opts.check_tol = cfg.check_tol;

    SuiteSummary out;
    out.records.reserve(static_cast<std::size_t>(cfg.num_instances));
    for (int i = 0; i < cfg.num_instances; ++i) {
        Rng rng = Rng::for_stream(cfg.seed, static_cast<std::uint64_t>(i));
        ProductInstance inst = draw_instance(rng, cfg);
        int n1 = static_cast<int>(inst.d1.size());
        int n2 = static_cast<int>(inst.d2.size());
        try {
            BoundReport rep = analyze(inst, opts);
            std::string status = rep.degenerate ? "degenerate"
                                 : report_passes(rep, cfg.check_tol) ? "ok"
                                                                     : "violation";
            if (status == "violation") out.violating_ids.push_back(i);
            if (status == "degenerate") ++out.degenerate;
            else ++out.solved;
            out.records.push_back({i, n1, n2, rep, status, std::move(inst)});
        } catch (const lp_error&) {
            ++out.unsolved;
            BoundReport rep = unsolved_report(inst);
            out.records.push_back({i, n1, n2, rep, "unsolved", std::move(inst)});
        }
    }
    finalize_summary(out);
    return out;
}

SearchResult worst_case_search(const ExperimentConfig& cfg) {
    validate_config(cfg, true);
    AnalyzeOptions opts;
    opts.lp.grid_limit = cfg.grid_limit;
    opts.lp.simplex.max_iterations = cfg.max_lp_iterations;
    opts.check_tol = cfg.check_tol;

    SearchResult out;
    double best_ratio = -1.0;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng = Rng::for_stream(cfg.seed, kSearchStreamBase +
                                                static_cast<std::uint64_t>(restart));
        ProductInstance inst = draw_instance(rng, cfg);
        if (cfg.alpha_window) {
            // rescale item 2 so the starting ratio sits mid-window
            double target = 0.5 * (cfg.alpha_window->first + cfg.alpha_window->second);
            double ra = optimal_price(inst.d1).revenue;
            double rb = optimal_price(inst.d2).revenue;
            if (ra <= 0.0 || rb <= 0.0) {
                out.trajectories.emplace_back();
                continue;
            }
            inst.d2 = inst.d2.scaled(ra / (target * rb));
        }

        std::vector<double> traj;
        BoundReport current;
        try {
            current = analyze(inst, opts);
        } catch (const lp_error&) {
            ++out.unsolved;
            out.trajectories.emplace_back();
            continue;
        }
        if (current.degenerate) {
            out.trajectories.emplace_back();
            continue;
        }
        traj.push_back(current.ratio());

        for (int step = 0; step < cfg.steps; ++step) {
            int which = rng.uniform_int(0, 1);
            const DiscreteDistribution& src = which == 0 ? inst.d1 : inst.d2;
            int atom = rng.uniform_int(0, static_cast<int>(src.size()) - 1);
            const double factors[] = {1.10, 0.90, 1.01, 0.99};
            double factor = rng.pick(factors);

            std::vector<double> probs = src.probs();
            probs[static_cast<std::size_t>(atom)] *= factor;
            double sum = 0.0;
            for (double p : probs) sum += p;
            for (double& p : probs) p /= sum;

            ProductInstance trial{
                which == 0 ? make_distribution(src.values(), probs) : inst.d1,
                which == 0 ? inst.d2 : make_distribution(src.values(), probs)};

            BoundReport rep;
            try {
                rep = analyze(trial, opts);
            } catch (const lp_error&) {
                ++out.unsolved;
                continue;
            }
            if (rep.degenerate) continue;
            if (!report_passes(rep, cfg.check_tol))
                out.violations.emplace_back(restart, step);
            if (cfg.alpha_window && (rep.alpha < cfg.alpha_window->first ||
                                     rep.alpha > cfg.alpha_window->second))
                continue;
            if (rep.ratio() > current.ratio()) {
                inst = std::move(trial);
                current = rep;
                traj.push_back(current.ratio());
            }
        }
        out.trajectories.push_back(std::move(traj));
        if (current.ratio() > best_ratio) {
            best_ratio = current.ratio();
            out.best_instance = std::move(inst);
            out.best_report = current;
            out.best_restart = restart;
        }
    }
    return out;
}

void write_suite_csv(const SuiteSummary& s, std::ostream& os) {
    os << "instance_id,n1,n2,r1,r2,alpha,srev,rev,emin,g_alpha,theorem_slack,"
          "lemma1_slack,lemma2_slack,ratio,status\n";
    for (const auto& rec : s.records) {
        const BoundReport& r = rec.report;
        double ratio = (std::isnan(r.rev) || r.srev <= 0.0) ? kNaN : r.ratio();
        os << rec.instance_id << ',' << rec.n1 << ',' << rec.n2 << ',' << fmt_g(r.r1)
           << ',' << fmt_g(r.r2) << ',' << fmt_g(r.alpha) << ',' << fmt_g(r.srev)
           << ',' << fmt_g(r.rev) << ',' << fmt_g(r.emin) << ',' << fmt_g(r.g_alpha)
           << ',' << fmt_g(r.theorem_slack) << ',' << fmt_g(r.lemma1_slack) << ','
           << fmt_g(r.lemma2_slack) << ',' << fmt_g(ratio) << ',' << rec.status
           << '\n';
    }
}

namespace {

nlohmann::json config_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["seed"] = cfg.seed;
    j["num_instances"] = cfg.num_instances;
    j["min_support"] = cfg.min_support;
    j["max_support"] = cfg.max_support;
    j["value_range"] = {cfg.value_range.first, cfg.value_range.second};
    if (cfg.alpha_window)
        j["alpha_window"] = {cfg.alpha_window->first, cfg.alpha_window->second};
    j["grid_limit"] = cfg.grid_limit;
    j["check_tol"] = cfg.check_tol;
    return j;
}

}  // namespace

std::string suite_to_json(const SuiteSummary& s, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["summary"] = {{"solved", s.solved},
                    {"degenerate", s.degenerate},
                    {"unsolved", s.unsolved},
                    {"violations", s.violating_ids},
                    {"max_ratio", s.argmax_instance < 0 ? nlohmann::json()
                                                        : nlohmann::json(s.max_ratio)},
                    {"argmax_instance", s.argmax_instance}};
    auto& deciles = j["summary"]["alpha_deciles"] = nlohmann::json::array();
    for (const auto& b : s.alpha_deciles)
        deciles.push_back({{"alpha_lo", b.alpha_lo},
                           {"alpha_hi", b.alpha_hi},
                           {"max_ratio", b.max_ratio},
                           {"count", b.count}});
    auto& arr = j["instances"] = nlohmann::json::array();
    for (const auto& rec : s.records) arr.push_back(record_json(rec));
    return j.dump(2);
}

std::string search_to_json(const SearchResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["config"] = config_json(cfg);
    j["config"]["restarts"] = cfg.restarts;
    j["config"]["steps"] = cfg.steps;
    j["unsolved"] = r.unsolved;
    j["violations"] = nlohmann::json::array();
    for (auto [restart, step] : r.violations)
        j["violations"].push_back({{"restart", restart}, {"step", step}});
    j["trajectories"] = r.trajectories;
    if (r.best_instance) {
        j["best"] = nlohmann::json::parse(report_to_json(r.best_report));
        j["best"]["ratio"] = r.best_report.ratio();
        j["best"]["restart"] = r.best_restart;
        j["best"]["d1"] = dist_json(r.best_instance->d1);
        j["best"]["d2"] = dist_json(r.best_instance->d2);
    } else {
        j["best"] = nullptr;
    }
    return j.dump(2);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw validation_error("output: cannot open " + tmp.string());
        out << content;
        if (!out) throw validation_error("output: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void save_suite(const SuiteSummary& s, const ExperimentConfig& cfg) {
    if (cfg.output_path.empty()) return;
    if (cfg.format == ExperimentConfig::Format::csv) {
        std::ostringstream os;
        write_suite_csv(s, os);
        write_file_atomic(cfg.output_path, os.str());
    } else {
        write_file_atomic(cfg.output_path, suite_to_json(s, cfg) + "\n");
    }
}

void save_search(const SearchResult& r, const ExperimentConfig& cfg) {
    if (cfg.output_path.empty()) return;
    write_file_atomic(cfg.output_path, search_to_json(r, cfg) + "\n");
}

}  // namespace revmax
