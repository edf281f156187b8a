// Copyright 2026 The qptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qptlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "qptlab/dla.hpp"
#include "qptlab/mwis.hpp"
#include "qptlab/otoc.hpp"
#include "qptlab/parallel.hpp"
#include "qptlab/qaa.hpp"
#include "qptlab/rng.hpp"

namespace qptlab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

auto record_key(const ExperimentRecord& r) {
    return std::tie(r.metric, r.grid, r.grid2, r.instance_seed);
}

void canonical_sort(std::vector<ExperimentRecord>& records) {
    std::sort(records.begin(), records.end(),
              [](const ExperimentRecord& a, const ExperimentRecord& b) {
                  return record_key(a) < record_key(b);
              });
}

}  // namespace

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::SatProb: return "satprob";
        case ExperimentKind::GradScan: return "gradscan";
        case ExperimentKind::Plateau: return "plateau";
        case ExperimentKind::DlaScan: return "dlascan";
        case ExperimentKind::Otoc: return "otoc";
        case ExperimentKind::QaoaSolve: return "qaoa-solve";
        case ExperimentKind::Qaa: return "qaa";
        case ExperimentKind::Mwis: return "mwis";
    }
    return "?";
}

ExperimentKind parse_experiment(const std::string& name) {
    for (ExperimentKind k :
         {ExperimentKind::SatProb, ExperimentKind::GradScan, ExperimentKind::Plateau,
          ExperimentKind::DlaScan, ExperimentKind::Otoc, ExperimentKind::QaoaSolve,
          ExperimentKind::Qaa, ExperimentKind::Mwis})
        if (experiment_name(k) == name) return k;
    throw std::invalid_argument("unknown experiment: " + name);
}

void validate(const SweepConfig& cfg) {
    if (cfg.n < 1 || cfg.instances < 1 || cfg.p < 1 || cfg.reps < 1)
        throw std::invalid_argument("config: counts must be >= 1");
    if (cfg.k != 2 && cfg.k != 3) throw std::invalid_argument("config: k must be 2 or 3");
    if (cfg.ratios.empty()) throw std::invalid_argument("config: empty ratio grid");
    if (!std::is_sorted(cfg.ratios.begin(), cfg.ratios.end()))
        throw std::invalid_argument("config: ratio grid must be sorted");
}

std::string canonical_config_text(const SweepConfig& cfg) {
    std::ostringstream out;
    out << "experiment=" << experiment_name(cfg.kind) << "\n";
    out << "n=" << cfg.n << "\nk=" << cfg.k << "\n";
    out << "mode=" << (cfg.mode == SatMode::KSat ? "ksat" : "oneink") << "\n";
    out << "ratios=";
    for (size_t i = 0; i < cfg.ratios.size(); ++i)
        out << (i ? "," : "") << fmt_double(cfg.ratios[i]);
    out << "\np=" << cfg.p << "\np_grid=";
    for (size_t i = 0; i < cfg.p_grid.size(); ++i) out << (i ? "," : "") << cfg.p_grid[i];
    out << "\nn_grid=";
    for (size_t i = 0; i < cfg.n_grid.size(); ++i) out << (i ? "," : "") << cfg.n_grid[i];
    out << "\ninstances=" << cfg.instances << "\nseed=" << cfg.seed << "\n";
    out << "reps=" << cfg.reps << "\neth=" << fmt_double(cfg.e_th) << "\n";
    out << "ta=" << fmt_double(cfg.total_time) << "\nsamples=" << cfg.samples << "\n";
    out << "init=" << (cfg.init.kind == InitStrategy::Random ? "random" : "preopt")
        << "\nmax_steps=" << cfg.max_steps << "\n";
    return out.str();
}

uint64_t config_hash(const SweepConfig& cfg) {
    // FNV-1a, 64 bit.
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : canonical_config_text(cfg)) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

namespace {

struct SweepContext {
    const SweepConfig& cfg;
    uint64_t hash;
    std::set<std::tuple<std::string, double, double, uint64_t>> done;
    std::vector<ExperimentRecord> out;

    bool skip(const std::string& metric, double grid, double grid2,
              uint64_t inst_seed) const {
        return done.count({metric, grid, grid2, inst_seed}) != 0;
    }
    void add(std::string metric, double grid, double grid2, uint64_t inst_seed,
             double value, double std_err = kNan, double wall = 0) {
        out.push_back({hash, inst_seed, grid, grid2, std::move(metric), value,
                       std_err, wall});
    }
};

void run_satprob(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    for (size_t g = 0; g < cfg.ratios.size(); ++g) {
        double ratio = cfg.ratios[g];
        int m = static_cast<int>(std::lround(ratio * cfg.n));
        std::vector<double> sat(cfg.instances, -1.0);
        std::vector<uint64_t> seeds(cfg.instances);
        parallel_for(cfg.instances, [&](size_t i) {
            seeds[i] = derive_seed(cfg.seed, g, i);
            if (ctx.skip("sat", ratio, 0, seeds[i])) return;
            SatInstance inst = generate_instance(cfg.n, m, cfg.k, cfg.mode, seeds[i]);
            sat[i] = is_satisfiable(inst) ? 1.0 : 0.0;
        });
        for (int i = 0; i < cfg.instances; ++i)
            if (sat[i] >= 0) ctx.add("sat", ratio, 0, seeds[i], sat[i]);
    }
}

void run_gradscan(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    auto points = grad_sd_scan(cfg.n, cfg.k, cfg.mode, cfg.ratios, cfg.p,
                               cfg.instances, cfg.samples, cfg.seed);
    for (size_t g = 0; g < points.size(); ++g) {
        const GradSdPoint& pt = points[g];
        ctx.add("mean_inv_sd", pt.ratio, cfg.p, 0, pt.mean_inv_sd);
        ctx.add("inv_mean_sd", pt.ratio, cfg.p, 0, pt.inv_mean_sd);
        ctx.add("mean_sd", pt.ratio, cfg.p, 0, pt.mean_sd);
        for (size_t i = 0; i < pt.instance_sds.size(); ++i)
            ctx.add("grad_sd", pt.ratio, cfg.p, derive_seed(cfg.seed, g, i),
                    pt.instance_sds[i]);
    }
}

void run_plateau(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    std::vector<int> p_grid = cfg.p_grid.empty() ? std::vector<int>{cfg.p} : cfg.p_grid;
    std::vector<int> n_grid = cfg.n_grid.empty() ? std::vector<int>{cfg.n} : cfg.n_grid;
    auto points = barren_plateau_scan(cfg.k, cfg.mode, cfg.ratios.front(), p_grid,
                                      n_grid, cfg.instances, cfg.samples, cfg.seed);
    for (const PlateauPoint& pt : points)
        ctx.add("mean_sd", pt.n, pt.p, 0, pt.mean_sd, pt.se_mean_sd);
}

void run_dlascan(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    auto points = dla_scan(cfg.n, cfg.k, cfg.mode, cfg.ratios, cfg.instances, cfg.seed);
    for (size_t g = 0; g < points.size(); ++g) {
        ctx.add("mean_dim", points[g].ratio, 0, 0, points[g].mean_dim);
        for (size_t i = 0; i < points[g].dims.size(); ++i)
            ctx.add("dim", points[g].ratio, 0, derive_seed(cfg.seed, g, i),
                    points[g].dims[i]);
    }
}

void run_otoc(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    std::vector<int> p_grid = cfg.p_grid.empty() ? std::vector<int>{cfg.p} : cfg.p_grid;
    auto points = otoc_ensemble(cfg.n, cfg.k, cfg.mode, cfg.ratios, p_grid,
                                cfg.instances, cfg.samples, cfg.seed);
    for (const OtocPoint& pt : points)
        ctx.add("mean_otoc", pt.ratio, pt.p, 0, pt.mean_otoc, pt.std_err);
}

void run_qaoa_solve(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    StopRule stop;
    stop.max_steps = cfg.max_steps;
    for (size_t g = 0; g < cfg.ratios.size(); ++g) {
        double ratio = cfg.ratios[g];
        int m = static_cast<int>(std::lround(ratio * cfg.n));
        struct Row {
            uint64_t seed;
            bool skipped = true;
            AccuracyReport rep;
            double greedy_ratio = kNan;
            double wall = 0;
        };
        std::vector<Row> rows(cfg.instances);
        parallel_for(cfg.instances, [&](size_t i) {
            Row& row = rows[i];
            row.seed = derive_seed(cfg.seed, g, i);
            if (ctx.skip("approx_ratio", ratio, cfg.p, row.seed)) return;
            double t0 = now_seconds();
            SatInstance inst = generate_instance(cfg.n, m, cfg.k, cfg.mode, row.seed);
            CostHamiltonian ham = build_cost_hamiltonian(inst);
            SolveResult res =
                solve_with_repetitions(ham, inst, cfg.p, cfg.reps, cfg.init, stop,
                                       cfg.e_th, derive_seed(row.seed, 7, 0));
            row.rep = res.report;
            if (cfg.mode == SatMode::OneInKSatPlus) {
                WeightedGraph graph = reduce_to_mwis(ham.table);
                MwisResult opt = brute_force_mwis(graph);
                row.greedy_ratio =
                    opt.weight > 0 ? best_greedy(graph).best_weight / opt.weight : 1.0;
            }
            row.wall = now_seconds() - t0;
            row.skipped = false;
        });
        for (const Row& row : rows) {
            if (row.skipped) continue;
            ctx.add("approx_ratio", ratio, cfg.p, row.seed, row.rep.approx_ratio,
                    kNan, row.wall);
            ctx.add("expected_violations", ratio, cfg.p, row.seed,
                    row.rep.expected_violations);
            ctx.add("success", ratio, cfg.p, row.seed, row.rep.success ? 1.0 : 0.0);
            if (!std::isnan(row.greedy_ratio))
                ctx.add("greedy_ratio", ratio, cfg.p, row.seed, row.greedy_ratio);
        }
    }
}

void run_qaa(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    auto points = qaa_scan(cfg.n, cfg.k, cfg.mode, cfg.ratios, cfg.total_time,
                           cfg.instances, cfg.seed);
    for (const QaaPoint& pt : points) {
        ctx.add("median_inv_gap_sq", pt.ratio, 0, 0, pt.median_inv_gap_sq);
        ctx.add("median_inv_gap_sq_sat", pt.ratio, 0, 0, pt.median_inv_gap_sq_sat);
        ctx.add("median_inv_gap_sq_unsat", pt.ratio, 0, 0, pt.median_inv_gap_sq_unsat);
        ctx.add("mean_success", pt.ratio, 0, 0, pt.mean_success);
        ctx.add("n_sat", pt.ratio, 0, 0, pt.n_sat);
    }
}

void run_mwis(SweepContext& ctx) {
    const SweepConfig& cfg = ctx.cfg;
    if (cfg.mode != SatMode::OneInKSatPlus)
        throw std::invalid_argument("mwis sweep requires the one-in-k mode");
    for (size_t g = 0; g < cfg.ratios.size(); ++g) {
        double ratio = cfg.ratios[g];
        int m = static_cast<int>(std::lround(ratio * cfg.n));
        struct Row {
            uint64_t seed;
            bool skipped = true;
            double greedy = 0, opt = 0;
        };
        std::vector<Row> rows(cfg.instances);
        parallel_for(cfg.instances, [&](size_t i) {
            Row& row = rows[i];
            row.seed = derive_seed(cfg.seed, g, i);
            if (ctx.skip("greedy_weight", ratio, 0, row.seed)) return;
            SatInstance inst = generate_instance(cfg.n, m, cfg.k, cfg.mode, row.seed);
            WeightedGraph graph = reduce_to_mwis(build_cost_hamiltonian(inst).table);
            row.greedy = best_greedy(graph).best_weight;
            row.opt = brute_force_mwis(graph).weight;
            row.skipped = false;
        });
        for (const Row& row : rows) {
            if (row.skipped) continue;
            ctx.add("greedy_weight", ratio, 0, row.seed, row.greedy);
            ctx.add("mwis_weight", ratio, 0, row.seed, row.opt);
            ctx.add("greedy_ratio", ratio, 0, row.seed,
                    row.opt > 0 ? row.greedy / row.opt : 1.0);
        }
    }
}

}  // namespace

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    SweepContext ctx{cfg, config_hash(cfg)};

    std::vector<ExperimentRecord> persisted;
    if (!cfg.out_path.empty()) {
        std::ifstream in(cfg.out_path);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            for (ExperimentRecord& r : parse_records_csv(buf.str()))
                if (r.config_hash == ctx.hash) {
                    ctx.done.insert({r.metric, r.grid, r.grid2, r.instance_seed});
                    persisted.push_back(std::move(r));
                }
        }
    }

    switch (cfg.kind) {
        case ExperimentKind::SatProb: run_satprob(ctx); break;
        case ExperimentKind::GradScan: run_gradscan(ctx); break;
        case ExperimentKind::Plateau: run_plateau(ctx); break;
        case ExperimentKind::DlaScan: run_dlascan(ctx); break;
        case ExperimentKind::Otoc: run_otoc(ctx); break;
        case ExperimentKind::QaoaSolve: run_qaoa_solve(ctx); break;
        case ExperimentKind::Qaa: run_qaa(ctx); break;
        case ExperimentKind::Mwis: run_mwis(ctx); break;
    }

    std::vector<ExperimentRecord> records = std::move(persisted);
    for (ExperimentRecord& r : ctx.out)
        if (!ctx.done.count({r.metric, r.grid, r.grid2, r.instance_seed}))
            records.push_back(std::move(r));
    canonical_sort(records);
    if (!cfg.out_path.empty()) write_outputs(cfg, records);
    return records;
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records) {
    std::map<std::tuple<std::string, double, double>, std::vector<double>> groups;
    for (const ExperimentRecord& r : records)
        groups[{r.metric, r.grid, r.grid2}].push_back(r.value);
    std::vector<SummaryRow> out;
    for (auto& [key, values] : groups) {
        SummaryRow row;
        row.metric = std::get<0>(key);
        row.grid = std::get<1>(key);
        row.grid2 = std::get<2>(key);
        row.count = static_cast<int>(values.size());
        double mean = 0;
        for (double v : values) mean += v;
        mean /= values.size();
        row.mean = mean;
        std::sort(values.begin(), values.end());
        size_t mid = values.size() / 2;
        row.median = values.size() % 2 ? values[mid]
                                       : 0.5 * (values[mid - 1] + values[mid]);
        if (values.size() > 1) {
            double var = 0;
            for (double v : values) var += (v - mean) * (v - mean);
            var /= (values.size() - 1);
            row.sd = std::sqrt(var);
            row.std_err = row.sd / std::sqrt(static_cast<double>(values.size()));
        } else {
            row.sd = kNan;
            row.std_err = kNan;
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    out << "config_hash,instance_seed,grid,grid2,metric,value,std_err,wall_time\n";
    for (const ExperimentRecord& r : records)
        out << r.config_hash << "," << r.instance_seed << "," << fmt_double(r.grid)
            << "," << fmt_double(r.grid2) << "," << r.metric << ","
            << fmt_double(r.value) << "," << fmt_double(r.std_err) << ","
            << fmt_double(r.wall_time) << "\n";
    return out.str();
}

std::vector<ExperimentRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<ExperimentRecord> out;
    bool first = true;
    while (std::getline(in, line)) {
        if (first || line.empty()) {
            first = false;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 8)
            throw std::runtime_error("parse_records_csv: malformed row: " + line);
        ExperimentRecord r;
        r.config_hash = std::stoull(fields[0]);
        r.instance_seed = std::stoull(fields[1]);
        r.grid = std::stod(fields[2]);
        r.grid2 = std::stod(fields[3]);
        r.metric = fields[4];
        r.value = std::stod(fields[5]);
        r.std_err = std::stod(fields[6]);
        r.wall_time = std::stod(fields[7]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_outputs(const SweepConfig& cfg,
                   const std::vector<ExperimentRecord>& records) {
    {
        std::ofstream out(cfg.out_path);
        if (!out) throw std::runtime_error("cannot open output: " + cfg.out_path);
        out << records_csv(records);
    }
    nlohmann::json side;
    side["config"] = canonical_config_text(cfg);
    side["config_hash"] = config_hash(cfg);
    side["records"] = records.size();
    side["format"] = "qptlab-csv-1";
    std::ofstream side_out(cfg.out_path + ".json");
    if (side_out) side_out << side.dump(2) << "\n";
}

}  // namespace qptlab
