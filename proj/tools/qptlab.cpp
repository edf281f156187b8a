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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qptlab/harness.hpp"

namespace {

// "a:b:step" inclusive range (half-step endpoint slack) or a comma list.
std::vector<double> parse_ratios(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double a, b, step;
        char c1, c2;
        std::istringstream in(text);
        if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' ||
            step <= 0 || b < a)
            throw CLI::ValidationError("--ratios", "expected a:b:step with step > 0");
        for (double v = a; v <= b + step / 2; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

void apply_config_line(qptlab::SweepConfig& cfg, const std::string& key,
                       const std::string& value) {
    using qptlab::SatMode;
    if (key == "experiment") cfg.kind = qptlab::parse_experiment(value);
    else if (key == "n") cfg.n = std::stoi(value);
    else if (key == "k") cfg.k = std::stoi(value);
    else if (key == "mode")
        cfg.mode = value == "ksat" ? SatMode::KSat : SatMode::OneInKSatPlus;
    else if (key == "ratios") cfg.ratios = parse_ratios(value);
    else if (key == "p") cfg.p = std::stoi(value);
    else if (key == "p_grid") cfg.p_grid = parse_int_list(value);
    else if (key == "n_grid") cfg.n_grid = parse_int_list(value);
    else if (key == "instances") cfg.instances = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "out") cfg.out_path = value;
    else if (key == "reps") cfg.reps = std::stoi(value);
    else if (key == "eth") cfg.e_th = std::stod(value);
    else if (key == "ta") cfg.total_time = std::stod(value);
    else if (key == "samples") cfg.samples = std::stoi(value);
    else if (key == "init")
        cfg.init.kind = value == "preopt" ? qptlab::InitStrategy::PreOptimized
                                          : qptlab::InitStrategy::Random;
    else if (key == "max_steps") cfg.max_steps = std::stoi(value);
    else throw std::runtime_error("config file: unknown key '" + key + "'");
}

void load_config_file(qptlab::SweepConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config file line " + std::to_string(line_no) +
                                     ": expected key=value");
        apply_config_line(cfg, line.substr(start, eq - start), line.substr(eq + 1));
    }
}

void print_summary(const std::vector<qptlab::ExperimentRecord>& records) {
    std::printf("%-24s %10s %8s %6s %14s %14s %12s\n", "metric", "grid", "grid2",
                "count", "mean", "median", "std_err");
    for (const qptlab::SummaryRow& row : qptlab::summarize(records))
        std::printf("%-24s %10.4g %8.4g %6d %14.6g %14.6g %12.4g\n",
                    row.metric.c_str(), row.grid, row.grid2, row.count, row.mean,
                    row.median, row.std_err);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qptlab: SAT phase-transition experiments on a QAOA/QAA simulator"};
    app.require_subcommand(0, 1);

    qptlab::SweepConfig cfg;
    // Empty string sentinels: an unset flag leaves the config-file value alone.
    std::string ratios_text, p_grid_text, n_grid_text, init_text;
    std::string config_path;
    std::string mode_text;

    app.add_option("--config", config_path,
                   "key=value config file mirroring all flags");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of variables");
        sub->add_option("--k", cfg.k, "clause arity (2 or 3)");
        sub->add_option("--mode", mode_text, "ksat | oneink");
        sub->add_option("--ratios", ratios_text, "m/n grid: a:b:step or list");
        sub->add_option("--p", cfg.p, "circuit depth");
        sub->add_option("--p-grid", p_grid_text, "comma list of depths");
        sub->add_option("--n-grid", n_grid_text, "comma list of sizes (plateau)");
        sub->add_option("--instances", cfg.instances, "instances per grid point");
        sub->add_option("--seed", cfg.seed, "master seed");
        sub->add_option("--out", cfg.out_path, "CSV output path");
        sub->add_option("--reps", cfg.reps, "training repetitions");
        sub->add_option("--eth", cfg.e_th, "decision threshold");
        sub->add_option("--ta", cfg.total_time, "anneal time");
        sub->add_option("--samples", cfg.samples, "parameter samples per instance");
        sub->add_option("--init", init_text, "random | preopt");
        sub->add_option("--max-steps", cfg.max_steps, "optimizer step cap");
    };
    for (const char* name : {"satprob", "gradscan", "plateau", "dlascan", "otoc",
                             "qaoa-solve", "qaa", "mwis"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (!app.get_subcommands().empty())
            cfg.kind = qptlab::parse_experiment(app.get_subcommands()[0]->get_name());
        else if (config_path.empty())
            throw std::runtime_error("choose an experiment subcommand or --config");
        if (!ratios_text.empty()) cfg.ratios = parse_ratios(ratios_text);
        if (!p_grid_text.empty()) cfg.p_grid = parse_int_list(p_grid_text);
        if (!n_grid_text.empty()) cfg.n_grid = parse_int_list(n_grid_text);
        if (!mode_text.empty())
            cfg.mode = mode_text == "oneink" ? qptlab::SatMode::OneInKSatPlus
                                             : qptlab::SatMode::KSat;
        if (!init_text.empty())
            cfg.init.kind = init_text == "preopt" ? qptlab::InitStrategy::PreOptimized
                                                  : qptlab::InitStrategy::Random;

        std::vector<qptlab::ExperimentRecord> records = qptlab::run_sweep(cfg);
        std::fprintf(stderr, "%s: %zu records (config %016llx)%s%s\n",
                     qptlab::experiment_name(cfg.kind).c_str(), records.size(),
                     static_cast<unsigned long long>(qptlab::config_hash(cfg)),
                     cfg.out_path.empty() ? "" : " -> ",
                     cfg.out_path.c_str());
        print_summary(records);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
