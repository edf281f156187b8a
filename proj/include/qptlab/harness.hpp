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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qptlab/qaoa.hpp"
#include "qptlab/sat.hpp"

namespace qptlab {

enum class ExperimentKind {
    SatProb,
    GradScan,
    Plateau,
    DlaScan,
    Otoc,
    QaoaSolve,
    Qaa,
    Mwis,
};

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

struct SweepConfig {
    ExperimentKind kind = ExperimentKind::SatProb;
    int n = 10;
    int k = 3;
    SatMode mode = SatMode::KSat;
    std::vector<double> ratios;
    int p = 1;
    std::vector<int> p_grid;      // plateau / otoc sweeps
    std::vector<int> n_grid;      // plateau sweeps
    int instances = 100;
    uint64_t seed = 1;
    std::string out_path;

    int reps = 10;                // qaoa-solve repetitions
    double e_th = 0.5;            // decision threshold on expected violations
    double total_time = 50.0;     // qaa anneal time
    int samples = 100;            // parameter draws (gradscan/plateau/otoc)
    InitStrategy init;            // qaoa-solve initialization
    int max_steps = 10000;
};

void validate(const SweepConfig& cfg);

/// Stable 64-bit FNV-1a hash of the canonical config text; identical across
/// platforms for identical configs.
std::string canonical_config_text(const SweepConfig& cfg);
uint64_t config_hash(const SweepConfig& cfg);

struct ExperimentRecord {
    uint64_t config_hash = 0;
    uint64_t instance_seed = 0;
    double grid = 0;             // ratio, or the axis value of the sweep
    double grid2 = 0;            // secondary axis (p or n) when present
    std::string metric;
    double value = 0;
    double std_err = 0;          // NaN when undefined for the record
    double wall_time = 0;
};

/// Runs the configured sweep and returns records in canonical order
/// (metric, grid, grid2, instance_seed). With a non-empty out_path the
/// records are also written as CSV plus a JSON sidecar; records already
/// present in an existing CSV with the same config hash are skipped and
/// merged back (crash-safe resume).
std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg);

struct SummaryRow {
    std::string metric;
    double grid = 0;
    double grid2 = 0;
    int count = 0;
    double mean = 0;
    double median = 0;
    double sd = 0;
    double std_err = 0;
};

/// Per (metric, grid, grid2) statistics; order-invariant in the input.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

std::string records_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> parse_records_csv(const std::string& text);
void write_outputs(const SweepConfig& cfg,
                   const std::vector<ExperimentRecord>& records);

}  // namespace qptlab
