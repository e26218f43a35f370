// Copyright 2026 The stabgs Authors
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

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace stabgs {

enum class Observable { Energies, Fidelities, Entropy, Tangles, Magic, Varjz, Hf };

Observable parse_observable(const std::string& name);
const std::vector<std::string>& observable_names();

/// Grid of vbar values: log-spaced unless `linear`. A single point returns {min}.
std::vector<double> vbar_grid(double min, double max, int points, bool linear);

struct SweepSpec {
    std::vector<int> n;
    std::vector<double> chi;
    std::vector<double> vbar;
    std::set<Observable> observables;
    int jobs = 1;

    /// Every observable, with magic only when all N fit the dense Pauli sum.
    static std::set<Observable> default_observables(const std::vector<int>& n);
    void validate() const;
};

struct SweepRecord {
    int n = 0;
    double chi = 0;
    double vbar = 0;
    // Columns after (N, chi, vbar), in CSV order; nullopt is an empty field.
    std::vector<std::optional<double>> values;
    std::string error;  // non-empty when the grid point failed
};

const std::vector<std::string>& sweep_columns();

SweepRecord sweep_point(int n, double chi, double vbar, const std::set<Observable>& obs);

/// Rows ordered by N, chi, vbar regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Value of a named column, or nullopt when empty.
std::optional<double> column(const SweepRecord& r, const std::string& name);

/// %.12g, the CSV number format.
std::string format_number(double x);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& rows);
void write_json(std::ostream& out, const std::vector<SweepRecord>& rows);

}  // namespace stabgs
