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

#include <functional>
#include <stdexcept>
#include <string>

namespace stabgs {

struct Minimum {
    double x = 0;
    double f = 0;
};

/// Raised when a 1-D search runs out of iterations; carries the best point seen.
struct OptimizationError : std::runtime_error {
    OptimizationError(const std::string& what, Minimum best_so_far)
        : std::runtime_error(what), best(best_so_far) {}
    Minimum best;
};

/// Golden-section search on [a, b] until the bracket is narrower than `tol`.
/// Assumes f is unimodal on the bracket; returns the best point evaluated.
Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                       int max_iter = 500);

/// Evaluates f on `points` equally spaced nodes of [lo, hi], then refines the
/// best node with golden_section on its two neighbouring cells.
Minimum scan_refine(const std::function<double(double)>& f, double lo, double hi, int points, double tol = 1e-10);

}  // namespace stabgs
