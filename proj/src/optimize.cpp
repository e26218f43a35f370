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

#include "stabgs/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace stabgs {

Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol, int max_iter) {
    if (!(b >= a)) throw std::invalid_argument("golden_section: empty bracket");
    static const double kInvPhi = (std::sqrt(5.0) - 1) / 2;
    Minimum best{a, f(a)};
    auto consider = [&best](double x, double fx) {
        if (fx < best.f) best = {x, fx};
    };
    const double fb = f(b);
    consider(b, fb);
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    consider(c, fc);
    consider(d, fd);
    for (int it = 0; b - a > tol; ++it) {
        if (it == max_iter) {
            throw OptimizationError("golden_section: no convergence after " + std::to_string(max_iter) + " iterations",
                                    best);
        }
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return best;
}

Minimum scan_refine(const std::function<double(double)>& f, double lo, double hi, int points, double tol) {
    if (points < 2) throw std::invalid_argument("scan_refine: need at least two grid points");
    const double step = (hi - lo) / (points - 1);
    int best_i = 0;
    double best_f = f(lo);
    for (int i = 1; i < points; ++i) {
        const double fx = f(lo + i * step);
        if (fx < best_f) {
            best_f = fx;
            best_i = i;
        }
    }
    Minimum grid{lo + best_i * step, best_f};
    const double a = lo + std::max(best_i - 1, 0) * step;
    const double b = lo + std::min(best_i + 1, points - 1) * step;
    Minimum refined = golden_section(f, a, b, tol);
    return refined.f < grid.f ? refined : grid;
}

}  // namespace stabgs
