// Copyright 2026 The tgate Authors
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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tgate/numerics.h"

namespace tgate {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights. Odd indices
// are the 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    Complex value;
    double error;
};

struct LargerErrorFirst {
    bool operator()(const Panel &x, const Panel &y) const {
        if (x.error != y.error) {
            return x.error < y.error;
        }
        return x.a > y.a;
    }
};

Complex checked_eval(const std::function<Complex(double)> &f, double t) {
    Complex v = f(t);
    if (!is_finite(v)) {
        throw Error(
            ErrorCode::InvalidArgument, "integrand is not finite at t = " + std::to_string(t));
    }
    return v;
}

Panel evaluate_panel(const std::function<Complex(double)> &f, double a, double b) {
    double centre = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    Complex f_centre = checked_eval(f, centre);
    Complex kronrod = kKronrodWeights[7] * f_centre;
    Complex gauss = kGaussWeights[3] * f_centre;
    for (int j = 0; j < 7; j++) {
        double dx = half * kKronrodNodes[j];
        Complex pair = checked_eval(f, centre - dx) + checked_eval(f, centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    kronrod *= half;
    gauss *= half;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

QuadratureResult summarize(std::vector<Panel> panels) {
    std::sort(panels.begin(), panels.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
    QuadratureResult result;
    for (const auto &p : panels) {
        result.value += p.value;
        result.abs_error_estimate += p.error;
    }
    result.panels_used = static_cast<int>(panels.size());
    return result;
}

}  // namespace

QuadratureResult integrate_adaptive(
    const std::function<Complex(double)> &f, double a, double b, const QuadratureOptions &options) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw Error(ErrorCode::InvalidArgument, "integration requires finite a < b");
    }
    if (!(options.tol > 0) || options.max_panels < 1 || !(options.max_panel_width > 0)) {
        throw Error(ErrorCode::InvalidArgument, "integration requires tol > 0, max_panels >= 1 and a positive panel width");
    }

    double initial = std::ceil((b - a) / options.max_panel_width);
    if (initial > options.max_panels) {
        throw Error(
            ErrorCode::InvalidArgument,
            "panel budget " + std::to_string(options.max_panels) + " cannot cover the interval at the requested panel width");
    }
    int n_initial = std::max(1, static_cast<int>(initial));

    // Max-heap on error estimate; ties broken by position for determinism.
    std::vector<Panel> heap;
    heap.reserve(options.max_panels);
    LargerErrorFirst order;
    double total_error = 0;
    for (int i = 0; i < n_initial; i++) {
        double lo = a + (b - a) * i / n_initial;
        double hi = i + 1 == n_initial ? b : a + (b - a) * (i + 1) / n_initial;
        heap.push_back(evaluate_panel(f, lo, hi));
        total_error += heap.back().error;
    }
    std::make_heap(heap.begin(), heap.end(), order);

    while (true) {
        if (total_error <= options.tol) {
            return summarize(heap);
        }
        if (static_cast<int>(heap.size()) + 1 > options.max_panels) {
            QuadratureResult r = summarize(heap);
            throw ToleranceNotMet<QuadratureResult>(
                "quadrature panel budget of " + std::to_string(options.max_panels) +
                    " exhausted with error estimate " + std::to_string(r.abs_error_estimate),
                r);
        }
        std::pop_heap(heap.begin(), heap.end(), order);
        Panel worst = heap.back();
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        heap.push_back(evaluate_panel(f, worst.a, mid));
        std::push_heap(heap.begin(), heap.end(), order);
        heap.push_back(evaluate_panel(f, mid, worst.b));
        std::push_heap(heap.begin(), heap.end(), order);
        total_error = 0;
        for (const auto &p : heap) {
            total_error += p.error;
        }
    }
}

QuadratureResult integrate_adaptive(const std::function<Complex(double)> &f, double a, double b, double tol) {
    QuadratureOptions options;
    options.tol = tol;
    return integrate_adaptive(f, a, b, options);
}

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; i++) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double derivative = 0;
        for (int iter = 0; iter < 100; iter++) {
            double p_prev = 1;
            double p = x;
            for (int k = 2; k <= n; k++) {
                double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
                p_prev = p;
                p = p_next;
            }
            derivative = n * (x * p - p_prev) / (x * x - 1);
            double dx = p / derivative;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        double w = 2 / ((1 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0;
    }
    return rule;
}

}  // namespace tgate
