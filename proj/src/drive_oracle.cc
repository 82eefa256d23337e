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

#include "tgate/drive_oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tgate/error.h"

namespace tgate {

namespace {

constexpr int kOrder = 16;
constexpr int kMaxDepth = 60;
// Gaussian envelopes are integrated over +-8 tau; the rest is bounded analytically.
constexpr double kGaussianCutoff = 8.0;

struct Rule {
    std::array<double, kOrder> nodes;
    std::array<double, kOrder> weights;
    // cumulative[i][j]: weight of node j in the integral from -1 to node i.
    std::array<std::array<double, kOrder>, kOrder> cumulative;
};

// Legendre polynomials P_0..P_{n} at x.
std::array<double, kOrder + 1> legendre_values(double x) {
    std::array<double, kOrder + 1> p{};
    p[0] = 1;
    p[1] = x;
    for (int k = 1; k < kOrder; k++) {
        p[k + 1] = ((2 * k + 1) * x * p[k] - k * p[k - 1]) / (k + 1);
    }
    return p;
}

// Exact for polynomials of degree < kOrder: project onto P_k at the nodes,
// then integrate each P_k from -1 analytically.
const Rule &rule() {
    static const Rule r = [] {
        Rule out;
        GaussLegendreRule gl = gauss_legendre(kOrder);
        for (int i = 0; i < kOrder; i++) {
            out.nodes[i] = gl.nodes[i];
            out.weights[i] = gl.weights[i];
        }
        std::array<std::array<double, kOrder + 1>, kOrder> p_at_node;
        for (int j = 0; j < kOrder; j++) {
            p_at_node[j] = legendre_values(out.nodes[j]);
        }
        for (int i = 0; i < kOrder; i++) {
            double x = out.nodes[i];
            std::array<double, kOrder + 1> p = legendre_values(x);
            double integral_p[kOrder];
            integral_p[0] = x + 1;
            for (int k = 1; k < kOrder; k++) {
                double p_next = k + 1 <= kOrder ? p[k + 1] : 0;
                integral_p[k] = (p_next - p[k - 1]) / (2 * k + 1);
            }
            for (int j = 0; j < kOrder; j++) {
                double s = 0;
                for (int k = 0; k < kOrder; k++) {
                    s += (2 * k + 1) / 2.0 * p_at_node[j][k] * integral_p[k];
                }
                out.cumulative[i][j] = out.weights[j] * s;
            }
        }
        return out;
    }();
    return r;
}

struct PanelIncrement {
    Complex alpha;
    double phase = 0;
};

// Lagrange interpolation of the sampled envelope on the stencil starting at
// index first.
double lagrange(const SampledShape &s, size_t first, size_t count, double t) {
    double sum = 0;
    for (size_t j = first; j < first + count; j++) {
        double term = s.amplitudes[j];
        for (size_t m = first; m < first + count; m++) {
            if (m != j) {
                term *= (t - s.times[m]) / (s.times[j] - s.times[m]);
            }
        }
        sum += term;
    }
    return sum;
}

size_t stencil_size(const SampledShape &s) {
    return std::min<size_t>(4, s.times.size());
}

size_t stencil_start(const SampledShape &s, size_t interval) {
    size_t n = stencil_size(s);
    size_t first = interval == 0 ? 0 : interval - 1;
    return std::min(first, s.times.size() - n);
}

double sampled_value(const SampledShape &s, double t) {
    if (t < s.times.front() || t > s.times.back()) {
        return 0;
    }
    size_t upper = std::upper_bound(s.times.begin(), s.times.end(), t) - s.times.begin();
    size_t interval = upper == 0 ? 0 : std::min(upper - 1, s.times.size() - 2);
    return lagrange(s, stencil_start(s, interval), stencil_size(s), t);
}

// Disagreement of two neighbouring stencils at each interval midpoint, times
// the interval width: an estimate of the interpolation error in the integral.
double sampled_interpolation_error(const SampledShape &s) {
    size_t n = stencil_size(s);
    if (s.times.size() <= n) {
        return 0;
    }
    double total = 0;
    for (size_t i = 0; i + 1 < s.times.size(); i++) {
        double mid = (s.times[i] + s.times[i + 1]) / 2;
        size_t first = stencil_start(s, i);
        size_t alternative = first + n < s.times.size() && first + 1 <= i ? first + 1 : (first > 0 ? first - 1 : first);
        double diff = std::abs(lagrange(s, first, n, mid) - lagrange(s, alternative, n, mid));
        total += diff * (s.times[i + 1] - s.times[i]);
    }
    return total;
}

struct ShapeInfo {
    double support_lo;
    double support_hi;
    // Integral of |s(t)| over its support (approximate for sampled shapes).
    double area;
    // Smoothness scale used for the initial partition.
    double width;
    std::vector<double> kinks;
};

ShapeInfo shape_info(const EnvelopeShape &shape) {
    return std::visit(
        [](const auto &s) -> ShapeInfo {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianShape>) {
                double edge = kGaussianCutoff * s.tau;
                return {-edge, edge, s.tau * std::sqrt(std::numbers::pi), s.tau, {}};
            } else if constexpr (std::is_same_v<T, SquareShape>) {
                return {0, s.duration, s.duration, s.duration, {}};
            } else if constexpr (std::is_same_v<T, TriangularShape>) {
                return {-s.half_width, s.half_width, s.half_width, s.half_width, {0.0}};
            } else {
                double area = 0;
                for (size_t i = 0; i + 1 < s.times.size(); i++) {
                    area += 0.5 * (std::abs(s.amplitudes[i]) + std::abs(s.amplitudes[i + 1])) *
                            (s.times[i + 1] - s.times[i]);
                }
                double span = s.times.back() - s.times.front();
                return {s.times.front(), s.times.back(), area, span, s.times};
            }
        },
        shape);
}

// Integral of |s| outside [lo, hi] that the window [t0, t1] would include.
double gaussian_tail(const EnvelopeShape &shape, double t0, double t1, double lo, double hi) {
    const auto *g = std::get_if<GaussianShape>(&shape);
    if (g == nullptr) {
        return 0;
    }
    double tail = 0;
    double half_area = g->tau * std::sqrt(std::numbers::pi) / 2;
    if (t0 < lo) {
        tail += half_area * (std::erfc(-lo / g->tau) - std::erfc(-t0 / g->tau));
    }
    if (t1 > hi) {
        tail += half_area * (std::erfc(hi / g->tau) - std::erfc(t1 / g->tau));
    }
    return std::abs(tail);
}

std::vector<double> initial_grid(const Envelope &env, const ShapeInfo &info, double lo, double hi,
                                 const std::vector<double> &extra) {
    std::vector<double> cuts = {lo, hi};
    for (double k : info.kinks) {
        if (k > lo && k < hi) {
            cuts.push_back(k);
        }
    }
    for (double t : extra) {
        if (t > lo && t < hi) {
            cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double width = info.width;
    if (env.detuning != 0) {
        width = std::min(width, 2 * std::numbers::pi / std::abs(env.detuning));
    }
    std::vector<double> grid = {cuts.front()};
    for (size_t i = 0; i + 1 < cuts.size(); i++) {
        double a = cuts[i];
        double b = cuts[i + 1];
        int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
        for (int j = 1; j <= pieces; j++) {
            grid.push_back(j == pieces ? b : a + (b - a) * j / pieces);
        }
    }
    return grid;
}

class Accumulator {
   public:
    Accumulator(const Envelope &env, double alpha_tol_density, double phase_tol_density, int max_panels)
        : env_(env),
          alpha_tol_density_(alpha_tol_density),
          phase_tol_density_(phase_tol_density),
          max_panels_(max_panels) {
    }

    void run(double a, double b) {
        refine(a, b, evaluate(a, b), 0);
    }

    void emit(double t) {
        result.samples.push_back(OracleSample{t, alpha_, phase_});
    }

    OracleResult result;
    bool exhausted = false;

   private:
    Complex drive(double t) const {
        double s = shape_value(env_.shape, t);
        return env_.eta * env_.amplitude * s * std::polar(1.0, env_.detuning * t);
    }

    PanelIncrement evaluate(double a, double b) {
        const Rule &r = rule();
        double half = (b - a) / 2;
        double mid = (a + b) / 2;
        std::array<Complex, kOrder> f;
        for (int j = 0; j < kOrder; j++) {
            f[j] = drive(mid + half * r.nodes[j]);
        }
        PanelIncrement inc;
        for (int i = 0; i < kOrder; i++) {
            Complex local = 0;
            for (int j = 0; j < kOrder; j++) {
                local += r.cumulative[i][j] * f[j];
            }
            local *= half;
            inc.alpha += half * r.weights[i] * f[i];
            inc.phase += half * r.weights[i] * std::imag(std::conj(local) * f[i]);
        }
        result.panels++;
        return inc;
    }

    void accept(double t, const PanelIncrement &inc) {
        phase_ += std::imag(std::conj(alpha_) * inc.alpha) + inc.phase;
        alpha_ += inc.alpha;
        emit(t);
    }

    void refine(double a, double b, const PanelIncrement &whole, int depth) {
        double m = (a + b) / 2;
        PanelIncrement left = evaluate(a, m);
        PanelIncrement right = evaluate(m, b);
        Complex joined_alpha = left.alpha + right.alpha;
        double joined_phase = left.phase + right.phase + std::imag(std::conj(left.alpha) * right.alpha);
        double alpha_err = std::abs(joined_alpha - whole.alpha);
        double phase_err = std::abs(joined_phase - whole.phase);
        double width = b - a;
        bool converged = alpha_err <= alpha_tol_density_ * width && phase_err <= phase_tol_density_ * width;
        bool out_of_budget = result.panels + 2 > max_panels_ || depth >= kMaxDepth;
        if (converged || out_of_budget) {
            if (!converged) {
                exhausted = true;
            }
            result.alpha_error += alpha_err;
            result.phase_error += phase_err;
            accept(m, left);
            accept(b, right);
            return;
        }
        refine(a, m, left, depth + 1);
        refine(m, b, right, depth + 1);
    }

    const Envelope &env_;
    double alpha_tol_density_;
    double phase_tol_density_;
    int max_panels_;
    Complex alpha_ = 0;
    double phase_ = 0;
};

}  // namespace

void validate_envelope(const Envelope &env) {
    if (!is_finite(env.amplitude) || !std::isfinite(env.eta) || !std::isfinite(env.detuning)) {
        throw Error(ErrorCode::InvalidArgument, "envelope amplitude, eta and detuning must be finite");
    }
    std::visit(
        [](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            auto positive = [](double x, const char *what) {
                if (!(x > 0) || !std::isfinite(x)) {
                    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be positive and finite");
                }
            };
            if constexpr (std::is_same_v<T, GaussianShape>) {
                positive(s.tau, "Gaussian tau");
            } else if constexpr (std::is_same_v<T, SquareShape>) {
                positive(s.duration, "square pulse duration");
            } else if constexpr (std::is_same_v<T, TriangularShape>) {
                positive(s.half_width, "triangle half-width");
            } else {
                if (s.times.size() != s.amplitudes.size() || s.times.size() < 2) {
                    throw Error(ErrorCode::InvalidArgument, "sampled envelope needs at least 2 (t, amplitude) pairs");
                }
                for (size_t i = 0; i < s.times.size(); i++) {
                    if (!std::isfinite(s.times[i]) || !std::isfinite(s.amplitudes[i])) {
                        throw Error(ErrorCode::InvalidArgument, "sampled envelope values must be finite");
                    }
                    if (i > 0 && !(s.times[i] > s.times[i - 1])) {
                        throw Error(ErrorCode::InvalidArgument, "sampled envelope times must be strictly increasing");
                    }
                }
            }
        },
        env.shape);
}

double shape_value(const EnvelopeShape &shape, double t) {
    return std::visit(
        [t](const auto &s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GaussianShape>) {
                double x = t / s.tau;
                return std::exp(-x * x);
            } else if constexpr (std::is_same_v<T, SquareShape>) {
                return t >= 0 && t <= s.duration ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, TriangularShape>) {
                double x = std::abs(t) / s.half_width;
                return x < 1 ? 1 - x : 0.0;
            } else {
                return sampled_value(s, t);
            }
        },
        shape);
}

OracleResult integrate_displacement(const Envelope &env, double t0, double t1, const OracleOptions &options) {
    validate_envelope(env);
    if (std::isnan(t0) || std::isnan(t1) || !(t0 < t1)) {
        throw Error(ErrorCode::InvalidArgument, "integration window requires t0 < t1");
    }
    if (!(options.tol > 0) || options.max_panels < 2) {
        throw Error(ErrorCode::InvalidArgument, "oracle requires tol > 0 and max_panels >= 2");
    }
    for (double t : options.sample_times) {
        if (!(t >= t0 && t <= t1)) {
            throw Error(ErrorCode::InvalidArgument, "sample time " + std::to_string(t) + " lies outside the window");
        }
    }

    ShapeInfo info = shape_info(env.shape);
    double lo = std::max(t0, info.support_lo);
    double hi = std::min(t1, info.support_hi);
    double drive_scale = std::abs(env.eta * env.amplitude) * info.area;
    double tail = std::abs(env.eta * env.amplitude) * gaussian_tail(env.shape, t0, t1, lo, hi);
    double interpolation = 0;
    if (const auto *s = std::get_if<SampledShape>(&env.shape)) {
        interpolation = std::abs(env.eta * env.amplitude) * sampled_interpolation_error(*s);
    }

    std::vector<double> sample_times = options.sample_times;
    std::sort(sample_times.begin(), sample_times.end());

    double span = hi - lo;
    Accumulator acc(
        env,
        span > 0 ? options.tol * drive_scale / span : 0,
        span > 0 ? options.tol * drive_scale * drive_scale / span : 0,
        options.max_panels);
    acc.emit(std::isfinite(t0) ? t0 : std::min(lo, t1));

    for (double t : sample_times) {
        if (t > acc.result.samples.back().t && t < lo) {
            acc.emit(t);
        }
    }
    if (lo < hi) {
        if (lo > acc.result.samples.back().t) {
            acc.emit(lo);
        }
        std::vector<double> grid = initial_grid(env, info, lo, hi, sample_times);
        for (size_t i = 0; i + 1 < grid.size(); i++) {
            acc.run(grid[i], grid[i + 1]);
        }
    }
    double last = std::isfinite(t1) ? t1 : hi;
    for (double t : sample_times) {
        if (t > acc.result.samples.back().t && t > hi) {
            acc.emit(t);
        }
    }
    if (last > acc.result.samples.back().t) {
        acc.emit(last);
    }

    OracleResult result = std::move(acc.result);
    result.alpha_final = result.samples.back().alpha;
    result.phase_final = result.samples.back().phase;
    double peak = 0;
    for (const auto &s : result.samples) {
        peak = std::max(peak, std::abs(s.alpha));
    }
    result.alpha_error += tail + interpolation;
    result.phase_error += 2 * peak * (tail + interpolation);
    if (acc.exhausted) {
        throw ToleranceNotMet<OracleResult>(
            "time-ordered integration exhausted its panel budget of " + std::to_string(options.max_panels), result);
    }
    return result;
}

QuadratureResult fourier_displacement(const Envelope &env, double tol) {
    validate_envelope(env);
    if (!(tol > 0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
    ShapeInfo info = shape_info(env.shape);
    std::vector<double> grid = initial_grid(env, info, info.support_lo, info.support_hi, {});
    double total = info.support_hi - info.support_lo;
    double scale = std::abs(env.eta * env.amplitude);
    auto integrand = [&env](double t) { return shape_value(env.shape, t) * std::polar(1.0, env.detuning * t); };

    QuadratureResult sum;
    for (size_t i = 0; i + 1 < grid.size(); i++) {
        QuadratureOptions options;
        options.tol = tol * (info.area > 0 ? info.area : total) * (grid[i + 1] - grid[i]) / total;
        QuadratureResult piece = integrate_adaptive(integrand, grid[i], grid[i + 1], options);
        sum.value += piece.value;
        sum.abs_error_estimate += piece.abs_error_estimate;
        sum.panels_used += piece.panels_used;
    }
    double tail = gaussian_tail(
        env.shape, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), info.support_lo,
        info.support_hi);
    sum.value *= env.eta * env.amplitude;
    sum.abs_error_estimate = scale * (sum.abs_error_estimate + tail);
    return sum;
}

}  // namespace tgate
