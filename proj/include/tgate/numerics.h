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

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "tgate/error.h"

namespace tgate {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Largest |Im z| (and |p| for erfi_real) accepted before e^{y^2} factors
/// are considered unsafe to expose unscaled.
inline constexpr double kErfStripHalfWidth = 12.0;

/// Real error function. Exactly odd.
double erf_real(double x);

/// Imaginary error function erfi(p) = -i erf(ip), for |p| <= 12.
/// Throws OverflowDomain outside that range.
double erfi_real(double p);

/// e^{-p^2} erfi(p) evaluated without intermediate overflow (twice Dawson's
/// integral over sqrt(pi)). Defined for all finite p by odd extension; tends to
/// 1/(p sqrt(pi)) for large p.
double erfi_scaled(double p);

/// Complex error function on the strip |Im z| <= 12.
///
/// Satisfies erf(conj z) = conj(erf z) and erf(-z) = -erf(z) exactly, and
/// reduces exactly to erf_real on the real axis and to i*erfi_real on the
/// imaginary axis. Throws OverflowDomain outside the strip.
Complex erf_complex(Complex z);

struct QuadratureResult {
    Complex value;
    double abs_error_estimate = 0;
    int panels_used = 0;
};

struct QuadratureOptions {
    /// Absolute tolerance on the integral.
    double tol = 1e-12;
    int max_panels = 4096;
    /// Upper bound on any panel width. Set to one period for oscillatory
    /// integrands so no panel spans more than one oscillation.
    double max_panel_width = std::numeric_limits<double>::infinity();
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate is at most `tol`. Throws ToleranceNotMet<QuadratureResult> with the
/// best estimate when the panel budget runs out. Deterministic.
QuadratureResult integrate_adaptive(
    const std::function<Complex(double)> &f, double a, double b, const QuadratureOptions &options);
QuadratureResult integrate_adaptive(const std::function<Complex(double)> &f, double a, double b, double tol);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n);

}  // namespace tgate
