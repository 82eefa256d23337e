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

#include <limits>
#include <variant>
#include <vector>

#include "tgate/numerics.h"

namespace tgate {

/// e^{-t^2/tau^2}.
struct GaussianShape {
    double tau = 1;
};

/// 1 on [0, duration], 0 elsewhere.
struct SquareShape {
    double duration = 1;
};

/// 1 - |t|/half_width on [-half_width, half_width], 0 elsewhere.
struct TriangularShape {
    double half_width = 1;
};

/// Relative amplitudes at strictly increasing times, interpolated with local
/// cubics and zero outside the sampled range.
struct SampledShape {
    std::vector<double> times;
    std::vector<double> amplitudes;
};

using EnvelopeShape = std::variant<GaussianShape, SquareShape, TriangularShape, SampledShape>;

/// Drive d alpha / dt = eta A0 s(t) e^{i delta t} for envelope shape s.
struct Envelope {
    EnvelopeShape shape;
    Complex amplitude;
    double eta = 1;
    double detuning = 0;
};

/// Validates shape parameters. Throws InvalidArgument.
void validate_envelope(const Envelope &env);

/// Shape factor s(t).
double shape_value(const EnvelopeShape &shape, double t);

struct OracleSample {
    double t = 0;
    Complex alpha;
    double phase = 0;
};

struct OracleResult {
    /// Time-ordered samples, starting at the beginning of the window with
    /// alpha = 0 and phase = 0.
    std::vector<OracleSample> samples;
    Complex alpha_final;
    double phase_final = 0;
    /// Absolute error estimates, including truncated tails and interpolation.
    double alpha_error = 0;
    double phase_error = 0;
    int panels = 0;
};

struct OracleOptions {
    /// Error target relative to the drive scale eta |A0| integral |s| dt for
    /// alpha and to its square for the phase.
    double tol = 1e-12;
    int max_panels = 1 << 16;
    /// Times at which samples are guaranteed to be reported.
    std::vector<double> sample_times;
};

/// Time-ordered evaluation of alpha(t) = integral of d alpha and
/// Phi(t) = Im integral alpha^* d alpha over [t0, t1].
///
/// Infinite bounds are clamped to the support of the envelope (+-8 tau for a
/// Gaussian) and the tail is added to the error estimate. Throws
/// ToleranceNotMet<OracleResult> if the panel budget runs out.
OracleResult integrate_displacement(const Envelope &env, double t0, double t1, const OracleOptions &options = {});

/// eta A0 integral s(t) e^{i delta t} dt over the whole envelope.
QuadratureResult fourier_displacement(const Envelope &env, double tol = 1e-13);

}  // namespace tgate
