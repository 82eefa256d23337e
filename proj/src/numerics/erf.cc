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

#include <cmath>
#include <numbers>
#include <string>

#include "tgate/numerics.h"

namespace tgate {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kSeriesEps = 1e-17;

// Below this |p| the scaled erfi is formed from the power series; above it
// the asymptotic series has a smallest term below e^{-p^2} < 1e-21.
constexpr double kScaledAsymptoticThreshold = 7.0;

void require_finite(double x, const char *what) {
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " requires a finite argument");
    }
}

// (2/sqrt(pi)) sum p^{2n+1} / (n! (2n+1)); all terms share the sign of p.
double erfi_power_series(double p) {
    double p2 = p * p;
    double term = p;
    double sum = p;
    for (int n = 1; n < 2000; n++) {
        term *= p2 / n;
        double contribution = term / (2 * n + 1);
        sum += contribution;
        if (std::abs(contribution) <= kSeriesEps * std::abs(sum)) {
            break;
        }
    }
    return kTwoOverSqrtPi * sum;
}

// e^{-p^2} erfi(p) ~ 1/(p sqrt(pi)) * sum (2k-1)!! / (2p^2)^k, truncated at
// the smallest term. Requires p >= kScaledAsymptoticThreshold.
double erfi_scaled_asymptotic(double p) {
    double inv_two_p2 = 0.5 / (p * p);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 10000; k++) {
        double next = term * (2 * k - 1) * inv_two_p2;
        if (next >= term) {
            break;
        }
        term = next;
        sum += term;
        if (term <= kSeriesEps * sum) {
            break;
        }
    }
    return sum * std::numbers::inv_sqrtpi / p;
}

// Maclaurin series of erf, used for |z| < 1 where cancellation is bounded
// by e^{|z|^2} < e.
Complex erf_taylor(Complex z) {
    Complex z2 = z * z;
    Complex term = z;
    Complex sum = z;
    for (int n = 1; n < 200; n++) {
        term *= -z2 / static_cast<double>(n);
        Complex contribution = term / static_cast<double>(2 * n + 1);
        sum += contribution;
        if (std::abs(contribution) <= kSeriesEps * std::abs(sum)) {
            break;
        }
    }
    return kTwoOverSqrtPi * sum;
}

// Exponentially convergent sampling series for erf(x + iy), x > 0, y >= 0:
//
//   erf(z) = erf(x) + e^{-x^2} (1 - e^{-2ixy}) / (2 pi x)
//          + (2/pi) sum_n e^{-n^2/4 - x^2} [2x - e^{-2ixy}(2x cosh ny - i n sinh ny)] / (n^2 + 4x^2)
//
// The cosh/sinh factors are folded into the Gaussian weights in log space,
// so nothing overflows anywhere on the strip. Terms beyond n = 2y + 14 are
// below e^{-49} relative to the peak term.
Complex erf_sampling_series(double x, double y) {
    double x2 = x * x;
    double two_xy = 2 * x * y;
    Complex rotation(std::cos(two_xy), -std::sin(two_xy));

    double s = std::sin(x * y);
    double gaussian = std::exp(-x2);
    Complex near_term = gaussian / (2 * std::numbers::pi * x) * Complex(2 * s * s, std::sin(two_xy));

    double plain_sum = 0;
    Complex rotated_sum = 0;
    int n_max = static_cast<int>(std::ceil(2 * y)) + 14;
    for (int n = 1; n <= n_max; n++) {
        double base = -0.25 * n * n - x2;
        double denom = n * n + 4 * x2;
        double ep = std::exp(n * y + base);
        double em = std::exp(-n * y + base);
        plain_sum += 2 * x * std::exp(base) / denom;
        rotated_sum += Complex(x * (ep + em), -0.5 * n * (ep - em)) / denom;
    }

    constexpr double kTwoOverPi = 2.0 * std::numbers::inv_pi;
    return erf_real(x) + near_term + kTwoOverPi * (plain_sum - rotation * rotated_sum);
}

}  // namespace

double erf_real(double x) {
    if (std::isnan(x)) {
        throw Error(ErrorCode::InvalidArgument, "erf_real requires a finite argument");
    }
    return std::copysign(std::erf(std::abs(x)), x);
}

double erfi_real(double p) {
    require_finite(p, "erfi_real");
    if (std::abs(p) > kErfStripHalfWidth) {
        throw Error(
            ErrorCode::OverflowDomain,
            "erfi_real(" + std::to_string(p) + ") is only exposed for |p| <= 12; use erfi_scaled");
    }
    if (p == 0) {
        return p;
    }
    return std::copysign(erfi_power_series(std::abs(p)), p);
}

double erfi_scaled(double p) {
    if (std::isnan(p)) {
        throw Error(ErrorCode::InvalidArgument, "erfi_scaled requires a finite argument");
    }
    if (std::isinf(p)) {
        return std::copysign(0.0, p);
    }
    double a = std::abs(p);
    double value;
    if (a == 0) {
        return p;
    } else if (a < kScaledAsymptoticThreshold) {
        value = std::exp(-a * a) * erfi_power_series(a);
    } else {
        value = erfi_scaled_asymptotic(a);
    }
    return std::copysign(value, p);
}

Complex erf_complex(Complex z) {
    if (!is_finite(z)) {
        throw Error(ErrorCode::InvalidArgument, "erf_complex requires a finite argument");
    }
    if (std::abs(z.imag()) > kErfStripHalfWidth) {
        throw Error(
            ErrorCode::OverflowDomain,
            "erf_complex requires |Im z| <= 12, got Im z = " + std::to_string(z.imag()));
    }

    bool flip_re = std::signbit(z.real());
    bool flip_im = std::signbit(z.imag());
    double x = std::abs(z.real());
    double y = std::abs(z.imag());

    Complex w;
    if (y == 0) {
        w = Complex(erf_real(x), 0.0);
    } else if (x == 0) {
        w = Complex(0.0, erfi_real(y));
    } else if (x * x + y * y < 1) {
        w = erf_taylor(Complex(x, y));
    } else {
        w = erf_sampling_series(x, y);
    }

    // erf(conj z) = conj erf(z);  erf(-conj z) = -conj erf(z).
    if (flip_im) {
        w = std::conj(w);
    }
    if (flip_re) {
        w = -std::conj(w);
    }
    return w;
}

}  // namespace tgate
