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

#include "gtest/gtest.h"
#include "test_util.h"
#include "tgate/beams.h"
#include "tgate/numerics.h"

using namespace tgate;
using tgate_test::code_of;
using tgate_test::rel_err;

namespace {

BeamGeometry reference_beam(double angle = std::numbers::pi / 2) {
    return make_beam(20e-6, 313e-9, angle);
}

}  // namespace

TEST(beam_geometry, derived_fields) {
    BeamGeometry b = reference_beam();
    EXPECT_EQ(b.wavenumber(), 2 * std::numbers::pi / 313e-9);
    EXPECT_EQ(b.rayleigh_range(), b.wavenumber() * b.waist * b.waist / 2);
    EXPECT_EQ(reference_beam(0.3).delta_k_z(), 2 * b.wavenumber() * std::cos(0.3));
    EXPECT_EQ(make_beam(20e-6, 313e-9, 0.3, BeamConfiguration::CoPropagating).delta_k_z(), 0);
    EXPECT_EQ(code_of([] { make_beam(0, 313e-9, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { make_beam(1e-6, -1, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { make_beam(1e-6, 313e-9, 4); }), ErrorCode::InvalidArgument);
}

TEST(field_amplitude, profile) {
    BeamGeometry b = reference_beam();
    EXPECT_EQ(field_amplitude(b, 0, 0), 1);
    EXPECT_LT(rel_err(field_amplitude(b, b.waist, 0), std::exp(-1.0)), 1e-15);
    EXPECT_LT(rel_err(field_amplitude(b, 2.6 * b.waist, 0), std::exp(-6.76)), 1e-14);
    EXPECT_NEAR(field_amplitude(b, 2.6 * b.waist, 0), 1.16e-3, 0.005e-3);
    double previous = 2;
    for (double r = 0; r < 5 * b.waist; r += b.waist / 20) {
        double a = field_amplitude(b, r, 1e-6);
        EXPECT_LT(a, previous);
        EXPECT_EQ(a, field_amplitude(b, -r, 1e-6));
        previous = a;
    }
}

TEST(field_amplitude, paraxial_domain) {
    BeamGeometry b = reference_beam();
    double zr = b.rayleigh_range();
    EXPECT_NO_THROW(field_amplitude(b, 0, 0.099 * zr));
    EXPECT_EQ(code_of([&] { field_amplitude(b, 0, 0.1 * zr); }), ErrorCode::ParaxialDomain);
    EXPECT_EQ(code_of([&] { field_amplitude(b, 0, -2 * zr); }), ErrorCode::ParaxialDomain);
    EXPECT_NO_THROW(field_amplitude(b, 0, 0.3 * zr, 0.5));
}

TEST(envelope, transit_time) {
    BeamGeometry b = reference_beam();
    TransitEnvelope env = envelope(b, 25, 1e6);
    EXPECT_NEAR(env.tau, 0.566e-6, 0.001e-6);
    EXPECT_LT(rel_err(env.tau, 20e-6 / (std::sqrt(2.0) * 25)), 1e-15);
    EXPECT_LT(rel_err(envelope(b, 50, 1e6).tau, env.tau / 2), 1e-15);
    EXPECT_EQ(env.rabi_at(0), 1e6);
    EXPECT_LT(rel_err(env.rabi_at(env.tau), 1e6 / std::exp(1.0)), 1e-15);
    EXPECT_LT(rel_err(env.rabi_at(-env.tau), 1e6 / std::exp(1.0)), 1e-15);
    for (double g = 0.2; g < 3; g += 0.2) {
        EXPECT_GE(envelope(reference_beam(g), 25, 1e6).tau, env.tau);
    }
    EXPECT_EQ(transit_time(b, 25, TransitConvention::Text), env.tau);
    EXPECT_EQ(transit_time(b, 25, TransitConvention::Table), env.tau / 2);
}

TEST(envelope, errors) {
    EXPECT_EQ(code_of([] { envelope(reference_beam(0), 25, 1e6); }), ErrorCode::DegenerateGeometry);
    EXPECT_EQ(code_of([] { envelope(reference_beam(std::numbers::pi), 25, 1e6); }), ErrorCode::DegenerateGeometry);
    EXPECT_EQ(code_of([] { envelope(reference_beam(), 0, 1e6); }), ErrorCode::InvalidArgument);
}

TEST(envelope, area_matches_quadrature) {
    TransitEnvelope env = envelope(reference_beam(1.1), 7.5, 2 * std::numbers::pi * 3e5);
    QuadratureOptions options;
    options.tol = 1e-12 * env.peak_rabi * env.tau;
    auto r = integrate_adaptive([&](double t) { return Complex(env.rabi_at(t), 0); }, -9 * env.tau, 9 * env.tau, options);
    EXPECT_LT(rel_err(r.value.real(), env.peak_rabi * env.tau * std::sqrt(std::numbers::pi)), 1e-10);
}
