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

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"
#include "tgate/phasegate.h"
#include "tgate/physics.h"

using namespace tgate;
using tgate_test::code_of;
using tgate_test::rel_err;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

TrapContext reference_trap() {
    return make_trap(find_species("Be9"), kTwoPi * 4e6);
}

double round_trip(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    double y = 0;
    std::from_chars(buf, r.ptr, y);
    return y;
}

}  // namespace

TEST(species, registry) {
    IonSpecies be = find_species("Be9");
    EXPECT_EQ(be.mass, 9 * constants::atomic_mass_unit);
    EXPECT_EQ(be.raman_wavelength, 313e-9);
    EXPECT_NEAR(be.hyperfine_wavelength(), 0.2398339664, 1e-9);
    EXPECT_NEAR(be.hyperfine_wavelength(), 0.24, 0.005);
    EXPECT_EQ(be.hyperfine_wavelength(), 2 * std::numbers::pi * constants::speed_of_light / be.qubit_splitting);
    EXPECT_EQ(find_species("Be9-atomic").mass, 9.0121831 * constants::atomic_mass_unit);
    EXPECT_EQ(code_of([] { find_species("Xx"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { make_species("bad", -1, 1, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { make_species("", 1, 1, 1); }), ErrorCode::InvalidArgument);
}

TEST(equilibrium_distance, reference_value) {
    TrapContext ctx = reference_trap();
    EXPECT_LT(rel_err(equilibrium_distance(ctx), 3.656287078584565e-6), 1e-12);
    EXPECT_NEAR(ctx.distance(), 3.66e-6, 0.005e-6);
    TrapContext atomic = make_trap(find_species("Be9-atomic"), kTwoPi * 4e6);
    EXPECT_LT(rel_err(atomic.distance(), 3.6546387543717315e-6), 1e-12);
}

TEST(equilibrium_distance, scaling) {
    TrapContext ctx = reference_trap();
    double d = ctx.distance();
    EXPECT_LT(rel_err(make_trap(ctx.species, 8 * ctx.omega_com).distance(), d / 4), 1e-14);
    IonSpecies heavy = ctx.species;
    heavy.mass *= 8;
    EXPECT_LT(rel_err(make_trap(heavy, ctx.omega_com).distance(), d / 2), 1e-14);

    double reference = d * std::pow(ctx.omega_com, 2.0 / 3);
    for (double scale = 1; scale <= 10; scale += 0.25) {
        TrapContext c = make_trap(ctx.species, scale * ctx.omega_com);
        EXPECT_LT(rel_err(c.distance() * std::pow(c.omega_com, 2.0 / 3), reference), 1e-12);
    }
}

TEST(trap_context, derived_fields) {
    TrapContext ctx = reference_trap();
    EXPECT_EQ(ctx.omega_stretch(), std::sqrt(3.0) * ctx.omega_com);
    double previous = INFINITY;
    for (double f = 1e6; f < 2e7; f *= 1.3) {
        double d = make_trap(ctx.species, kTwoPi * f).distance();
        EXPECT_LT(d, previous);
        previous = d;
    }
    EXPECT_EQ(code_of([&] { make_trap(ctx.species, 0); }), ErrorCode::InvalidArgument);
}

TEST(trap_context, serialization_round_trip) {
    TrapContext ctx = reference_trap();
    IonSpecies s = make_species(
        ctx.species.name, round_trip(ctx.species.mass), round_trip(ctx.species.qubit_splitting),
        round_trip(ctx.species.raman_wavelength));
    TrapContext copy = make_trap(s, round_trip(ctx.omega_com));
    EXPECT_EQ(copy.distance(), ctx.distance());
    EXPECT_EQ(copy.omega_stretch(), ctx.omega_stretch());
    EXPECT_EQ(copy.species.hyperfine_wavelength(), ctx.species.hyperfine_wavelength());
    for (Mode m : {Mode::Com, Mode::Stretch}) {
        EXPECT_EQ(mode_ground_extent(copy, m, 2), mode_ground_extent(ctx, m, 2));
    }
}

TEST(mode_ground_extent, values_and_scaling) {
    TrapContext ctx = reference_trap();
    double com = mode_ground_extent(ctx, Mode::Com, 2);
    double str = mode_ground_extent(ctx, Mode::Stretch, 2);
    EXPECT_LT(rel_err(com, 8.3780384938489e-9), 1e-12);
    EXPECT_NEAR(com, 8.37e-9, 0.01e-9);
    EXPECT_LT(rel_err(str, 9.0027882531502e-9), 1e-12);
    EXPECT_LT(rel_err(mode_ground_extent(ctx, Mode::Com, 1), 1.184833566408e-8), 1e-12);
    EXPECT_LT(rel_err(str / com, std::sqrt(2 / (2 * std::sqrt(3.0)) * 2)), 1e-14);

    TrapContext stiff = make_trap(ctx.species, 4 * ctx.omega_com);
    EXPECT_LT(rel_err(mode_ground_extent(stiff, Mode::Com, 2), com / 2), 1e-14);
    EXPECT_LT(rel_err(mode_ground_extent(stiff, Mode::Stretch, 2), str / 2), 1e-14);

    EXPECT_EQ(code_of([&] { mode_ground_extent(ctx, Mode::Stretch, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { mode_ground_extent(ctx, Mode::Com, 3); }), ErrorCode::InvalidArgument);
}

TEST(lamb_dicke, published_rows) {
    TrapContext ctx = reference_trap();
    double k = kTwoPi / 313e-9;
    for (const auto &row : tgate_test::kPublishedTable) {
        double gamma = discrete_angle(ctx, k, row.n).gamma;
        double eta = lamb_dicke(ctx, make_beam(20e-6, 313e-9, gamma));
        EXPECT_NEAR(eta, row.eta, 0.001) << row.n;
    }
    double eta10 = lamb_dicke(ctx, make_beam(20e-6, 313e-9, 77.6 * std::numbers::pi / 180));
    EXPECT_NEAR(eta10, 0.077, 0.001);
    double eta46 = lamb_dicke(ctx, make_beam(20e-6, 313e-9, 10.1 * std::numbers::pi / 180));
    EXPECT_NEAR(eta46, 0.356, 0.001);
}

TEST(lamb_dicke, limits_and_errors) {
    TrapContext ctx = reference_trap();
    BeamGeometry along = make_beam(20e-6, 313e-9, 0);
    EXPECT_EQ(lamb_dicke(ctx, along), 2 * along.wavenumber() * mode_ground_extent(ctx, Mode::Stretch, 2));
    for (double g = 0.1; g < 1.5; g += 0.1) {
        EXPECT_LT(lamb_dicke(ctx, make_beam(20e-6, 313e-9, g)), lamb_dicke(ctx, along));
    }
    EXPECT_EQ(
        code_of([&] { lamb_dicke(ctx, make_beam(20e-6, 313e-9, std::numbers::pi / 2)); }), ErrorCode::ZeroProjection);
    EXPECT_EQ(
        code_of([&] { lamb_dicke(ctx, make_beam(20e-6, 313e-9, 0.3, BeamConfiguration::CoPropagating)); }),
        ErrorCode::ZeroProjection);
}
