#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <complex>
#include <numbers>
#include <vector>

#include "qzak/grid.hpp"
#include "qzak/norms.hpp"
#include "qzak/symbols.hpp"

using namespace qzak;
using std::numbers::pi;

namespace {
const cplx I(0.0, 1.0);
}

TEST_CASE("the Sobolev norm reduces to L2 at order zero") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    FourierField f = field_from_function(g, [](double x) { return cplx(std::sin(x), 0.0); });
    CHECK(sobolev_norm(g, f, 0.0) == doctest::Approx(std::sqrt(pi)).epsilon(1e-12));
}

TEST_CASE("higher Sobolev orders weight each mode by the Japanese bracket squared") {
    SpectralGrid g = make_grid(64, 2.0 * pi);
    FourierField f = field_from_function(g, [](double x) { return std::exp(I * x); });
    // single mode at xi=1: H^s norm = sqrt(2 pi (1+1)^s)
    CHECK(sobolev_norm(g, f, 1.0) == doctest::Approx(std::sqrt(4.0 * pi)).epsilon(1e-12));
    CHECK(sobolev_norm(g, f, 2.0) == doctest::Approx(std::sqrt(8.0 * pi)).epsilon(1e-12));
    CHECK(sobolev_norm(g, f, 1.0) >= sobolev_norm(g, f, 0.0));
    FourierField wrong(32);
    CHECK_THROWS_AS(sobolev_norm(g, wrong, 0.0), std::invalid_argument);
}

TEST_CASE("the space-time norm with flat weights is the time-mean L2 norm") {
    SpectralGrid g = make_grid(32, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    const int m = 8;
    const double window = 0.5;
    // constant-in-time single spatial mode of unit amplitude
    std::vector<FourierField> frames(m, field_from_function(g, [](double x) {
        return std::exp(I * x);
    }));
    const double v = bourgain_norm(g, sy, frames, window, 0.0, 0.0, Phase::schrodinger);
    CHECK(v == doctest::Approx(std::sqrt(window * 2.0 * pi)).epsilon(1e-12));
}

TEST_CASE("a free half-wave sits on its characteristic and feels no time weight") {
    SpectralGrid g = make_grid(32, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    const int m = 16;
    // pick the window so that sqrt(Phi(1)) = sqrt(2) is exactly one time harmonic
    const double root = std::sqrt(2.0);
    const double window = 2.0 * pi / root;
    std::vector<FourierField> frames;
    for (int k = 0; k < m; ++k) {
        const double t = window * k / m;
        frames.push_back(field_from_function(
            g, [&](double x) { return 0.7 * std::exp(I * (x - root * t)); }));
    }
    const double s = 0.5, b = 0.7;
    const double matched = bourgain_norm(g, sy, frames, window, s, b, Phase::wave_plus);
    // the weight collapses to the spatial bracket alone: sqrt(L T) (1+|xi|)^s A
    const double expect = std::sqrt(2.0 * pi * window) * std::pow(2.0, s) * 0.7;
    CHECK(matched == doctest::Approx(expect).epsilon(1e-10));

    // the opposite branch pays the full modulation distance 2 sqrt(Phi)
    const double mismatched = bourgain_norm(g, sy, frames, window, s, b, Phase::wave_minus);
    CHECK(mismatched == doctest::Approx(expect * std::pow(1.0 + 2.0 * root, b)).epsilon(1e-10));
    CHECK(mismatched > matched);
}

TEST_CASE("a free envelope mode is likewise weight-free for the matched phase") {
    SpectralGrid g = make_grid(32, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    const int m = 16;
    // Phi(1) = 2 at eps=1; window pi makes it the second time harmonic
    const double window = pi;
    std::vector<FourierField> frames;
    for (int k = 0; k < m; ++k) {
        const double t = window * k / m;
        frames.push_back(field_from_function(
            g, [&](double x) { return std::exp(I * (x - 2.0 * t)); }));
    }
    const double matched = bourgain_norm(g, sy, frames, window, 0.0, 0.55, Phase::schrodinger);
    CHECK(matched == doctest::Approx(std::sqrt(2.0 * pi * window)).epsilon(1e-10));
    const double weighted = bourgain_norm(g, sy, frames, window, 0.0, 0.55, Phase::wave_plus);
    CHECK(weighted > matched);
}

TEST_CASE("the space-time norm validates its sampling preconditions") {
    SpectralGrid g = make_grid(32, 2.0 * pi);
    DispersionSymbols sy = make_symbols(g, 1.0);
    std::vector<FourierField> few(4, FourierField(g.n));
    CHECK_THROWS_AS(bourgain_norm(g, sy, few, 1.0, 0.0, 0.5, Phase::schrodinger),
                    std::invalid_argument);
    std::vector<FourierField> bad(8, FourierField(16));
    CHECK_THROWS_AS(bourgain_norm(g, sy, bad, 1.0, 0.0, 0.5, Phase::schrodinger),
                    std::invalid_argument);
    std::vector<FourierField> ok(8, FourierField(g.n));
    CHECK_THROWS_AS(bourgain_norm(g, sy, ok, 0.0, 0.0, 0.5, Phase::schrodinger),
                    std::invalid_argument);
}
