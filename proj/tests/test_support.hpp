#pragma once

#include <cmath>
#include <random>

#include "nnsamp/fields.hpp"

namespace testsup {

// Three-term random trig polynomial with a known sup bound.
inline nnsamp::ScalarField2D random_trig_field(std::mt19937& rng) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> freq(-3.0, 3.0);
    std::uniform_real_distribution<double> phase(0.0, 6.2831853);
    double a0 = amp(rng), a1 = amp(rng), a2 = amp(rng);
    double b00 = freq(rng), b01 = freq(rng), b10 = freq(rng), b11 = freq(rng);
    double b20 = freq(rng), b21 = freq(rng);
    double p0 = phase(rng), p1 = phase(rng), p2 = phase(rng);

    nnsamp::ScalarField2D field;
    field.evaluator = [=](double x, double y) {
        return a0 * std::sin(b00 * x + b01 * y + p0) + a1 * std::cos(b10 * x + b11 * y + p1) +
               a2 * std::sin(b20 * x + b21 * y + p2);
    };
    field.continuity = nnsamp::Continuity::continuous;
    field.sup_bound = std::abs(a0) + std::abs(a1) + std::abs(a2);
    return field;
}

// Single sine wave: |f| <= 1 with the bound essentially attained.
inline nnsamp::ScalarField2D random_unit_wave(std::mt19937& rng) {
    std::uniform_real_distribution<double> freq(0.5, 4.0);
    std::uniform_real_distribution<double> phase(0.0, 6.2831853);
    double b0 = freq(rng), b1 = freq(rng), p = phase(rng);
    nnsamp::ScalarField2D field;
    field.evaluator = [=](double x, double y) { return std::sin(b0 * x + b1 * y + p); };
    field.continuity = nnsamp::Continuity::continuous;
    field.sup_bound = 1.0;
    return field;
}

inline const nnsamp::Rect kSquare{-1.0, 1.0, -1.0, 1.0};

}  // namespace testsup
