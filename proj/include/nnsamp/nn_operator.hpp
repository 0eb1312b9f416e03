#pragma once

#include "nnsamp/fields.hpp"
#include "nnsamp/kernels.hpp"
#include "nnsamp/mixed_norms.hpp"

namespace nnsamp {

/// Sampling operator F_n on [-1,1]^2: kernel-weighted normalized sum of the
/// samples f(k/n, j/n), k, j in {-n, ..., n}.
struct NnOperatorConfig {
    int n = 1;
    SigmoidalKernel kernel;
};

/// F_n f at one point of [-1,1]^2. The denominator is bounded below by
/// psi(1,1) > 0 on the square, so the quotient is always defined.
double nn_apply(const ScalarField2D& field, const NnOperatorConfig& cfg, double x,
                double y);

/// F_n f at every node of `grid` (grid.rect must lie inside [-1,1]^2).
/// Exploits the kernel's separability to cache one weighted row combination
/// per grid row; entries are bit-identical to nn_apply at the same node.
SampleMatrix nn_apply_grid(const ScalarField2D& field, const NnOperatorConfig& cfg,
                           const Grid2D& grid);

namespace serial {
SampleMatrix nn_apply_grid(const ScalarField2D& field, const NnOperatorConfig& cfg,
                           const Grid2D& grid);
}

struct StabilityReport {
    double lhs = 0.0;  // ||F_n f||_{p,q} on [-1,1]^2
    double rhs = 0.0;  // ||f||_{l^{p,q}} over the k/n partition, times the kernel factor
    bool holds = false;
};

/// Checks ||F_n f||_{p,q} <= ||f||_{l^{p,q}(Sigma)} * psi(1,1)^{-(1/p+1/q)/2}
/// with Sigma the uniform k/n partition of [-1,1]^2. The bound's regime is
/// q <= p; pass override_exponent_regime to evaluate it outside that regime.
StabilityReport stability_check(const ScalarField2D& field, const NnOperatorConfig& cfg,
                                const MixedExponents& exps, int resolution,
                                bool override_exponent_regime = false);

}  // namespace nnsamp
