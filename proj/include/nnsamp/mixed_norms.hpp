#pragma once

#include <utility>
#include <vector>

#include "nnsamp/fields.hpp"

namespace nnsamp {

/// Exponent pair (p, q) of a mixed norm: inner q-integral in y, outer
/// p-integral in x. `theorem_valid` marks the q <= p < inf regime.
struct MixedExponents {
    double p = 2.0;
    double q = 2.0;
    bool theorem_valid = true;

    MixedExponents(double p_, double q_);

    double conjugate_p() const { return p / (p - 1.0); }  // +inf when p == 1
    double conjugate_q() const { return q / (q - 1.0); }
};

/// Strictly increasing knot sequences per axis with mesh sizes bounded away
/// from zero; cells are Q_jk = [x_{k-1}, x_k) x [y_{j-1}, y_j).
struct AdmissiblePartition2D {
    std::vector<double> x_knots;
    std::vector<double> y_knots;
    double lower_mesh = 0.0;
    double upper_mesh = 0.0;

    AdmissiblePartition2D(std::vector<double> xk, std::vector<double> yk);

    int x_cells() const { return int(x_knots.size()) - 1; }
    int y_cells() const { return int(y_knots.size()) - 1; }
    Rect covered() const {
        return Rect{x_knots.front(), x_knots.back(), y_knots.front(), y_knots.back()};
    }
};

/// Knots at k/n per axis, scaled to the given ranges; uniform mesh.
AdmissiblePartition2D uniform_admissible_partition(std::pair<double, double> x_range,
                                                   std::pair<double, double> y_range,
                                                   int n);

/// Mixed norm by iterated midpoint quadrature on a resolution^2 grid.
double lpq_norm(const ScalarField2D& field, const Rect& rect, const MixedExponents& exps,
                int resolution);

/// Mixed norm of an already-sampled matrix on its grid (inner axis: y).
double lpq_norm_from_samples(const SampleMatrix& samples, const Grid2D& grid,
                             const MixedExponents& exps);

/// Variant with the inner q-integral along the first (x) axis.
double lpq_norm_from_samples_inner_x(const SampleMatrix& samples, const Grid2D& grid,
                                     const MixedExponents& exps);

/// Discrete mixed norm over an admissible partition: per-cell sups (probed on
/// a cell_probes^2 lattice including the cell corners) weighted by cell areas.
/// Dominates lpq_norm of the same field on the covered region.
double discrete_lpq_norm(const ScalarField2D& field, const AdmissiblePartition2D& part,
                         const MixedExponents& exps, int cell_probes = 5);

}  // namespace nnsamp
