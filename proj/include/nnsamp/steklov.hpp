#pragma once

#include "nnsamp/fields.hpp"

namespace nnsamp {

/// Steklov averaging parameters. The r-fold box average per axis is computed
/// as one composite Gauss rule weighted by the r-fold box-filter density, so
/// a 2-D evaluation costs (r * quad_points_per_fold)^2 field evaluations.
struct SteklovParams {
    int r = 1;           // capped at 4
    double h = 0.1;      // > 0
    int quad_points_per_fold = 8;
};

/// Largest rectangle on which the averaged field can be evaluated when the
/// input is only defined on `domain` (offsets reach r*h in +x and +y).
Rect usable_region(const Rect& domain, const SteklovParams& params);

/// The 2r-fold box average over [0, h] offsets per axis. Linear in f,
/// preserves constants.
ScalarField2D steklov_average(const ScalarField2D& field, const SteklovParams& params);

/// Binomial combination -sum_{j=1}^{r} (-1)^j C(r,j) F_{r, jh/r} of Steklov
/// averages. Preserves constants for every r and reproduces affine functions
/// exactly for r = 2.
ScalarField2D modified_steklov(const ScalarField2D& field, const SteklovParams& params);

}  // namespace nnsamp
