#pragma once

#include "nnsamp/fields.hpp"
#include "nnsamp/mixed_norms.hpp"

namespace nnsamp {

/// Parameters of the local/averaged modulus of smoothness of order r.
///
/// The sup over (t, s, h) is searched on probe grids, so computed moduli are
/// lower bounds of the exact ones; the defaults keep the gap below 1% on
/// smooth fields.
struct ModulusSpec {
    int r = 1;
    double delta = 0.0;
    int t_probes = 17;  // per axis
    int h_probes = 9;
};

/// r-th forward difference with the same step h in both axes:
/// sum_{j=0}^{r} (-1)^{r-j} C(r,j) f(x + jh, y + jh).
double forward_difference(const ScalarField2D& field, int r, double h, double x,
                          double y);

/// Local modulus at (x, y): sup of |forward difference| over base points and
/// steps confined to the window of radius r*delta/2 around (x, y), clipped to
/// `rect`. Zero when delta == 0.
double local_modulus(const ScalarField2D& field, const ModulusSpec& spec, double x,
                     double y, const Rect& rect);

/// Local modulus evaluated at every node of `grid` (clip rect = grid.rect).
/// Rows run in parallel; values identical to the serial reference.
SampleMatrix local_modulus_grid(const ScalarField2D& field, const ModulusSpec& spec,
                                const Grid2D& grid);

namespace serial {
SampleMatrix local_modulus_grid(const ScalarField2D& field, const ModulusSpec& spec,
                                const Grid2D& grid);
}

/// Averaged modulus: mixed norm of the local modulus as a field of the base
/// point. Requires delta <= min(width, height)/r.
double tau_modulus(const ScalarField2D& field, const ModulusSpec& spec, const Rect& rect,
                   const MixedExponents& exps, int resolution);

/// Integral modulus: sup over 0 <= h <= delta of the mixed norm of the
/// forward difference over the h-shrunken rectangle. Never exceeds the
/// averaged modulus.
double integral_modulus(const ScalarField2D& field, const ModulusSpec& spec,
                        const Rect& rect, const MixedExponents& exps, int resolution);

}  // namespace nnsamp
