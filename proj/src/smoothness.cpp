#include "nnsamp/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "row_parallel.hpp"

namespace nnsamp {

namespace {

std::vector<double> binomial_row(int r) {
    std::vector<double> c(r + 1, 1.0);
    for (int j = 1; j <= r; ++j) c[j] = c[j - 1] * (r - j + 1) / j;
    return c;
}

void validate_spec(const ModulusSpec& spec) {
    if (spec.r < 1) throw std::domain_error("ModulusSpec: r < 1");
    if (spec.delta < 0.0) throw std::domain_error("ModulusSpec: delta < 0");
    if (spec.t_probes < 2 || spec.h_probes < 2) {
        throw std::domain_error("ModulusSpec: probe counts must be >= 2");
    }
}

}  // namespace

double forward_difference(const ScalarField2D& field, int r, double h, double x,
                          double y) {
    if (r < 1) throw std::domain_error("forward_difference: r < 1");
    const std::vector<double> binom = binomial_row(r);
    double acc = 0.0;
    for (int j = 0; j <= r; ++j) {
        double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom[j] * field(x + j * h, y + j * h);
    }
    return acc;
}

namespace {

// Shared kernel of local_modulus; binomial row passed in so grid evaluation
// builds it once.
double local_modulus_at(const ScalarField2D& field, const ModulusSpec& spec,
                        const std::vector<double>& binom, double x, double y,
                        const Rect& rect) {
    if (spec.delta <= 0.0) return 0.0;
    const int r = spec.r;
    const double half = r * spec.delta / 2.0;
    const double xlo = std::max(rect.x_lo, x - half), xhi = std::min(rect.x_hi, x + half);
    const double ylo = std::max(rect.y_lo, y - half), yhi = std::min(rect.y_hi, y + half);
    if (!(xhi > xlo) || !(yhi > ylo)) return 0.0;

    const double h_max = std::min(xhi - xlo, yhi - ylo) / r;
    double best = 0.0;
    for (int hi_idx = 0; hi_idx < spec.h_probes; ++hi_idx) {
        const double h = h_max * hi_idx / (spec.h_probes - 1);
        const double t_hi = xhi - r * h;
        const double s_hi = yhi - r * h;
        for (int a = 0; a < spec.t_probes; ++a) {
            const double t = xlo + (t_hi - xlo) * a / (spec.t_probes - 1);
            for (int b = 0; b < spec.t_probes; ++b) {
                const double s = ylo + (s_hi - ylo) * b / (spec.t_probes - 1);
                double acc = 0.0;
                for (int j = 0; j <= r; ++j) {
                    double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * binom[j] * field(t + j * h, s + j * h);
                }
                best = std::max(best, std::abs(acc));
            }
        }
    }
    return best;
}

SampleMatrix local_modulus_grid_impl(const ScalarField2D& field, const ModulusSpec& spec,
                                     const Grid2D& grid, bool parallel) {
    validate_spec(spec);
    const std::vector<double> binom = binomial_row(spec.r);
    SampleMatrix out(grid.nx, grid.ny);
    detail::for_each_row(grid.nx, parallel, [&](int i) {
        const double x = grid.x(i);
        for (int j = 0; j < grid.ny; ++j) {
            out.at(i, j) = local_modulus_at(field, spec, binom, x, grid.y(j), grid.rect);
        }
    });
    return out;
}

}  // namespace

double local_modulus(const ScalarField2D& field, const ModulusSpec& spec, double x,
                     double y, const Rect& rect) {
    validate_spec(spec);
    rect.validate();
    if (!rect.contains(x, y)) throw std::domain_error("local_modulus: point outside rect");
    return local_modulus_at(field, spec, binomial_row(spec.r), x, y, rect);
}

SampleMatrix local_modulus_grid(const ScalarField2D& field, const ModulusSpec& spec,
                                const Grid2D& grid) {
    return local_modulus_grid_impl(field, spec, grid, true);
}

namespace serial {
SampleMatrix local_modulus_grid(const ScalarField2D& field, const ModulusSpec& spec,
                                const Grid2D& grid) {
    return local_modulus_grid_impl(field, spec, grid, false);
}
}  // namespace serial

double tau_modulus(const ScalarField2D& field, const ModulusSpec& spec, const Rect& rect,
                   const MixedExponents& exps, int resolution) {
    validate_spec(spec);
    rect.validate();
    const double side = std::min(rect.width(), rect.height()) / spec.r;
    if (spec.delta > side) {
        throw std::domain_error("tau_modulus: delta exceeds min(width, height)/r");
    }
    Grid2D grid = make_grid(rect, resolution, resolution);
    SampleMatrix omega = local_modulus_grid(field, spec, grid);
    return lpq_norm_from_samples(omega, grid, exps);
}

double integral_modulus(const ScalarField2D& field, const ModulusSpec& spec,
                        const Rect& rect, const MixedExponents& exps, int resolution) {
    validate_spec(spec);
    rect.validate();
    const double side = std::min(rect.width(), rect.height()) / spec.r;
    if (spec.delta > side) {
        throw std::domain_error("integral_modulus: delta exceeds min(width, height)/r");
    }
    const std::vector<double> binom = binomial_row(spec.r);

    double best = 0.0;
    for (int hi_idx = 0; hi_idx < spec.h_probes; ++hi_idx) {
        const double h = spec.delta * hi_idx / (spec.h_probes - 1);
        Rect shrunk{rect.x_lo, rect.x_hi - spec.r * h, rect.y_lo, rect.y_hi - spec.r * h};
        if (!(shrunk.x_hi > shrunk.x_lo) || !(shrunk.y_hi > shrunk.y_lo)) continue;
        Grid2D grid = make_grid(shrunk, resolution, resolution);
        SampleMatrix diff(grid.nx, grid.ny);
        detail::for_each_row(grid.nx, true, [&](int i) {
            const double u = grid.x(i);
            for (int j = 0; j < grid.ny; ++j) {
                const double v = grid.y(j);
                double acc = 0.0;
                for (int jj = 0; jj <= spec.r; ++jj) {
                    double sign = ((spec.r - jj) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * binom[jj] * field(u + jj * h, v + jj * h);
                }
                diff.at(i, j) = acc;
            }
        });
        best = std::max(best, lpq_norm_from_samples(diff, grid, exps));
    }
    return best;
}

}  // namespace nnsamp
