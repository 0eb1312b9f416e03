#include "nnsamp/nn_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "row_parallel.hpp"

namespace nnsamp {

namespace {

void validate_config(const NnOperatorConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("NnOperatorConfig: n < 1");
}

// f sampled on the lattice (k/n, j/n); index (k+n, j+n).
SampleMatrix sample_lattice(const ScalarField2D& field, int n) {
    SampleMatrix samples(2 * n + 1, 2 * n + 1);
    for (int k = -n; k <= n; ++k) {
        for (int j = -n; j <= n; ++j) {
            samples.at(k + n, j + n) = field(double(k) / n, double(j) / n);
        }
    }
    return samples;
}

std::vector<double> lattice_weights(const SigmoidalKernel& kernel, int n, double coord) {
    std::vector<double> w(2 * n + 1);
    for (int k = -n; k <= n; ++k) w[k + n] = phi_eval(kernel, n * coord - k);
    return w;
}

double ascending_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
}

// Row combination t[j] = sum_k wx[k] * samples(k, j); the pointwise and grid
// paths both reduce through this vector in the same order, which keeps them
// bit-identical.
std::vector<double> row_combination(const SampleMatrix& samples,
                                    const std::vector<double>& wx) {
    const int m = samples.ny();
    std::vector<double> t(m, 0.0);
    for (int k = 0; k < samples.nx(); ++k) {
        const double w = wx[k];
        for (int j = 0; j < m; ++j) t[j] += w * samples.at(k, j);
    }
    return t;
}

double combine(const std::vector<double>& t, const std::vector<double>& wy, double sx,
               double sy) {
    double num = 0.0;
    for (size_t j = 0; j < t.size(); ++j) num += t[j] * wy[j];
    return num / (sx * sy);
}

SampleMatrix nn_apply_grid_impl(const ScalarField2D& field, const NnOperatorConfig& cfg,
                                const Grid2D& grid, bool parallel) {
    validate_config(cfg);
    if (grid.rect.x_lo < -1.0 || grid.rect.x_hi > 1.0 || grid.rect.y_lo < -1.0 ||
        grid.rect.y_hi > 1.0) {
        throw std::domain_error("nn_apply_grid: grid extends outside [-1,1]^2");
    }

    const SampleMatrix samples = sample_lattice(field, cfg.n);

    // Column weights depend only on y_j; build once.
    std::vector<std::vector<double>> wys(grid.ny);
    std::vector<double> sy(grid.ny);
    for (int j = 0; j < grid.ny; ++j) {
        wys[j] = lattice_weights(cfg.kernel, cfg.n, grid.y(j));
        sy[j] = ascending_sum(wys[j]);
    }

    SampleMatrix out(grid.nx, grid.ny);
    detail::for_each_row(grid.nx, parallel, [&](int i) {
        const std::vector<double> wx = lattice_weights(cfg.kernel, cfg.n, grid.x(i));
        const double sx = ascending_sum(wx);
        const std::vector<double> t = row_combination(samples, wx);
        for (int j = 0; j < grid.ny; ++j) {
            out.at(i, j) = combine(t, wys[j], sx, sy[j]);
        }
    });
    return out;
}

}  // namespace

double nn_apply(const ScalarField2D& field, const NnOperatorConfig& cfg, double x,
                double y) {
    validate_config(cfg);
    if (x < -1.0 || x > 1.0 || y < -1.0 || y > 1.0) {
        throw std::domain_error("nn_apply: point outside [-1,1]^2");
    }
    const SampleMatrix samples = sample_lattice(field, cfg.n);
    const std::vector<double> wx = lattice_weights(cfg.kernel, cfg.n, x);
    const std::vector<double> wy = lattice_weights(cfg.kernel, cfg.n, y);
    const std::vector<double> t = row_combination(samples, wx);
    return combine(t, wy, ascending_sum(wx), ascending_sum(wy));
}

SampleMatrix nn_apply_grid(const ScalarField2D& field, const NnOperatorConfig& cfg,
                           const Grid2D& grid) {
    return nn_apply_grid_impl(field, cfg, grid, true);
}

namespace serial {
SampleMatrix nn_apply_grid(const ScalarField2D& field, const NnOperatorConfig& cfg,
                           const Grid2D& grid) {
    return nn_apply_grid_impl(field, cfg, grid, false);
}
}  // namespace serial

StabilityReport stability_check(const ScalarField2D& field, const NnOperatorConfig& cfg,
                                const MixedExponents& exps, int resolution,
                                bool override_exponent_regime) {
    validate_config(cfg);
    if (!exps.theorem_valid && !override_exponent_regime) {
        throw std::domain_error("stability_check: requires q <= p (or an explicit override)");
    }
    const Rect square{-1.0, 1.0, -1.0, 1.0};
    Grid2D grid = make_grid(square, resolution, resolution);
    SampleMatrix approx = nn_apply_grid(field, cfg, grid);

    StabilityReport report;
    report.lhs = lpq_norm_from_samples(approx, grid, exps);

    AdmissiblePartition2D part =
        uniform_admissible_partition({-1.0, 1.0}, {-1.0, 1.0}, cfg.n);
    const double psi11 = psi_eval(cfg.kernel, 1.0, 1.0);
    const double factor = std::pow(psi11, -0.5 * (1.0 / exps.p + 1.0 / exps.q));
    report.rhs = discrete_lpq_norm(field, part, exps, 5) * factor;
    report.holds = report.lhs <= report.rhs;
    return report;
}

}  // namespace nnsamp
