#include "nnsamp/mixed_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nnsamp {

MixedExponents::MixedExponents(double p_, double q_) : p(p_), q(q_) {
    if (!std::isfinite(p) || !std::isfinite(q) || p < 1.0 || q < 1.0) {
        throw std::domain_error("MixedExponents: p and q must be finite and >= 1");
    }
    theorem_valid = q <= p;
}

namespace {

void check_knots(const std::vector<double>& knots, const char* axis) {
    if (knots.size() < 2) {
        throw std::domain_error(std::string("AdmissiblePartition2D: fewer than two ") +
                                axis + " knots");
    }
    for (size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1])) {
            throw std::domain_error(std::string("AdmissiblePartition2D: ") + axis +
                                    " knots not strictly increasing");
        }
    }
}

}  // namespace

AdmissiblePartition2D::AdmissiblePartition2D(std::vector<double> xk, std::vector<double> yk)
    : x_knots(std::move(xk)), y_knots(std::move(yk)) {
    check_knots(x_knots, "x");
    check_knots(y_knots, "y");
    lower_mesh = std::numeric_limits<double>::infinity();
    upper_mesh = 0.0;
    auto scan = [this](const std::vector<double>& knots) {
        for (size_t i = 1; i < knots.size(); ++i) {
            double step = knots[i] - knots[i - 1];
            lower_mesh = std::min(lower_mesh, step);
            upper_mesh = std::max(upper_mesh, step);
        }
    };
    scan(x_knots);
    scan(y_knots);
}

AdmissiblePartition2D uniform_admissible_partition(std::pair<double, double> x_range,
                                                   std::pair<double, double> y_range,
                                                   int n) {
    if (n < 1) throw std::domain_error("uniform_admissible_partition: n < 1");
    auto knots_for = [n](std::pair<double, double> range) {
        auto [lo, hi] = range;
        if (!(lo < hi)) throw std::domain_error("uniform_admissible_partition: empty range");
        std::vector<double> knots(2 * n + 1);
        for (int k = -n; k <= n; ++k) {
            // k/n mapped affinely from [-1, 1] onto [lo, hi]
            knots[k + n] = lo + (double(k) / n + 1.0) * 0.5 * (hi - lo);
        }
        knots.front() = lo;
        knots.back() = hi;
        return knots;
    };
    return AdmissiblePartition2D(knots_for(x_range), knots_for(y_range));
}

double lpq_norm_from_samples(const SampleMatrix& samples, const Grid2D& grid,
                             const MixedExponents& exps) {
    double outer = 0.0;
    for (int i = 0; i < samples.nx(); ++i) {
        double inner = 0.0;
        for (int j = 0; j < samples.ny(); ++j) {
            inner += std::pow(std::abs(samples.at(i, j)), exps.q);
        }
        inner *= grid.dy();
        outer += std::pow(inner, exps.p / exps.q);
    }
    outer *= grid.dx();
    return std::pow(outer, 1.0 / exps.p);
}

double lpq_norm_from_samples_inner_x(const SampleMatrix& samples, const Grid2D& grid,
                                     const MixedExponents& exps) {
    double outer = 0.0;
    for (int j = 0; j < samples.ny(); ++j) {
        double inner = 0.0;
        for (int i = 0; i < samples.nx(); ++i) {
            inner += std::pow(std::abs(samples.at(i, j)), exps.q);
        }
        inner *= grid.dx();
        outer += std::pow(inner, exps.p / exps.q);
    }
    outer *= grid.dy();
    return std::pow(outer, 1.0 / exps.p);
}

double lpq_norm(const ScalarField2D& field, const Rect& rect, const MixedExponents& exps,
                int resolution) {
    if (resolution < 8) throw std::domain_error("lpq_norm: resolution < 8");
    Grid2D grid = make_grid(rect, resolution, resolution);
    SampleMatrix samples = sample_field(field, grid);
    return lpq_norm_from_samples(samples, grid, exps);
}

double discrete_lpq_norm(const ScalarField2D& field, const AdmissiblePartition2D& part,
                         const MixedExponents& exps, int cell_probes) {
    if (cell_probes < 2) throw std::domain_error("discrete_lpq_norm: cell_probes < 2");
    if (field.domain) {
        Rect covered = part.covered();
        const Rect& d = *field.domain;
        if (d.x_lo < covered.x_lo || d.x_hi > covered.x_hi || d.y_lo < covered.y_lo ||
            d.y_hi > covered.y_hi) {
            throw std::domain_error("discrete_lpq_norm: partition does not cover the field");
        }
    }

    const int nx = part.x_cells(), ny = part.y_cells();
    double outer = 0.0;
    for (int k = 0; k < nx; ++k) {
        const double x0 = part.x_knots[k], x1 = part.x_knots[k + 1];
        double inner = 0.0;
        for (int j = 0; j < ny; ++j) {
            const double y0 = part.y_knots[j], y1 = part.y_knots[j + 1];
            // sup over the closed cell, probed on a lattice including corners
            double sup = 0.0;
            for (int a = 0; a < cell_probes; ++a) {
                double x = x0 + (x1 - x0) * a / (cell_probes - 1);
                for (int b = 0; b < cell_probes; ++b) {
                    double y = y0 + (y1 - y0) * b / (cell_probes - 1);
                    sup = std::max(sup, std::abs(field(x, y)));
                }
            }
            inner += std::pow(sup, exps.q) * (x1 - x0) * (y1 - y0);
        }
        outer += std::pow(inner, exps.p / exps.q);
    }
    return std::pow(outer, 1.0 / exps.p);
}

}  // namespace nnsamp
