#include "nnsamp/steklov.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

namespace nnsamp {

namespace {

// Gauss-Legendre nodes/weights on [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_unit(int points) {
    // Newton iteration on Legendre polynomials, standard construction.
    GaussRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (int i = 0; i < points; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= points; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = 0.5 * (1.0 + x);
        rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binom(int r, int j) {
    double c = 1.0;
    for (int i = 1; i <= j; ++i) c = c * (r - i + 1) / i;
    return c;
}

// Density of the sum of r independent uniforms on [0, 1], s in [0, r]:
//   w_r(s) = 1/(r-1)! * sum_{k <= s} (-1)^k C(r, k) (s - k)^{r-1}.
double box_filter_density(int r, double s) {
    if (s <= 0.0 || s >= r) return 0.0;
    double acc = 0.0;
    for (int k = 0; k <= int(s); ++k) {
        double t = s - k;
        if (t <= 0.0) break;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom(r, k) * std::pow(t, r - 1);
    }
    return acc / factorial(r - 1);
}

// One-axis quadrature for the r-fold box average with step h:
//   (1/h^r) int_{[0,h]^r} f(x + sum u_i) du  =  int_0^{rh} f(x + s) rho(s) ds
// with rho the scaled box-filter density. Gauss nodes per unit fold keep the
// piecewise-polynomial weight exact.
struct AxisRule {
    std::vector<double> offsets;
    std::vector<double> weights;  // sums to 1 up to rounding
};

AxisRule axis_rule(int r, double h, int points_per_fold, const GaussRule& gauss) {
    AxisRule rule;
    rule.offsets.reserve(size_t(r) * points_per_fold);
    rule.weights.reserve(size_t(r) * points_per_fold);
    for (int seg = 0; seg < r; ++seg) {
        for (int i = 0; i < points_per_fold; ++i) {
            double unit = seg + gauss.nodes[i];            // position in [0, r]
            rule.offsets.push_back(unit * h);
            rule.weights.push_back(gauss.weights[i] * box_filter_density(r, unit));
        }
    }
    return rule;
}

void validate_params(const SteklovParams& params) {
    if (params.r < 1 || params.r > 4) throw std::domain_error("SteklovParams: r must be in [1, 4]");
    if (!(params.h > 0.0)) throw std::domain_error("SteklovParams: h must be > 0");
    if (params.quad_points_per_fold < 2) {
        throw std::domain_error("SteklovParams: quad_points_per_fold < 2");
    }
}

struct WeightedTable {
    double coefficient;
    AxisRule rule;
};

ScalarField2D combination_field(const ScalarField2D& field, const SteklovParams& params,
                                std::vector<WeightedTable> tables) {
    auto shared = std::make_shared<std::vector<WeightedTable>>(std::move(tables));
    ScalarField2D out;
    out.evaluator = [field, shared](double x, double y) {
        double acc = 0.0;
        for (const WeightedTable& table : *shared) {
            const auto& off = table.rule.offsets;
            const auto& wgt = table.rule.weights;
            double sum = 0.0;
            for (size_t a = 0; a < off.size(); ++a) {
                double row = 0.0;
                for (size_t b = 0; b < off.size(); ++b) {
                    row += wgt[b] * field(x + off[a], y + off[b]);
                }
                sum += wgt[a] * row;
            }
            acc += table.coefficient * sum;
        }
        return acc;
    };
    out.continuity = Continuity::continuous;  // averaging removes jumps
    if (field.sup_bound) {
        double l1 = 0.0;
        for (const WeightedTable& t : *shared) l1 += std::abs(t.coefficient);
        out.sup_bound = l1 * *field.sup_bound;
    }
    if (field.domain) {
        out.domain = usable_region(*field.domain, params);
    }
    return out;
}

}  // namespace

Rect usable_region(const Rect& domain, const SteklovParams& params) {
    validate_params(params);
    Rect shrunk{domain.x_lo, domain.x_hi - params.r * params.h, domain.y_lo,
                domain.y_hi - params.r * params.h};
    shrunk.validate();
    return shrunk;
}

ScalarField2D steklov_average(const ScalarField2D& field, const SteklovParams& params) {
    validate_params(params);
    GaussRule gauss = gauss_unit(params.quad_points_per_fold);
    std::vector<WeightedTable> tables;
    tables.push_back({1.0, axis_rule(params.r, params.h, params.quad_points_per_fold, gauss)});
    return combination_field(field, params, std::move(tables));
}

ScalarField2D modified_steklov(const ScalarField2D& field, const SteklovParams& params) {
    validate_params(params);
    GaussRule gauss = gauss_unit(params.quad_points_per_fold);
    std::vector<WeightedTable> tables;
    for (int j = 1; j <= params.r; ++j) {
        double coeff = -((j % 2 == 0) ? 1.0 : -1.0) * binom(params.r, j);
        double hj = j * params.h / params.r;
        tables.push_back({coeff, axis_rule(params.r, hj, params.quad_points_per_fold, gauss)});
    }
    return combination_field(field, params, std::move(tables));
}

}  // namespace nnsamp
