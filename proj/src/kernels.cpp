#include "nnsamp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nnsamp {

namespace {

double logistic(double u) { return 1.0 / (1.0 + std::exp(-u)); }

double tanh_sigmoid(double u) { return 0.5 * (std::tanh(u) + 1.0); }

// phi for the logistic activation. Direct subtraction of the two sigmoid
// values cancels catastrophically in the tail; this closed form is exact:
//   (s(v+1) - s(v-1)) / 2 = sinh(1) / (2 (cosh(v) + cosh(1))).
double phi_logistic(double v) {
    static const double s1 = std::sinh(1.0);
    static const double c1 = std::cosh(1.0);
    return 0.5 * s1 / (std::cosh(v) + c1);
}

// Same reduction for the tanh activation:
//   (tanh(v+1) - tanh(v-1)) / 4 = sinh(2) / (2 (cosh(2v) + cosh(2))).
double phi_tanh(double v) {
    static const double s2 = std::sinh(2.0);
    static const double c2 = std::cosh(2.0);
    return 0.5 * s2 / (std::cosh(2.0 * v) + c2);
}

void require_finite(double u) {
    if (!std::isfinite(u)) throw std::domain_error("sigmoid_eval: non-finite input");
}

}  // namespace

std::string kernel_name(KernelKind kind) {
    return kind == KernelKind::logistic ? "logistic" : "tanh";
}

KernelKind kernel_from_name(const std::string& name) {
    if (name == "logistic") return KernelKind::logistic;
    if (name == "tanh") return KernelKind::tanh_based;
    throw std::domain_error("unknown kernel name: " + name);
}

SigmoidalKernel logistic_kernel(double truncation_radius) {
    return SigmoidalKernel{KernelKind::logistic, 1.0, truncation_radius};
}

SigmoidalKernel tanh_kernel(double truncation_radius) {
    return SigmoidalKernel{KernelKind::tanh_based, 1.0, truncation_radius};
}

double sigmoid_eval(const SigmoidalKernel& kernel, double u) {
    require_finite(u);
    return kernel.kind == KernelKind::logistic ? logistic(u) : tanh_sigmoid(u);
}

double phi_eval(const SigmoidalKernel& kernel, double v) {
    require_finite(v);
    return kernel.kind == KernelKind::logistic ? phi_logistic(v) : phi_tanh(v);
}

double psi_eval(const SigmoidalKernel& kernel, double x, double y) {
    return phi_eval(kernel, x) * phi_eval(kernel, y);
}

namespace {

AxiomReport verify_axioms_impl(const std::function<double(double)>& sigma, double alpha,
                               double radius, int probe_count, double tol) {
    if (probe_count < 16) throw std::domain_error("verify_axioms: probe_count < 16");
    AxiomReport report;

    // Log-spaced probes in (0, radius].
    std::vector<double> probes(probe_count);
    const double lo = std::log(1e-3), hi = std::log(radius);
    for (int i = 0; i < probe_count; ++i) {
        probes[i] = std::exp(lo + (hi - lo) * i / (probe_count - 1));
    }

    for (double v : probes) {
        double odd = std::abs((sigma(v) - 0.5) + (sigma(-v) - 0.5));
        report.a1_odd_defect = std::max(report.a1_odd_defect, odd);
    }

    // Concavity on v >= 0 via centered second differences, step 1e-3.
    const double step = 1e-3;
    for (int i = 0; i <= 200; ++i) {
        double v = 0.1 * i + step;
        double d2 = sigma(v + step) - 2.0 * sigma(v) + sigma(v - step);
        report.a2_concavity_defect = std::max(report.a2_concavity_defect, d2);
    }

    // Monotone on a uniform grid over [-radius, radius].
    report.monotone_ok = true;
    double prev = sigma(-radius);
    for (int i = 1; i <= 2 * probe_count; ++i) {
        double v = -radius + radius * double(i) / probe_count;
        double cur = sigma(v);
        if (cur < prev - 1e-12) report.monotone_ok = false;
        prev = cur;
    }

    report.limits_ok = std::abs(sigma(radius) - 1.0) < 0.05 && std::abs(sigma(-radius)) < 0.05;

    // Tail decay: least-squares slope of log sigma(-v) against log v on
    // [2, radius]. sigma(-v) = O(v^{-1-alpha}) needs slope <= -(1+alpha);
    // exponential tails give far steeper fitted slopes.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (double v : probes) {
        if (v < 2.0) continue;
        double s = sigma(-v);
        if (!(s > 0.0)) continue;  // underflowed tail: decayed past measurement
        double lx = std::log(v), ly = std::log(s);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++m;
    }
    if (m >= 2) {
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        report.fitted_tail_exponent = -slope - 1.0;
        report.a3_decay_ok = report.fitted_tail_exponent >= alpha;
    } else {
        // Everything underflowed: the tail is below representable doubles.
        report.fitted_tail_exponent = std::numeric_limits<double>::infinity();
        report.a3_decay_ok = true;
    }

    (void)tol;
    return report;
}

}  // namespace

AxiomReport verify_axioms(const SigmoidalKernel& kernel, int probe_count, double tol) {
    auto sigma = [&kernel](double v) { return sigmoid_eval(kernel, v); };
    return verify_axioms_impl(sigma, kernel.alpha, kernel.truncation_radius, probe_count,
                              tol);
}

AxiomReport verify_axioms(const std::function<double(double)>& sigma, double alpha,
                          double truncation_radius, int probe_count, double tol) {
    return verify_axioms_impl(sigma, alpha, truncation_radius, probe_count, tol);
}

namespace {

// One-axis lattice sum: sum_{|k| <= radius} phi(u - k) * |k - u|^power.
double axis_abs_sum(const SigmoidalKernel& kernel, double u, int power, int radius) {
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        double w = phi_eval(kernel, u - k);
        acc += w * std::pow(std::abs(k - u), power);
    }
    return acc;
}

double axis_signed_sum(const SigmoidalKernel& kernel, double u, int power, int radius) {
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        acc += phi_eval(kernel, u - k) * std::pow(double(k) - u, power);
    }
    return acc;
}

// Outermost ring of the truncated sum, doubled: with exponential kernel decay
// the neglected tail is below this.
double axis_tail_estimate(const SigmoidalKernel& kernel, double u, int power, int radius) {
    double edge = phi_eval(kernel, u - radius) * std::pow(std::abs(radius - u), power) +
                  phi_eval(kernel, u + radius) * std::pow(std::abs(radius + u), power);
    return 2.0 * edge;
}

}  // namespace

double partition_of_unity_defect(const SigmoidalKernel& kernel, double u, double v,
                                 int radius) {
    if (radius < 1) throw std::domain_error("partition_of_unity_defect: radius < 1");
    // psi separates, so the double sum is the product of two axis sums.
    double sx = axis_abs_sum(kernel, u, 0, radius);
    double sy = axis_abs_sum(kernel, v, 0, radius);
    return std::abs(sx * sy - 1.0);
}

MomentResult absolute_moment(const SigmoidalKernel& kernel, int n1, int n2, int radius,
                             int cell_probes) {
    if (n1 < 0 || n2 < 0) throw std::domain_error("absolute_moment: negative order");
    if (radius < 1) throw std::domain_error("absolute_moment: radius < 1");
    if (cell_probes < 2) throw std::domain_error("absolute_moment: cell_probes < 2");

    MomentResult result;
    for (int a = 0; a < cell_probes; ++a) {
        double u = double(a) / cell_probes;  // probes cover [0, 1)
        double su = axis_abs_sum(kernel, u, n1, radius);
        double tu = axis_tail_estimate(kernel, u, n1, radius);
        for (int b = 0; b < cell_probes; ++b) {
            double v = double(b) / cell_probes;
            double sv = axis_abs_sum(kernel, v, n2, radius);
            result.value = std::max(result.value, su * sv);
            double tail = tu * sv + su * axis_tail_estimate(kernel, v, n2, radius);
            result.tail_estimate = std::max(result.tail_estimate, tail);
        }
    }
    result.tail_ok = result.tail_estimate < 1e-12;
    return result;
}

double algebraic_moment(const SigmoidalKernel& kernel, int n1, int n2, double u, double v,
                        int radius) {
    if (radius < 1) throw std::domain_error("algebraic_moment: radius < 1");
    return axis_signed_sum(kernel, u, n1, radius) * axis_signed_sum(kernel, v, n2, radius);
}

}  // namespace nnsamp
