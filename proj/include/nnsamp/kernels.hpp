#pragma once

#include <functional>
#include <string>

namespace nnsamp {

enum class KernelKind { logistic, tanh_based };

std::string kernel_name(KernelKind kind);
KernelKind kernel_from_name(const std::string& name);

/// A sigmoidal activation together with its derived density kernels.
///
/// The density kernel is phi(v) = (sigma(v+1) - sigma(v-1)) / 2 and the 2-D
/// kernel is psi(x, y) = phi(x) * phi(y). Both built-in activations decay
/// exponentially, so lattice sums truncated at `truncation_radius` carry
/// tails far below double rounding.
struct SigmoidalKernel {
    KernelKind kind = KernelKind::logistic;
    double alpha = 1.0;               // tail decay exponent metadata
    double truncation_radius = 40.0;  // default cut for infinite lattice sums
};

SigmoidalKernel logistic_kernel(double truncation_radius = 40.0);
SigmoidalKernel tanh_kernel(double truncation_radius = 40.0);

/// sigma(u) in [0, 1]; throws std::domain_error on non-finite input.
double sigmoid_eval(const SigmoidalKernel& kernel, double u);

/// phi(v) >= 0, even in v. Uses cancellation-free closed forms so the far
/// tail stays accurate.
double phi_eval(const SigmoidalKernel& kernel, double v);

/// psi(x, y) = phi(x) * phi(y).
double psi_eval(const SigmoidalKernel& kernel, double x, double y);

struct AxiomReport {
    double a1_odd_defect = 0.0;        // max |(s(v)-1/2) + (s(-v)-1/2)|
    double a2_concavity_defect = 0.0;  // max positive second difference, v >= 0
    bool a3_decay_ok = false;
    double fitted_tail_exponent = 0.0;
    bool monotone_ok = false;
    bool limits_ok = false;            // s(-R) near 0 and s(R) near 1

    bool passes(double tol) const {
        return a1_odd_defect < tol && a2_concavity_defect < tol && a3_decay_ok &&
               monotone_ok && limits_ok;
    }
};

/// Probes sigma on a log-spaced grid up to the truncation radius and reports
/// defects. Failures are reported, never thrown.
AxiomReport verify_axioms(const SigmoidalKernel& kernel, int probe_count, double tol);

/// Same check against an arbitrary activation (used to exercise rejection of
/// non-sigmoidal test doubles).
AxiomReport verify_axioms(const std::function<double(double)>& sigma, double alpha,
                          double truncation_radius, int probe_count, double tol);

/// | sum_{|k|,|j| <= radius} psi(u-k, v-j) - 1 |
double partition_of_unity_defect(const SigmoidalKernel& kernel, double u, double v,
                                 int radius);

struct MomentResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    bool tail_ok = true;  // false: truncation tail above 1e-12, value inexact
};

/// sup over (u, v) probed in [0,1)^2 of
/// sum |psi(u-k, v-j)| |k-u|^n1 |j-v|^n2, truncated at `radius`.
/// The sup is taken over a cell_probes x cell_probes lattice and is therefore
/// a lower bound of the true sup.
MomentResult absolute_moment(const SigmoidalKernel& kernel, int n1, int n2, int radius,
                             int cell_probes = 33);

/// sum psi(u-k, v-j) (k-u)^n1 (j-v)^n2, truncated at `radius`.
double algebraic_moment(const SigmoidalKernel& kernel, int n1, int n2, double u,
                        double v, int radius);

}  // namespace nnsamp
