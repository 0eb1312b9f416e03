#pragma once

// Independent brute-force reference implementations used only by tests.
// These deliberately avoid the library's evaluation paths (no separability
// tricks, no cancellation-free closed forms) so agreement is meaningful.

#include <cmath>
#include <functional>
#include <vector>

#include "nnsamp/fields.hpp"
#include "nnsamp/kernels.hpp"

namespace oracle {

inline long double sigmoid_ld(nnsamp::KernelKind kind, long double u) {
    if (kind == nnsamp::KernelKind::logistic) return 1.0L / (1.0L + std::exp(-u));
    return 0.5L * (std::tanh(u) + 1.0L);
}

inline long double phi_ld(nnsamp::KernelKind kind, long double v) {
    return 0.5L * (sigmoid_ld(kind, v + 1.0L) - sigmoid_ld(kind, v - 1.0L));
}

// F_n f by the direct normalized double sum in extended precision.
inline double direct_nn_apply(const nnsamp::ScalarField2D& field, nnsamp::KernelKind kind,
                              int n, double x, double y) {
    long double num = 0.0L, den = 0.0L;
    for (int k = -n; k <= n; ++k) {
        for (int j = -n; j <= n; ++j) {
            long double psi = phi_ld(kind, (long double)n * x - k) *
                              phi_ld(kind, (long double)n * y - j);
            num += (long double)field(double(k) / n, double(j) / n) * psi;
            den += psi;
        }
    }
    return double(num / den);
}

// Absolute lattice moment as a direct (non-separable) double sum, with the
// sup probed over [0,1)^2.
inline double lattice_absolute_moment(nnsamp::KernelKind kind, int n1, int n2, int radius,
                                      int probes) {
    long double best = 0.0L;
    for (int a = 0; a < probes; ++a) {
        long double u = (long double)a / probes;
        for (int b = 0; b < probes; ++b) {
            long double v = (long double)b / probes;
            long double acc = 0.0L;
            for (int k = -radius; k <= radius; ++k) {
                for (int j = -radius; j <= radius; ++j) {
                    long double psi = phi_ld(kind, u - k) * phi_ld(kind, v - j);
                    acc += std::abs(psi) * std::pow(std::abs((long double)k - u), n1) *
                           std::pow(std::abs((long double)j - v), n2);
                }
            }
            if (acc > best) best = acc;
        }
    }
    return double(best);
}

// Local modulus by exhaustive search on dense probe grids.
inline double brute_local_modulus(const std::function<double(double, double)>& f, int r,
                                  double delta, double x, double y, const nnsamp::Rect& rect,
                                  int t_probes, int h_probes) {
    if (delta <= 0.0) return 0.0;
    const double half = r * delta / 2.0;
    const double xlo = std::max(rect.x_lo, x - half), xhi = std::min(rect.x_hi, x + half);
    const double ylo = std::max(rect.y_lo, y - half), yhi = std::min(rect.y_hi, y + half);
    if (!(xhi > xlo) || !(yhi > ylo)) return 0.0;
    const double h_max = std::min(xhi - xlo, yhi - ylo) / r;

    std::vector<double> binom(r + 1, 1.0);
    for (int j = 1; j <= r; ++j) binom[j] = binom[j - 1] * (r - j + 1) / j;

    double best = 0.0;
    for (int hi = 0; hi < h_probes; ++hi) {
        double h = h_max * hi / (h_probes - 1);
        for (int a = 0; a < t_probes; ++a) {
            double t = xlo + (xhi - r * h - xlo) * a / (t_probes - 1);
            for (int b = 0; b < t_probes; ++b) {
                double s = ylo + (yhi - r * h - ylo) * b / (t_probes - 1);
                double acc = 0.0;
                for (int j = 0; j <= r; ++j) {
                    double sign = ((r - j) % 2 == 0) ? 1.0 : -1.0;
                    acc += sign * binom[j] * f(t + j * h, s + j * h);
                }
                best = std::max(best, std::abs(acc));
            }
        }
    }
    return best;
}

// Averaged modulus: midpoint quadrature of the brute local modulus, with the
// nested-sum norm written out directly (inner y with q, outer x with p).
inline double brute_tau(const std::function<double(double, double)>& f, int r, double delta,
                        const nnsamp::Rect& rect, double p, double q, int resolution,
                        int t_probes, int h_probes) {
    const double dx = rect.width() / resolution;
    const double dy = rect.height() / resolution;
    double outer = 0.0;
    for (int i = 0; i < resolution; ++i) {
        double x = rect.x_lo + (i + 0.5) * dx;
        double inner = 0.0;
        for (int j = 0; j < resolution; ++j) {
            double y = rect.y_lo + (j + 0.5) * dy;
            double w = brute_local_modulus(f, r, delta, x, y, rect, t_probes, h_probes);
            inner += std::pow(w, q);
        }
        inner *= dy;
        outer += std::pow(inner, p / q);
    }
    outer *= dx;
    return std::pow(outer, 1.0 / p);
}

}  // namespace oracle
