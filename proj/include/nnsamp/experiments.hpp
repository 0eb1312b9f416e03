#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nnsamp/fields.hpp"
#include "nnsamp/kernels.hpp"
#include "nnsamp/mixed_norms.hpp"

namespace nnsamp {

/// x^2 sin(x+y) + y^2 cos(xy); entire, evaluated anywhere.
ScalarField2D test_function_f();

/// The same expression shifted by +1 for x > 0 and negated minus one for
/// x <= 0: a jump along x = 0 (x = 0 takes the x <= 0 branch).
ScalarField2D test_function_g();

struct ErrorRow {
    int n = 0;
    KernelKind kernel = KernelKind::logistic;
    double p = 0.0;
    double q = 0.0;
    double error_f = 0.0;
    double error_g = 0.0;

    bool operator==(const ErrorRow&) const = default;
};

struct ErrorReportMeta {
    int grid_resolution = 512;
    int cell_probes = 5;
    double truncation_radius = 40.0;

    bool operator==(const ErrorReportMeta&) const = default;
};

/// Approximation errors per (n, kernel) for the two test functions, keyed
/// uniquely by (n, kernel, p, q).
struct ErrorReport {
    std::vector<ErrorRow> rows;
    ErrorReportMeta meta;

    bool operator==(const ErrorReport&) const = default;
};

/// Errors ||F_n f - f|| and ||F_n g - g|| over [-1,1]^2 for every requested
/// (n, kernel). The error fields are normed with the inner q-integral along
/// the first axis, the one carrying g's jump.
ErrorReport error_table(const std::vector<int>& ns, const std::vector<KernelKind>& kernels,
                        const MixedExponents& exps, int resolution);

struct RatioRow {
    int n = 0;
    double error = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
    double ratio = 0.0;
    bool skipped = false;  // tau1 + tau2 == 0: ratio undefined

    bool operator==(const RatioRow&) const = default;
};

struct RatioReport {
    std::vector<RatioRow> rows;

    /// max ratio / min ratio <= factor over the non-skipped rows (vacuously
    /// true with fewer than two of them).
    bool ratio_bounded(double factor) const;

    bool operator==(const RatioReport&) const = default;
};

/// Error vs tau-moduli at delta = 1/n for each n:
/// ratio = ||F_n f - f||_{p,q} / (tau_1(f, 1/n) + tau_2(f, 1/n)).
RatioReport theorem3_ratio_study(const ScalarField2D& field, const SigmoidalKernel& kernel,
                                 const std::vector<int>& ns, const MixedExponents& exps,
                                 int error_resolution = 256, int tau_resolution = 64);

/// Writes `x,y,value` rows (row-major over the grid) with 17 significant
/// digits, so re-parsing reproduces every double bit-for-bit.
void export_surface(const SampleMatrix& values, const Grid2D& grid,
                    const std::string& path);
void write_surface_csv(const SampleMatrix& values, const Grid2D& grid, std::ostream& out);

struct Surface {
    std::vector<double> xs;  // distinct x coordinates, file order
    std::vector<double> ys;
    SampleMatrix values;
};

Surface import_surface(const std::string& path);
Surface parse_surface_csv(std::istream& in);

void write_error_report_csv(const ErrorReport& report, std::ostream& out);
ErrorReport parse_error_report_csv(std::istream& in);

void write_ratio_report_csv(const RatioReport& report, std::ostream& out);
RatioReport parse_ratio_report_csv(std::istream& in);

}  // namespace nnsamp
