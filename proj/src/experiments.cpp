#include "nnsamp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "nnsamp/nn_operator.hpp"
#include "nnsamp/smoothness.hpp"

namespace nnsamp {

namespace {

constexpr Rect kSquare{-1.0, 1.0, -1.0, 1.0};

double f_expr(double x, double y) {
    return x * x * std::sin(x + y) + y * y * std::cos(x * y);
}

// 17 significant digits: re-parsing reproduces the double exactly.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::runtime_error("CSV: expected a number, got '" + s + "'");
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void expect_header(const std::string& line, const std::string& wanted,
                   const char* what) {
    std::string clean = line;
    clean.erase(std::remove(clean.begin(), clean.end(), '\r'), clean.end());
    if (clean != wanted) {
        throw std::runtime_error(std::string("CSV: bad ") + what + " header: '" + clean + "'");
    }
}

}  // namespace

ScalarField2D test_function_f() {
    ScalarField2D field;
    field.evaluator = [](double x, double y) { return f_expr(x, y); };
    field.continuity = Continuity::continuous;
    return field;
}

ScalarField2D test_function_g() {
    ScalarField2D field;
    field.evaluator = [](double x, double y) {
        return x > 0.0 ? f_expr(x, y) + 1.0 : -f_expr(x, y) - 1.0;
    };
    field.continuity = Continuity::piecewise_with_jumps;
    return field;
}

ErrorReport error_table(const std::vector<int>& ns, const std::vector<KernelKind>& kernels,
                        const MixedExponents& exps, int resolution) {
    if (ns.empty()) throw std::domain_error("error_table: ns is empty");
    if (kernels.empty()) throw std::domain_error("error_table: kernels is empty");
    if (resolution < 8) throw std::domain_error("error_table: resolution < 8");

    const Grid2D grid = make_grid(kSquare, resolution, resolution);
    const ScalarField2D f = test_function_f();
    const ScalarField2D g = test_function_g();
    const SampleMatrix f_true = sample_field(f, grid);
    const SampleMatrix g_true = sample_field(g, grid);

    ErrorReport report;
    report.meta.grid_resolution = resolution;
    report.meta.cell_probes = 5;

    auto error_for = [&](const ScalarField2D& field, const SampleMatrix& truth,
                         const NnOperatorConfig& cfg) {
        SampleMatrix diff = nn_apply_grid(field, cfg, grid);
        for (size_t idx = 0; idx < diff.data().size(); ++idx) {
            diff.data()[idx] -= truth.data()[idx];
        }
        // inner q-integral along x, the axis carrying g's jump
        return lpq_norm_from_samples_inner_x(diff, grid, exps);
    };

    for (KernelKind kind : kernels) {
        const SigmoidalKernel kernel =
            kind == KernelKind::logistic ? logistic_kernel() : tanh_kernel();
        report.meta.truncation_radius = kernel.truncation_radius;
        for (int n : ns) {
            const NnOperatorConfig cfg{n, kernel};
            ErrorRow row;
            row.n = n;
            row.kernel = kind;
            row.p = exps.p;
            row.q = exps.q;
            row.error_f = error_for(f, f_true, cfg);
            row.error_g = error_for(g, g_true, cfg);
            report.rows.push_back(row);
        }
    }
    return report;
}

bool RatioReport::ratio_bounded(double factor) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    int live = 0;
    for (const RatioRow& row : rows) {
        if (row.skipped) continue;
        lo = std::min(lo, row.ratio);
        hi = std::max(hi, row.ratio);
        ++live;
    }
    if (live < 2) return true;
    return hi <= factor * lo;
}

RatioReport theorem3_ratio_study(const ScalarField2D& field, const SigmoidalKernel& kernel,
                                 const std::vector<int>& ns, const MixedExponents& exps,
                                 int error_resolution, int tau_resolution) {
    if (!exps.theorem_valid) {
        throw std::domain_error("theorem3_ratio_study: requires q <= p");
    }
    if (ns.empty()) throw std::domain_error("theorem3_ratio_study: ns is empty");

    const Grid2D grid = make_grid(kSquare, error_resolution, error_resolution);
    const SampleMatrix truth = sample_field(field, grid);

    RatioReport report;
    for (int n : ns) {
        RatioRow row;
        row.n = n;

        SampleMatrix diff = nn_apply_grid(field, NnOperatorConfig{n, kernel}, grid);
        for (size_t idx = 0; idx < diff.data().size(); ++idx) {
            diff.data()[idx] -= truth.data()[idx];
        }
        row.error = lpq_norm_from_samples(diff, grid, exps);

        const double delta = 1.0 / n;
        row.tau1 = tau_modulus(field, ModulusSpec{1, delta}, kSquare, exps, tau_resolution);
        row.tau2 = tau_modulus(field, ModulusSpec{2, delta}, kSquare, exps, tau_resolution);

        if (row.tau1 + row.tau2 > 0.0) {
            row.ratio = row.error / (row.tau1 + row.tau2);
        } else {
            row.skipped = true;
        }
        report.rows.push_back(row);
    }
    return report;
}

void write_surface_csv(const SampleMatrix& values, const Grid2D& grid, std::ostream& out) {
    out << "x,y,value\n";
    for (int i = 0; i < values.nx(); ++i) {
        const std::string xs = fmt(grid.x(i));
        for (int j = 0; j < values.ny(); ++j) {
            out << xs << ',' << fmt(grid.y(j)) << ',' << fmt(values.at(i, j)) << '\n';
        }
    }
}

void export_surface(const SampleMatrix& values, const Grid2D& grid,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export_surface: cannot open '" + path + "'");
    write_surface_csv(values, grid, out);
    out.flush();
    if (!out) throw std::runtime_error("export_surface: write failed for '" + path + "'");
}

Surface parse_surface_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("CSV: empty surface file");
    expect_header(line, "x,y,value", "surface");

    std::vector<double> xs, ys, vals;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != 3) throw std::runtime_error("CSV: surface row needs 3 columns");
        xs.push_back(parse_double(cells[0]));
        ys.push_back(parse_double(cells[1]));
        vals.push_back(parse_double(cells[2]));
    }
    if (vals.empty()) throw std::runtime_error("CSV: surface has no data rows");

    // Row-major layout: the leading run of equal x values spans one x row.
    size_t ny = 1;
    while (ny < xs.size() && xs[ny] == xs[0]) ++ny;
    if (xs.size() % ny != 0) throw std::runtime_error("CSV: ragged surface grid");
    const size_t nx = xs.size() / ny;

    Surface surface;
    surface.values = SampleMatrix(int(nx), int(ny));
    surface.xs.reserve(nx);
    surface.ys.assign(ys.begin(), ys.begin() + ny);
    for (size_t i = 0; i < nx; ++i) {
        surface.xs.push_back(xs[i * ny]);
        for (size_t j = 0; j < ny; ++j) {
            surface.values.at(int(i), int(j)) = vals[i * ny + j];
        }
    }
    return surface;
}

Surface import_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("import_surface: cannot open '" + path + "'");
    return parse_surface_csv(in);
}

void write_error_report_csv(const ErrorReport& report, std::ostream& out) {
    out << "# grid_resolution=" << report.meta.grid_resolution << '\n';
    out << "# cell_probes=" << report.meta.cell_probes << '\n';
    out << "# truncation_radius=" << fmt(report.meta.truncation_radius) << '\n';
    out << "n,kernel,p,q,error_f,error_g\n";
    for (const ErrorRow& row : report.rows) {
        out << row.n << ',' << kernel_name(row.kernel) << ',' << fmt(row.p) << ','
            << fmt(row.q) << ',' << fmt(row.error_f) << ',' << fmt(row.error_g) << '\n';
    }
}

ErrorReport parse_error_report_csv(std::istream& in) {
    ErrorReport report;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            std::string key = body.substr(0, eq);
            key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
            std::string value = body.substr(eq + 1);
            if (key == "grid_resolution") report.meta.grid_resolution = int(parse_double(value));
            else if (key == "cell_probes") report.meta.cell_probes = int(parse_double(value));
            else if (key == "truncation_radius") report.meta.truncation_radius = parse_double(value);
            continue;
        }
        if (!header_seen) {
            expect_header(line, "n,kernel,p,q,error_f,error_g", "error report");
            header_seen = true;
            continue;
        }
        auto cells = split_csv(line);
        if (cells.size() != 6) throw std::runtime_error("CSV: error row needs 6 columns");
        ErrorRow row;
        row.n = int(parse_double(cells[0]));
        row.kernel = kernel_from_name(cells[1]);
        row.p = parse_double(cells[2]);
        row.q = parse_double(cells[3]);
        row.error_f = parse_double(cells[4]);
        row.error_g = parse_double(cells[5]);
        report.rows.push_back(row);
    }
    if (!header_seen) throw std::runtime_error("CSV: missing error report header");
    return report;
}

void write_ratio_report_csv(const RatioReport& report, std::ostream& out) {
    out << "n,error,tau1,tau2,ratio,skipped\n";
    for (const RatioRow& row : report.rows) {
        out << row.n << ',' << fmt(row.error) << ',' << fmt(row.tau1) << ','
            << fmt(row.tau2) << ',' << fmt(row.ratio) << ',' << (row.skipped ? 1 : 0)
            << '\n';
    }
}

RatioReport parse_ratio_report_csv(std::istream& in) {
    RatioReport report;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("CSV: empty ratio report");
    expect_header(line, "n,error,tau1,tau2,ratio,skipped", "ratio report");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != 6) throw std::runtime_error("CSV: ratio row needs 6 columns");
        RatioRow row;
        row.n = int(parse_double(cells[0]));
        row.error = parse_double(cells[1]);
        row.tau1 = parse_double(cells[2]);
        row.tau2 = parse_double(cells[3]);
        row.ratio = parse_double(cells[4]);
        row.skipped = parse_double(cells[5]) != 0.0;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace nnsamp
