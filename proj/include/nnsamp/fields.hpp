#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnsamp {

/// Axis-aligned rectangle with nonempty interior.
struct Rect {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    double width() const { return x_hi - x_lo; }
    double height() const { return y_hi - y_lo; }

    bool contains(double x, double y) const {
        return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi;
    }

    void validate() const {
        if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
            throw std::domain_error("Rect: empty or inverted interior");
        }
    }
};

enum class Continuity { continuous, piecewise_with_jumps };

/// Raised when a field evaluator produces a non-finite value; carries the node.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double x, double y)
        : std::runtime_error(what), node_x(x), node_y(y) {}
    double node_x;
    double node_y;
};

/// A real-valued function handle on a rectangle (or on all of the plane when
/// `domain` is unset). Evaluation checks the domain and rejects non-finite
/// results.
struct ScalarField2D {
    std::function<double(double, double)> evaluator;
    Continuity continuity = Continuity::continuous;
    std::optional<double> sup_bound;   // known bound on |f|, if any
    std::optional<Rect> domain;        // unset: defined everywhere

    double operator()(double x, double y) const;
};

ScalarField2D constant_field(double c);

/// Uniform midpoint grid: nodes sit at cell centers, strictly inside the rect.
struct Grid2D {
    Rect rect;
    int nx = 1;
    int ny = 1;

    double dx() const { return rect.width() / nx; }
    double dy() const { return rect.height() / ny; }
    double x(int i) const { return rect.x_lo + (i + 0.5) * dx(); }
    double y(int j) const { return rect.y_lo + (j + 0.5) * dy(); }
    double cell_area() const { return dx() * dy(); }
};

Grid2D make_grid(const Rect& rect, int nx, int ny);

/// Dense row-major matrix of samples; index (i, j) walks x then y.
class SampleMatrix {
public:
    SampleMatrix() = default;
    SampleMatrix(int nx, int ny) : nx_(nx), ny_(ny), data_(size_t(nx) * ny, 0.0) {}

    double& at(int i, int j) { return data_[size_t(i) * ny_ + j]; }
    double at(int i, int j) const { return data_[size_t(i) * ny_ + j]; }

    int nx() const { return nx_; }
    int ny() const { return ny_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const SampleMatrix& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && data_ == o.data_;
    }

private:
    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> data_;
};

/// Samples the field at every grid node. Rows are evaluated in parallel;
/// entry values are identical to the serial reference.
SampleMatrix sample_field(const ScalarField2D& field, const Grid2D& grid);

namespace serial {
SampleMatrix sample_field(const ScalarField2D& field, const Grid2D& grid);
}

}  // namespace nnsamp
