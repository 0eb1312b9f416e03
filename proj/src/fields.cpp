#include "nnsamp/fields.hpp"

#include <cmath>

#include "row_parallel.hpp"

namespace nnsamp {

double ScalarField2D::operator()(double x, double y) const {
    if (domain && !domain->contains(x, y)) {
        throw std::domain_error("ScalarField2D: evaluation at (" + std::to_string(x) +
                                ", " + std::to_string(y) + ") outside the field's rectangle");
    }
    double value = evaluator(x, y);
    if (!std::isfinite(value)) {
        throw EvaluationError("ScalarField2D: non-finite value at (" + std::to_string(x) +
                                  ", " + std::to_string(y) + ")",
                              x, y);
    }
    return value;
}

ScalarField2D constant_field(double c) {
    ScalarField2D field;
    field.evaluator = [c](double, double) { return c; };
    field.continuity = Continuity::continuous;
    field.sup_bound = std::abs(c);
    return field;
}

Grid2D make_grid(const Rect& rect, int nx, int ny) {
    rect.validate();
    if (nx < 1 || ny < 1) throw std::domain_error("make_grid: nx and ny must be >= 1");
    return Grid2D{rect, nx, ny};
}

namespace {

SampleMatrix sample_field_impl(const ScalarField2D& field, const Grid2D& grid,
                               bool parallel) {
    SampleMatrix out(grid.nx, grid.ny);
    detail::for_each_row(grid.nx, parallel, [&](int i) {
        const double x = grid.x(i);
        for (int j = 0; j < grid.ny; ++j) {
            out.at(i, j) = field(x, grid.y(j));
        }
    });
    return out;
}

}  // namespace

SampleMatrix sample_field(const ScalarField2D& field, const Grid2D& grid) {
    return sample_field_impl(field, grid, true);
}

namespace serial {
SampleMatrix sample_field(const ScalarField2D& field, const Grid2D& grid) {
    return sample_field_impl(field, grid, false);
}
}  // namespace serial

}  // namespace nnsamp
