#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

using complexd = std::complex<double>;

/// Uniform rectangular grid including both endpoints. Point coordinates are
/// always produced by the affine formula, never by accumulated summation, so
/// repeated construction is bit-identical.
struct Grid2D {
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  int nx = 2, ny = 2;

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
  int size() const { return nx * ny; }
  int index(int i, int j) const { return i * ny + j; }  // row-major

  bool same_geometry(const Grid2D& o) const {
    return x_min == o.x_min && x_max == o.x_max && y_min == o.y_min &&
           y_max == o.y_max && nx == o.nx && ny == o.ny;
  }
};

inline Grid2D make_grid(double x_min, double x_max, double y_min, double y_max,
                        int nx, int ny) {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
        std::isfinite(y_max)))
    throw std::invalid_argument("make_grid: non-finite bounds");
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("make_grid: bounds must be ordered");
  if (nx < 2 || ny < 2)
    throw std::invalid_argument("make_grid: need at least 2 points per axis");
  return Grid2D{x_min, x_max, y_min, y_max, nx, ny};
}

struct SpaceTimeDomain {
  Grid2D grid;
  double t_max = 0.0;
};

inline SpaceTimeDomain make_domain(const Grid2D& grid, double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("make_domain: t_max must be positive");
  return SpaceTimeDomain{grid, t_max};
}

/// Complex-valued samples on a Grid2D, row-major (x index slow, y index fast).
struct ComplexField {
  Grid2D grid;
  std::vector<complexd> values;

  ComplexField() = default;
  explicit ComplexField(const Grid2D& g) : grid(g), values(g.size()) {}
  ComplexField(const Grid2D& g, std::vector<complexd> v)
      : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != g.size())
      throw std::invalid_argument("ComplexField: value count != nx*ny");
  }

  complexd& at(int i, int j) { return values[grid.index(i, j)]; }
  const complexd& at(int i, int j) const { return values[grid.index(i, j)]; }

  bool all_finite() const {
    for (const auto& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Builds a field by evaluating fn(x, y) at every grid point.
template <typename Fn>
ComplexField field_from_function(const Grid2D& g, Fn&& fn) {
  ComplexField f(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) f.at(i, j) = complexd(fn(g.x(i), g.y(j)));
  return f;
}

/// Trapezoidal quadrature of |f|^2 over the grid rectangle.
inline double norm_squared_integral(const ComplexField& f) {
  if (!f.all_finite())
    throw std::invalid_argument("norm_squared_integral: non-finite field");
  const Grid2D& g = f.grid;
  double acc = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double wx = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
    double row = 0.0;
    for (int j = 0; j < g.ny; ++j) {
      const double wy = (j == 0 || j == g.ny - 1) ? 0.5 : 1.0;
      row += wy * std::norm(f.at(i, j));
    }
    acc += wx * row;
  }
  return acc * g.dx() * g.dy();
}

/// Plain discrete 2-norm over grid samples (no quadrature weights), the usual
/// "relative L2 error" convention of the PINN literature.
inline double relative_l2(const ComplexField& pred, const ComplexField& ref) {
  if (!pred.grid.same_geometry(ref.grid))
    throw std::invalid_argument("relative_l2: grids differ");
  double num = 0.0, den = 0.0;
  for (size_t n = 0; n < ref.values.size(); ++n) {
    num += std::norm(pred.values[n] - ref.values[n]);
    den += std::norm(ref.values[n]);
  }
  if (den == 0.0)
    throw std::invalid_argument("relative_l2: reference has zero norm");
  return std::sqrt(num / den);
}

/// Bilinear interpolation of a field at an off-grid point. Throws when the
/// query lies outside the grid rectangle.
inline complexd bilinear(const ComplexField& f, double x, double y) {
  const Grid2D& g = f.grid;
  if (x < g.x_min - 1e-12 || x > g.x_max + 1e-12 || y < g.y_min - 1e-12 ||
      y > g.y_max + 1e-12)
    throw std::out_of_range("bilinear: query point outside field domain");
  double tx = (x - g.x_min) / g.dx();
  double ty = (y - g.y_min) / g.dy();
  int i = static_cast<int>(std::floor(tx));
  int j = static_cast<int>(std::floor(ty));
  i = std::max(0, std::min(i, g.nx - 2));
  j = std::max(0, std::min(j, g.ny - 2));
  const double ax = tx - i, ay = ty - j;
  return (1 - ax) * (1 - ay) * f.at(i, j) + ax * (1 - ay) * f.at(i + 1, j) +
         (1 - ax) * ay * f.at(i, j + 1) + ax * ay * f.at(i + 1, j + 1);
}

}  // namespace qdl
