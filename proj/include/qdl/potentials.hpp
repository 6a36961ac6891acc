#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>

#include "qdl/grid.hpp"

namespace qdl {

struct ZeroPotential {};

struct HarmonicPotential {};  // U = x^2 + y^2

/// Four Gaussian wells at (+-x0, +-y0): U = v0 * sum_j exp(-k |r - r_j|^2).
struct QuadWellParams {
  double v0 = -0.5;  // depth, must be < 0
  double k = 0.1;    // inverse squared width, must be > 0
  double x0 = 4.0;   // well-center offsets, must be > 0
  double y0 = 4.0;
};

/// Harmonic-oscillator-Gaussian potential with gain-loss imaginary part:
///   V = r^2 (1 + e^{-r^2}) + v0 (e^{-2x^2} + e^{-2y^2})
///   W = w0 (x e^{-x^2} + y e^{-y^2})
struct PtHogParams {
  double v0 = -1.0 / 16.0;
  double w0 = 1.0;
};

struct TabulatedPotential {
  ComplexField table;
};

using PotentialSpec = std::variant<ZeroPotential, HarmonicPotential,
                                   QuadWellParams, PtHogParams,
                                   TabulatedPotential>;

inline void validate(const QuadWellParams& p) {
  if (!(p.v0 < 0.0)) throw std::invalid_argument("QuadWell: v0 must be < 0");
  if (!(p.k > 0.0)) throw std::invalid_argument("QuadWell: k must be > 0");
  if (!(p.x0 > 0.0) || !(p.y0 > 0.0))
    throw std::invalid_argument("QuadWell: x0, y0 must be > 0");
}

inline void validate(const PotentialSpec& spec) {
  if (const auto* qw = std::get_if<QuadWellParams>(&spec)) validate(*qw);
  if (const auto* tab = std::get_if<TabulatedPotential>(&spec))
    if (!tab->table.all_finite())
      throw std::invalid_argument("Tabulated potential: non-finite values");
}

inline double eval_quadwell(const QuadWellParams& p, double x, double y) {
  double s = 0.0;
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0}) {
      const double ddx = x - sx * p.x0;
      const double ddy = y - sy * p.y0;
      s += std::exp(-p.k * (ddx * ddx + ddy * ddy));
    }
  return p.v0 * s;
}

inline complexd eval_pthog(const PtHogParams& p, double x, double y) {
  const double r2 = x * x + y * y;
  const double ex = std::exp(-x * x), ey = std::exp(-y * y);
  const double v = r2 * (1.0 + std::exp(-r2)) + p.v0 * (ex * ex + ey * ey);
  const double w = p.w0 * (x * ex + y * ey);
  return {v, w};
}

inline complexd eval_potential(const PotentialSpec& spec, double x, double y) {
  return std::visit(
      [&](const auto& p) -> complexd {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ZeroPotential>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, HarmonicPotential>) {
          return x * x + y * y;
        } else if constexpr (std::is_same_v<T, QuadWellParams>) {
          return eval_quadwell(p, x, y);
        } else if constexpr (std::is_same_v<T, PtHogParams>) {
          return eval_pthog(p, x, y);
        } else {
          return bilinear(p.table, x, y);
        }
      },
      spec);
}

inline ComplexField sample_potential(const PotentialSpec& spec,
                                     const Grid2D& g) {
  ComplexField u(g);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) u.at(i, j) = eval_potential(spec, g.x(i), g.y(j));
  return u;
}

/// Max over the grid of |U(-r) - conj(U(r))|; zero for an exactly
/// PT-symmetric potential. The grid must be symmetric about the origin so
/// that -r lands on a grid point.
inline double pt_violation(const PotentialSpec& spec, const Grid2D& g) {
  if (std::abs(g.x_min + g.x_max) > 1e-12 * (std::abs(g.x_min) + 1.0) ||
      std::abs(g.y_min + g.y_max) > 1e-12 * (std::abs(g.y_min) + 1.0))
    throw std::invalid_argument("pt_violation: grid not symmetric about origin");
  const ComplexField u = sample_potential(spec, g);
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      const complexd mirrored = u.at(g.nx - 1 - i, g.ny - 1 - j);
      worst = std::max(worst, std::abs(mirrored - std::conj(u.at(i, j))));
    }
  return worst;
}

}  // namespace qdl
