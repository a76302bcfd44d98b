#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ruled/lorentz.hpp"

namespace ruled::numerics {

/// Five-point Gauss-Legendre rule on [a, b].
double gauss_legendre5(const std::function<double(double)>& f, double a, double b);

/// Composite Simpson rule over uniformly spaced samples. An even number of
/// panels is integrated by Simpson; an odd count closes with the 3/8 rule.
double composite_simpson(std::span<const double> y, double h);

/// Running integral I[i] = integral of y from x[0] to x[i] on a uniform grid,
/// using local cubic panels (fourth order at every node).
std::vector<double> cumulative_integral(std::span<const double> y, double h);

/// Finite-difference weights (Fornberg) for derivatives 0..max_order at x0
/// from arbitrary distinct nodes. weights[m][j] multiplies f(nodes[j]).
std::vector<std::vector<double>> fornberg_weights(double x0, std::span<const double> nodes, int max_order);

/// Fourth-order central stencils on a uniform grid, valid for interior index
/// i with the full stencil available (two points each side for the first and
/// second derivative, three for the third).
template <typename T>
T central_first(std::span<const T> y, std::size_t i, double h) {
  return (y[i - 2] - y[i - 1] * 8.0 + y[i + 1] * 8.0 - y[i + 2]) * (1.0 / (12.0 * h));
}
template <typename T>
T central_second(std::span<const T> y, std::size_t i, double h) {
  return (y[i - 2] * -1.0 + y[i - 1] * 16.0 - y[i] * 30.0 + y[i + 1] * 16.0 - y[i + 2]) * (1.0 / (12.0 * h * h));
}
template <typename T>
T central_third(std::span<const T> y, std::size_t i, double h) {
  return (y[i - 3] * (1.0 / 8.0) - y[i - 2] + y[i - 1] * (13.0 / 8.0) - y[i + 1] * (13.0 / 8.0) + y[i + 2] -
          y[i + 3] * (1.0 / 8.0)) *
         (1.0 / (h * h * h));
}

/// Index of the first node of a window of `width` consecutive nodes centred
/// on x within the strictly increasing table xs.
std::size_t window_start(std::span<const double> xs, double x, std::size_t width);

/// Local cubic (four-point Lagrange) interpolation on a strictly increasing
/// table. Extrapolates with the boundary cubic outside the table.
double interpolate(std::span<const double> xs, std::span<const double> ys, double x);
MVec3 interpolate(std::span<const double> xs, std::span<const MVec3> ys, double x);

/// True if xs is strictly increasing.
bool strictly_increasing(std::span<const double> xs);

}  // namespace ruled::numerics
