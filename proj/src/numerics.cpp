#include "ruled/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ruled::numerics {

double gauss_legendre5(const std::function<double(double)>& f, double a, double b) {
  static constexpr std::array<double, 5> nodes = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                                  0.9061798459386640};
  static constexpr std::array<double, 5> weights = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                                    0.2369268850561891, 0.2369268850561891};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(mid + half * nodes[i]);
  return acc * half;
}

double composite_simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  const std::size_t panels = n - 1;
  std::size_t simpson_end = panels % 2 == 0 ? n - 1 : n - 4;
  double acc = 0.0;
  if (panels % 2 == 1) {
    if (n == 4) return 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3]);
    acc += 3.0 * h / 8.0 * (y[n - 4] + 3.0 * y[n - 3] + 3.0 * y[n - 2] + y[n - 1]);
  }
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) acc += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  return acc;
}

std::vector<double> cumulative_integral(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  if (n < 4) {
    for (std::size_t i = 1; i < n; ++i) out[i] = out[i - 1] + 0.5 * h * (y[i - 1] + y[i]);
    return out;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double panel;
    if (i == 0) {
      panel = h / 24.0 * (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]);
    } else if (i + 2 >= n) {
      panel = h / 24.0 * (y[i - 2] - 5.0 * y[i - 1] + 19.0 * y[i] + 9.0 * y[i + 1]);
    } else {
      panel = h / 24.0 * (-y[i - 1] + 13.0 * y[i] + 13.0 * y[i + 1] - y[i + 2]);
    }
    out[i + 1] = out[i] + panel;
  }
  return out;
}

std::vector<std::vector<double>> fornberg_weights(double x0, std::span<const double> nodes, int max_order) {
  const int n = static_cast<int>(nodes.size());
  const int m = max_order;
  std::vector<std::vector<double>> c(static_cast<std::size_t>(m + 1), std::vector<double>(nodes.size(), 0.0));
  auto C = [&](int k, int j) -> double& { return c[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]; };
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  C(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) C(k, i) = c1 * (k * C(k - 1, i - 1) - c5 * C(k, i - 1)) / c2;
        C(0, i) = -c1 * c5 * C(0, i - 1) / c2;
      }
      for (int k = mn; k >= 1; --k) C(k, j) = (c4 * C(k, j) - k * C(k - 1, j)) / c3;
      C(0, j) = c4 * C(0, j) / c3;
    }
    c1 = c2;
  }
  return c;
}

std::size_t window_start(std::span<const double> xs, double x, std::size_t width) {
  const std::size_t n = xs.size();
  if (n <= width) return 0;
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::ptrdiff_t right = it - xs.begin();
  std::ptrdiff_t start = right - static_cast<std::ptrdiff_t>((width + 1) / 2);
  start = std::clamp<std::ptrdiff_t>(start, 0, static_cast<std::ptrdiff_t>(n - width));
  return static_cast<std::size_t>(start);
}

namespace {

std::array<double, 4> lagrange4(std::span<const double> xs, std::size_t start, double x) {
  std::array<double, 4> w{};
  for (std::size_t j = 0; j < 4; ++j) {
    double num = 1.0;
    double den = 1.0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k == j) continue;
      num *= x - xs[start + k];
      den *= xs[start + j] - xs[start + k];
    }
    w[j] = num / den;
  }
  return w;
}

template <typename T>
T interpolate_impl(std::span<const double> xs, std::span<const T> ys, double x) {
  const std::size_t n = xs.size();
  if (n == 1) return ys[0];
  if (n < 4) {
    const std::size_t i = std::min<std::size_t>(window_start(xs, x, 2), n - 2);
    const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return ys[i] * (1.0 - t) + ys[i + 1] * t;
  }
  const std::size_t start = window_start(xs, x, 4);
  const auto w = lagrange4(xs, start, x);
  T acc = ys[start] * w[0];
  for (std::size_t j = 1; j < 4; ++j) acc = acc + ys[start + j] * w[j];
  return acc;
}

}  // namespace

double interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
  return interpolate_impl<double>(xs, ys, x);
}

MVec3 interpolate(std::span<const double> xs, std::span<const MVec3> ys, double x) {
  return interpolate_impl<MVec3>(xs, ys, x);
}

bool strictly_increasing(std::span<const double> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) return false;
  }
  return true;
}

}  // namespace ruled::numerics
