#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>

#include "ruled/lorentz.hpp"

namespace ruled {

/// Truncated derivative jet of a scalar function of one variable:
/// d[k] holds the k-th derivative at the expansion point, k <= order().
/// Arithmetic follows the Leibniz rule; the result order is the minimum of
/// the operand orders.
class Jet {
 public:
  static constexpr int kMaxOrder = 4;

  Jet() = default;
  Jet(std::initializer_list<double> derivs) : order_(static_cast<int>(derivs.size()) - 1) {
    std::copy(derivs.begin(), derivs.end(), d_.begin());
  }

  static Jet constant(double value, int order) {
    Jet j;
    j.order_ = order;
    j.d_[0] = value;
    return j;
  }
  /// The identity function x -> x expanded at x = at.
  static Jet variable(double at, int order) {
    Jet j = constant(at, order);
    if (order >= 1) j.d_[1] = 1.0;
    return j;
  }

  int order() const { return order_; }
  double value() const { return d_[0]; }
  double operator[](int k) const { return d_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return d_[static_cast<std::size_t>(k)]; }

  Jet derivative() const {
    Jet j;
    j.order_ = order_ - 1;
    for (int k = 0; k < order_; ++k) j[k] = (*this)[k + 1];
    return j;
  }
  Jet truncated(int order) const {
    Jet j = *this;
    j.order_ = std::min(order, order_);
    for (int k = j.order_ + 1; k <= kMaxOrder; ++k) j[k] = 0.0;
    return j;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    r.order_ = std::min(a.order_, b.order_);
    for (int k = 0; k <= r.order_; ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    r.order_ = std::min(a.order_, b.order_);
    for (int k = 0; k <= r.order_; ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (int k = 0; k <= r.order_; ++k) r[k] = -r[k];
    return r;
  }
  friend Jet operator*(const Jet& a, double s) {
    Jet r = a;
    for (int k = 0; k <= r.order_; ++k) r[k] *= s;
    return r;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    r.order_ = std::min(a.order_, b.order_);
    for (int n = 0; n <= r.order_; ++n) {
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += binomial(n, k) * a[k] * b[n - k];
      r[n] = acc;
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    r.order_ = std::min(a.order_, b.order_);
    for (int n = 0; n <= r.order_; ++n) {
      double acc = a[n];
      for (int k = 1; k <= n; ++k) acc -= binomial(n, k) * b[k] * r[n - k];
      r[n] = acc / b[0];
    }
    return r;
  }

  friend Jet sqrt(const Jet& g) {
    Jet r;
    r.order_ = g.order_;
    r[0] = std::sqrt(g[0]);
    for (int n = 1; n <= r.order_; ++n) {
      double acc = g[n];
      for (int k = 1; k < n; ++k) acc -= binomial(n, k) * r[k] * r[n - k];
      r[n] = acc / (2.0 * r[0]);
    }
    return r;
  }
  /// |g| for g bounded away from zero at the expansion point.
  friend Jet abs(const Jet& g) { return g[0] < 0.0 ? -g : g; }

 private:
  static double binomial(int n, int k) {
    static constexpr double table[kMaxOrder + 1][kMaxOrder + 1] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    return table[n][k];
  }

  std::array<double, kMaxOrder + 1> d_{};
  int order_ = 0;
};

/// Vector-valued jet: each component carries the same order.
struct JetVec {
  Jet x1, x2, x3;

  int order() const { return std::min({x1.order(), x2.order(), x3.order()}); }
  MVec3 at(int k) const { return {x1[k], x2[k], x3[k]}; }
  MVec3 value() const { return at(0); }
  JetVec derivative() const { return {x1.derivative(), x2.derivative(), x3.derivative()}; }
  JetVec truncated(int order) const { return {x1.truncated(order), x2.truncated(order), x3.truncated(order)}; }

  friend JetVec operator+(const JetVec& a, const JetVec& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend JetVec operator-(const JetVec& a, const JetVec& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend JetVec operator-(const JetVec& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend JetVec operator*(const JetVec& a, const Jet& s) { return {a.x1 * s, a.x2 * s, a.x3 * s}; }
  friend JetVec operator*(const Jet& s, const JetVec& a) { return a * s; }
  friend JetVec operator*(const JetVec& a, double s) { return {a.x1 * s, a.x2 * s, a.x3 * s}; }
  friend JetVec operator*(double s, const JetVec& a) { return a * s; }
  friend JetVec operator/(const JetVec& a, const Jet& s) { return {a.x1 / s, a.x2 / s, a.x3 / s}; }
};

inline Jet inner(const JetVec& x, const JetVec& y) { return -(x.x1 * y.x1) + x.x2 * y.x2 + x.x3 * y.x3; }

inline JetVec lorentz_cross(const JetVec& x, const JetVec& y) {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x1 * y.x3 - x.x3 * y.x1, x.x2 * y.x1 - x.x1 * y.x2};
}

}  // namespace ruled
