#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace proxflow {

// Small dense vector in R^d. Dimension is a runtime value; all built-in
// nonconvex domains are planar but convex kinds work in any d.
struct Vec {
  std::vector<double> c;

  Vec() = default;
  explicit Vec(int d) : c(static_cast<std::size_t>(d), 0.0) {}
  Vec(std::initializer_list<double> xs) : c(xs) {}
  explicit Vec(std::vector<double> xs) : c(std::move(xs)) {}

  int dim() const { return static_cast<int>(c.size()); }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec& operator+=(const Vec& o) {
    assert(dim() == o.dim());
    for (int i = 0; i < dim(); ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    assert(dim() == o.dim());
    for (int i = 0; i < dim(); ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (auto& x : c) x *= s;
    return *this;
  }

  void set_zero() {
    for (auto& x : c) x = 0.0;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
};

inline double dot(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double dist2(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Vec& a, const Vec& b) { return std::sqrt(dist2(a, b)); }

inline Vec normalized(const Vec& a) {
  const double n = norm(a);
  assert(n > 0.0);
  return (1.0 / n) * a;
}

inline bool finite(const Vec& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (!std::isfinite(a[i])) return false;
  return true;
}

// Strict lexicographic order; used as the deterministic tie-break for
// ambiguous projections.
inline bool lex_less(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace proxflow
