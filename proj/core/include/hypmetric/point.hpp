#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hypmetric {

/// A point of R^n. The last coordinate plays the role of the e_n axis
/// (the half-space is {x : x_n > 0}).
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, 0.0) {}
  Point(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  double last() const { return coords_.back(); }
  double& last() { return coords_.back(); }

  std::span<const double> coords() const noexcept { return coords_; }
  bool is_finite() const noexcept;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

  friend bool operator==(const Point&, const Point&) = default;

  /// Unit vector e_i of R^dim.
  static Point basis(std::size_t dim, std::size_t i);

 private:
  std::vector<double> coords_;
};

inline bool Point::is_finite() const noexcept {
  for (double v : coords_)
    if (!std::isfinite(v)) return false;
  return true;
}

inline Point& Point::operator+=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

inline Point& Point::operator-=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

inline Point& Point::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

inline Point Point::basis(std::size_t dim, std::size_t i) {
  Point e(dim);
  e[i] = 1.0;
  return e;
}

inline Point operator+(Point a, const Point& b) { return a += b; }
inline Point operator-(Point a, const Point& b) { return a -= b; }
inline Point operator*(Point a, double s) { return a *= s; }
inline Point operator*(double s, Point a) { return a *= s; }

inline double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_norm(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(squared_norm(a)); }

inline double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

/// `a + t (b - a)`, evaluated so that t = 0 and t = 1 return the endpoints exactly.
inline Point lerp(const Point& a, const Point& b, double t) {
  Point out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

/// "x1,x2,...". Throws ParseError naming the bad token.
Point parse_point(const std::string& text);
std::string to_string(const Point& p);

}  // namespace hypmetric
