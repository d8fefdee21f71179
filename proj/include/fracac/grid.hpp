#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fracac {

/// Uniform grid on the unit square or cube with M intervals per axis.
/// A 2D grid is stored as a 3D array whose third extent is 1 (no z frame).
struct GridShape {
  int dims = 2;
  std::array<int, 3> intervals{0, 0, 0};

  static GridShape square(int mx, int my) { return {2, {mx, my, 0}}; }
  static GridShape cube(int mx, int my, int mz) { return {3, {mx, my, mz}}; }

  /// Throws std::domain_error for dims outside {2,3} or an axis with fewer than 2 intervals.
  void validate() const;

  std::array<std::size_t, 3> extents() const {
    return {static_cast<std::size_t>(intervals[0]) + 1, static_cast<std::size_t>(intervals[1]) + 1,
            dims == 3 ? static_cast<std::size_t>(intervals[2]) + 1 : 1};
  }
  std::size_t size() const {
    const auto e = extents();
    return e[0] * e[1] * e[2];
  }
  double meshsize(int axis) const { return 1.0 / intervals[static_cast<std::size_t>(axis)]; }
  double coordinate(int axis, std::size_t index) const {
    return static_cast<double>(index) / intervals[static_cast<std::size_t>(axis)];
  }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k = 0) const {
    const auto e = extents();
    return (i * e[1] + j) * e[2] + k;
  }
  /// True when (i,j,k) lies on the homogeneous Dirichlet frame.
  bool on_boundary(std::size_t i, std::size_t j, std::size_t k = 0) const;

  bool operator==(const GridShape&) const = default;
};

/// Solution values on a GridShape, boundary frame included, at a given time.
class Field {
public:
  Field() = default;
  explicit Field(GridShape shape, double time = 0.0);

  const GridShape& shape() const { return shape_; }
  int dims() const { return shape_.dims; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  double& at(std::size_t i, std::size_t j, std::size_t k = 0) { return values_[shape_.index(i, j, k)]; }
  double at(std::size_t i, std::size_t j, std::size_t k = 0) const { return values_[shape_.index(i, j, k)]; }

  /// Max |u| over interior nodes.
  double max_abs() const;
  /// True when every boundary-frame value is exactly zero.
  bool boundary_is_zero() const;

  /// Calls fn(i, j, k) for every interior node in storage order.
  template <class Fn>
  void for_each_interior(Fn&& fn) const {
    const auto e = shape_.extents();
    const std::size_t k_lo = shape_.dims == 3 ? 1 : 0;
    const std::size_t k_hi = shape_.dims == 3 ? e[2] - 1 : 1;
    for (std::size_t i = 1; i + 1 < e[0]; ++i)
      for (std::size_t j = 1; j + 1 < e[1]; ++j)
        for (std::size_t k = k_lo; k < k_hi; ++k) fn(i, j, k);
  }

private:
  GridShape shape_;
  double time_ = 0.0;
  std::vector<double> values_;
};

/// Fills a field from f(x, y, z) at every node (z = 0 in 2D), then zeroes the frame.
template <class Fn>
Field sample_field(const GridShape& shape, double time, Fn&& f) {
  Field out(shape, time);
  out.for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
    const double z = shape.dims == 3 ? shape.coordinate(2, k) : 0.0;
    out.at(i, j, k) = f(shape.coordinate(0, i), shape.coordinate(1, j), z);
  });
  return out;
}

}  // namespace fracac
