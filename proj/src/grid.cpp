#include "fracac/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracac {

void GridShape::validate() const {
  if (dims != 2 && dims != 3) throw std::domain_error("dims must be 2 or 3, got " + std::to_string(dims));
  for (int a = 0; a < dims; ++a)
    if (intervals[static_cast<std::size_t>(a)] < 2)
      throw std::domain_error("axis " + std::to_string(a) + " needs at least 2 intervals");
}

bool GridShape::on_boundary(std::size_t i, std::size_t j, std::size_t k) const {
  const auto e = extents();
  if (i == 0 || i + 1 == e[0] || j == 0 || j + 1 == e[1]) return true;
  return dims == 3 && (k == 0 || k + 1 == e[2]);
}

Field::Field(GridShape shape, double time) : shape_(shape), time_(time) {
  shape_.validate();
  values_.assign(shape_.size(), 0.0);
}

double Field::max_abs() const {
  double m = 0.0;
  bool nan = false;
  for_each_interior([&](std::size_t i, std::size_t j, std::size_t k) {
    const double v = std::abs(at(i, j, k));
    if (std::isnan(v)) nan = true;
    m = std::max(m, v);
  });
  return nan ? std::nan("") : m;
}

bool Field::boundary_is_zero() const {
  const auto e = shape_.extents();
  for (std::size_t i = 0; i < e[0]; ++i)
    for (std::size_t j = 0; j < e[1]; ++j)
      for (std::size_t k = 0; k < e[2]; ++k)
        if (shape_.on_boundary(i, j, k) && at(i, j, k) != 0.0) return false;
  return true;
}

}  // namespace fracac
