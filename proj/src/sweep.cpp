#include "fracac/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fracac {
namespace {

constexpr std::size_t kGroupColumns = 64;

struct PencilLayout {
  std::size_t stride = 0;          // distance between consecutive nodes along the axis
  std::size_t count = 0;           // number of interior pencils
  std::array<std::size_t, 2> lo{};  // interior range of the two other axes
  std::array<std::size_t, 2> len{};
  std::array<std::size_t, 2> step{};
};

PencilLayout layout_for(const GridShape& shape, int axis) {
  const auto e = shape.extents();
  const std::array<std::size_t, 3> strides{e[1] * e[2], e[2], 1};
  PencilLayout l;
  l.stride = strides[static_cast<std::size_t>(axis)];
  int slot = 0;
  for (int a = 0; a < 3; ++a) {
    if (a == axis) continue;
    const auto ua = static_cast<std::size_t>(a);
    const bool active = a < shape.dims;
    l.lo[slot] = active ? 1 : 0;
    l.len[slot] = active ? e[ua] - 2 : 1;
    l.step[slot] = strides[ua];
    ++slot;
  }
  l.count = l.len[0] * l.len[1];
  return l;
}

void process_groups(Field& field, const PencilLayout& l, const DirectionOperator& op, SweepKind kind,
                    std::size_t first_group, std::size_t last_group) {
  const std::size_t n = op.interior();
  std::vector<double> in(n * kGroupColumns), out(n * kGroupColumns);
  std::vector<std::size_t> base(kGroupColumns);
  double* data = field.values().data();

  for (std::size_t g = first_group; g < last_group; ++g) {
    const std::size_t p0 = g * kGroupColumns;
    const std::size_t ncols = std::min(kGroupColumns, l.count - p0);
    for (std::size_t c = 0; c < ncols; ++c) {
      const std::size_t p = p0 + c;
      base[c] = (l.lo[0] + p / l.len[1]) * l.step[0] + (l.lo[1] + p % l.len[1]) * l.step[1];
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < ncols; ++c) in[r * ncols + c] = data[base[c] + (r + 1) * l.stride];

    const double* result = in.data();
    switch (kind) {
      case SweepKind::explicit_dense:
        op.apply_explicit_block(in, out, ncols);
        result = out.data();
        break;
      case SweepKind::explicit_fast:
        op.apply_explicit_fast_block(in, out, ncols);
        result = out.data();
        break;
      case SweepKind::implicit_solve:
        op.solve_block(in, ncols);
        break;
    }

    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < ncols; ++c) data[base[c] + (r + 1) * l.stride] = result[r * ncols + c];
  }
}

}  // namespace

void sweep_axis(Field& field, int axis, const DirectionOperator& op, SweepKind kind, int threads) {
  const GridShape& shape = field.shape();
  if (axis < 0 || axis >= shape.dims) throw std::invalid_argument("sweep axis out of range");
  if (op.intervals() != shape.intervals[static_cast<std::size_t>(axis)])
    throw std::invalid_argument("operator size does not match field along the sweep axis");

  const PencilLayout l = layout_for(shape, axis);
  const std::size_t groups = (l.count + kGroupColumns - 1) / kGroupColumns;
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, groups);

  if (workers == 1) {
    process_groups(field, l, op, kind, 0, groups);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = groups * w / workers;
    const std::size_t hi = groups * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] { process_groups(field, l, op, kind, lo, hi); });
  }
}

}  // namespace fracac
