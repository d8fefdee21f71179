#pragma once

#include "fracac/direction_operator.hpp"
#include "fracac/grid.hpp"

namespace fracac {

enum class SweepKind {
  explicit_dense,  ///< multiply every pencil by A + beta*Delta
  explicit_fast,   ///< same product through the Toeplitz FFT path
  implicit_solve,  ///< solve (A - beta*Delta) x = pencil for every pencil
};

/// Applies `op` to every interior pencil of `field` along `axis`. Boundary
/// nodes are neither read nor written. Pencils are processed in fixed-size
/// column groups split over `threads` workers; each pencil's arithmetic is the
/// same regardless of the worker count.
void sweep_axis(Field& field, int axis, const DirectionOperator& op, SweepKind kind, int threads = 1);

}  // namespace fracac
