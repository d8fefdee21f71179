#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fracac/grid.hpp"

namespace fracac {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Self-describing field snapshot. On disk (format FACF1):
///
///   FACF1
///   dims 2
///   sizes 16 16
///   meshsizes 0.0625 0.0625
///   alpha 1.5
///   eps 0.1
///   time 0.25
///   payload 289
///
/// followed by `payload` little-endian IEEE-754 doubles in row-major order
/// (x slowest), boundary frame included. Reals in the header use the shortest
/// representation that round-trips exactly.
struct FieldFile {
  Field field;
  double alpha = 0.0;
  double eps = 0.0;
  std::array<double, 3> meshsizes{0.0, 0.0, 0.0};
};

FieldFile make_field_file(Field field, double alpha, double eps);

void write_field(std::ostream& out, const FieldFile& file);
FieldFile read_field(std::istream& in);

void write_field_file(const std::string& path, const FieldFile& file);
FieldFile read_field_file(const std::string& path);

}  // namespace fracac
