#include "fracac/field_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace fracac {
namespace {

constexpr const char* kMagic = "FACF1";

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_real(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad real '" + s + "' in header");
  return v;
}

unsigned long long parse_count(const std::string& s) {
  unsigned long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("bad integer '" + s + "' in header");
  return v;
}

std::istringstream expect_line(std::istream& in, const std::string& tag) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("header ends before '" + tag + "'");
  std::istringstream ls(line);
  std::string got;
  ls >> got;
  if (got != tag) throw FormatError("expected '" + tag + "' in header, got '" + got + "'");
  return ls;
}

std::string next_token(std::istringstream& ls, const std::string& tag) {
  std::string tok;
  if (!(ls >> tok)) throw FormatError("missing value for '" + tag + "'");
  return tok;
}

}  // namespace

FieldFile make_field_file(Field field, double alpha, double eps) {
  FieldFile f{std::move(field), alpha, eps, {0.0, 0.0, 0.0}};
  for (int a = 0; a < f.field.dims(); ++a) f.meshsizes[static_cast<std::size_t>(a)] = f.field.shape().meshsize(a);
  return f;
}

void write_field(std::ostream& out, const FieldFile& file) {
  const Field& f = file.field;
  const int dims = f.dims();
  out << kMagic << '\n' << "dims " << dims << '\n' << "sizes";
  for (int a = 0; a < dims; ++a) out << ' ' << f.shape().intervals[static_cast<std::size_t>(a)];
  out << '\n' << "meshsizes";
  for (int a = 0; a < dims; ++a) out << ' ' << format_real(file.meshsizes[static_cast<std::size_t>(a)]);
  out << '\n'
      << "alpha " << format_real(file.alpha) << '\n'
      << "eps " << format_real(file.eps) << '\n'
      << "time " << format_real(f.time()) << '\n'
      << "payload " << f.values().size() << '\n';

  std::vector<char> bytes(f.values().size() * 8);
  std::size_t p = 0;
  for (double v : f.values()) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) bytes[p++] = static_cast<char>((bits >> (8 * b)) & 0xffu);
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed");
}

FieldFile read_field(std::istream& in) {
  std::string magic;
  if (!std::getline(in, magic) || magic != kMagic)
    throw FormatError("not a FACF1 field file (magic '" + magic.substr(0, 16) + "')");

  auto ls = expect_line(in, "dims");
  const int dims = static_cast<int>(parse_count(next_token(ls, "dims")));
  if (dims != 2 && dims != 3) throw FormatError("dims must be 2 or 3");

  GridShape shape;
  shape.dims = dims;
  ls = expect_line(in, "sizes");
  for (int a = 0; a < dims; ++a) shape.intervals[static_cast<std::size_t>(a)] = static_cast<int>(parse_count(next_token(ls, "sizes")));
  try {
    shape.validate();
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }

  FieldFile file;
  ls = expect_line(in, "meshsizes");
  for (int a = 0; a < dims; ++a) file.meshsizes[static_cast<std::size_t>(a)] = parse_real(next_token(ls, "meshsizes"));
  ls = expect_line(in, "alpha");
  file.alpha = parse_real(next_token(ls, "alpha"));
  ls = expect_line(in, "eps");
  file.eps = parse_real(next_token(ls, "eps"));
  ls = expect_line(in, "time");
  const double time = parse_real(next_token(ls, "time"));
  ls = expect_line(in, "payload");
  const auto count = parse_count(next_token(ls, "payload"));
  if (count != shape.size()) throw FormatError("payload count does not match sizes");

  file.field = Field(shape, time);
  std::vector<char> bytes(count * 8);
  in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) throw FormatError("truncated payload");
  auto values = file.field.values();
  for (std::size_t q = 0; q < count; ++q) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b)
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[q * 8 + b])) << (8 * b);
    values[q] = std::bit_cast<double>(bits);
  }
  return file;
}

void write_field_file(const std::string& path, const FieldFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_field(out, file);
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_field(in);
}

}  // namespace fracac
