#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "fracac/field_io.hpp"
#include "fracac/problems.hpp"

using namespace fracac;

namespace {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::string serialize(const FieldFile& f) {
  std::ostringstream out(std::ios::binary);
  write_field(out, f);
  return out.str();
}

FieldFile parse(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_field(in);
}

}  // namespace

TEST(FieldIo, RoundTripIsBitwise3D) {
  Field f = random_initial({99, 2.0, -1.0}, GridShape::cube(17, 21, 33));
  f.values()[f.shape().index(3, 4, 5)] = std::numeric_limits<double>::denorm_min();
  f.set_time(0.1 + 0.2);
  const auto back = parse(serialize(make_field_file(f, 1.7, 0.02)));
  EXPECT_TRUE(bitwise_equal(back.field.values(), f.values()));
  EXPECT_EQ(back.field.shape(), f.shape());
  EXPECT_EQ(back.field.time(), 0.1 + 0.2);
  EXPECT_EQ(back.alpha, 1.7);
  EXPECT_EQ(back.eps, 0.02);
  EXPECT_EQ(back.meshsizes[0], 1.0 / 17);
  EXPECT_EQ(back.meshsizes[1], 1.0 / 21);
  EXPECT_EQ(back.meshsizes[2], 1.0 / 33);
}

TEST(FieldIo, RoundTrip2DThroughAFile) {
  const ManufacturedCase c{2, 1.5, 0.1};
  const Field f = c.exact_field(GridShape::square(16, 12), 0.25);
  const auto path = (std::filesystem::temp_directory_path() / "fracac_io_test.facf").string();
  write_field_file(path, make_field_file(f, 1.5, 0.1));
  const auto back = read_field_file(path);
  std::filesystem::remove(path);
  EXPECT_TRUE(bitwise_equal(back.field.values(), f.values()));
  EXPECT_EQ(back.field.dims(), 2);
}

TEST(FieldIo, HeaderLayout) {
  const Field f(GridShape::square(16, 16), 0.25);
  const std::string bytes = serialize(make_field_file(f, 1.5, 0.1));
  const std::string header =
      "FACF1\ndims 2\nsizes 16 16\nmeshsizes 0.0625 0.0625\nalpha 1.5\neps 0.1\ntime 0.25\npayload 289\n";
  ASSERT_GE(bytes.size(), header.size());
  EXPECT_EQ(bytes.substr(0, header.size()), header);
  EXPECT_EQ(bytes.size(), header.size() + 289 * sizeof(double));
}

TEST(FieldIo, PayloadIsLittleEndian) {
  Field f(GridShape::square(2, 2), 0.0);
  f.at(1, 1) = 1.0;
  const std::string bytes = serialize(make_field_file(f, 1.5, 0.1));
  const std::size_t start = bytes.size() - 9 * sizeof(double) + 4 * sizeof(double);
  const unsigned char one_le[8] = {0, 0, 0, 0, 0, 0, 0xf0, 0x3f};
  EXPECT_EQ(std::memcmp(bytes.data() + start, one_le, 8), 0);
}

TEST(FieldIo, RejectsBadMagic) {
  std::string bytes = serialize(make_field_file(Field(GridShape::square(4, 4)), 1.5, 0.1));
  bytes[4] = '2';
  EXPECT_THROW(parse(bytes), FormatError);
  EXPECT_THROW(parse("hello"), FormatError);
  EXPECT_THROW(parse(""), FormatError);
}

TEST(FieldIo, RejectsTruncatedPayload) {
  std::string bytes = serialize(make_field_file(Field(GridShape::square(4, 4)), 1.5, 0.1));
  bytes.resize(bytes.size() - 3);
  try {
    parse(bytes);
    FAIL() << "no error";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
}

TEST(FieldIo, RejectsInconsistentCounts) {
  std::string bytes = serialize(make_field_file(Field(GridShape::square(4, 4)), 1.5, 0.1));
  const auto pos = bytes.find("payload 25");
  ASSERT_NE(pos, std::string::npos);
  bytes.replace(pos, 10, "payload 24");
  EXPECT_THROW(parse(bytes), FormatError);
  EXPECT_THROW(read_field_file("/nonexistent/dir/x.facf"), std::runtime_error);
}
