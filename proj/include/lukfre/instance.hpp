#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lukfre/algebra.hpp"

namespace lukfre {

// The problem  min c.x  subject to  A o x = b,  x in [0,1]^n,
// where o is the max-Lukasiewicz composition.
class Instance {
 public:
  // Validates and takes ownership of the data. Grades in A and b are
  // clamped when within kUnitClampSlack of [0, 1].
  //
  // Throws DimensionError (empty or ragged A, |c| != n, |b| != m) and
  // RangeError (grade outside [0, 1], non-finite cost).
  static Instance create(std::vector<double> c,
                         const std::vector<std::vector<double>>& a,
                         std::vector<double> b, std::string name = {});

  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }

  const std::vector<double>& c() const { return c_; }
  const Matrix& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  const std::string& name() const { return name_; }

  bool operator==(const Instance&) const = default;

 private:
  Instance() = default;

  std::string name_;
  std::vector<double> c_;
  Matrix a_;
  std::vector<double> b_;
};

// JSON document {"c": [...], "A": [[...], ...], "b": [...], "name": "..."}.
// Throws SyntaxError, RangeError or DimensionError.
Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Doubles are written in shortest round-trip form, so parse(serialize(x))
// reproduces x exactly.
std::string serialize_instance(const Instance& inst);

// Deterministic random instance. With `consistent` set, b is the image of a
// hidden point under A, so the system always has a solution; otherwise b is
// drawn uniformly. Costs are uniform in [-10, 10].
//
// Draw order: hidden point (consistent mode only), A row-major, b
// (inconsistent mode only), then c.
Instance generate_random(std::size_t m, std::size_t n, std::uint64_t seed,
                         bool consistent);

// Portable uniform [0, 1) stream over std::mt19937_64; the standard
// distributions are implementation-defined, this one is not.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}
  double next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }
  // Uniform integer in [0, bound).
  std::size_t index(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lukfre
