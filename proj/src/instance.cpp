#include "lukfre/instance.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lukfre/errors.hpp"

namespace lukfre {

namespace {

using nlohmann::json;

std::vector<double> read_vector(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw SyntaxError(std::string("missing key \"") + key + "\"");
  }
  const json& node = doc.at(key);
  if (!node.is_array()) {
    throw SyntaxError(std::string("\"") + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) {
      throw SyntaxError(std::string("\"") + key +
                        "\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Instance Instance::create(std::vector<double> c,
                          const std::vector<std::vector<double>>& a,
                          std::vector<double> b, std::string name) {
  if (a.empty() || a.front().empty()) {
    throw DimensionError("A must have at least one row and one column");
  }
  Instance inst;
  inst.a_ = Matrix::from_rows(a);
  const std::size_t m = inst.a_.rows();
  const std::size_t n = inst.a_.cols();
  if (c.size() != n) {
    throw DimensionError("c has " + std::to_string(c.size()) +
                         " entries but A has " + std::to_string(n) +
                         " columns");
  }
  if (b.size() != m) {
    throw DimensionError("b has " + std::to_string(b.size()) +
                         " entries but A has " + std::to_string(m) + " rows");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(c[j])) {
      throw RangeError("c_" + std::to_string(j + 1) + " is not finite");
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      try {
        inst.a_(i, j) = UnitInterval(inst.a_(i, j));
      } catch (const RangeError&) {
        throw RangeError("A(" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") = " +
                         std::to_string(inst.a_(i, j)) +
                         " lies outside [0, 1]");
      }
    }
    try {
      b[i] = UnitInterval(b[i]);
    } catch (const RangeError&) {
      throw RangeError("b_" + std::to_string(i + 1) + " = " +
                       std::to_string(b[i]) + " lies outside [0, 1]");
    }
  }
  inst.c_ = std::move(c);
  inst.b_ = std::move(b);
  inst.name_ = std::move(name);
  return inst;
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("malformed instance document: ") +
                      e.what());
  }
  if (!doc.is_object()) {
    throw SyntaxError("instance document must be a JSON object");
  }
  auto c = read_vector(doc, "c");
  auto b = read_vector(doc, "b");

  if (!doc.contains("A") || !doc.at("A").is_array()) {
    throw SyntaxError("\"A\" must be an array of rows");
  }
  std::vector<std::vector<double>> a;
  for (const json& row : doc.at("A")) {
    if (!row.is_array()) throw SyntaxError("each row of \"A\" must be an array");
    std::vector<double> r;
    for (const json& v : row) {
      if (!v.is_number()) throw SyntaxError("\"A\" must contain only numbers");
      r.push_back(v.get<double>());
    }
    a.push_back(std::move(r));
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) {
      throw SyntaxError("\"name\" must be a string");
    }
    name = doc.at("name").get<std::string>();
  }
  return Instance::create(std::move(c), a, std::move(b), std::move(name));
}

Instance parse_instance(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  json doc = json::object();
  if (!inst.name().empty()) doc["name"] = inst.name();
  doc["c"] = inst.c();
  doc["A"] = inst.a().to_rows();
  doc["b"] = inst.b();
  return doc.dump(2) + "\n";
}

std::size_t UniformStream::index(std::size_t bound) {
  // Rejection sampling, no modulo bias.
  const std::uint64_t range = bound;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % range);
}

Instance generate_random(std::size_t m, std::size_t n, std::uint64_t seed,
                         bool consistent) {
  if (m == 0 || n == 0) {
    throw DimensionError("generated instances need m, n >= 1");
  }
  UniformStream rng(seed);

  std::vector<double> hidden;
  if (consistent) {
    hidden.resize(n);
    for (double& x : hidden) x = rng.next();
  }
  std::vector<std::vector<double>> rows(m, std::vector<double>(n));
  for (auto& row : rows) {
    for (double& v : row) v = rng.next();
  }
  std::vector<double> b;
  if (consistent) {
    b = compose(Matrix::from_rows(rows), hidden);
  } else {
    b.resize(m);
    for (double& v : b) v = rng.next();
  }
  std::vector<double> c(n);
  for (double& v : c) v = rng.next(-10.0, 10.0);

  std::string name = "random-" + std::to_string(m) + "x" + std::to_string(n) +
                     "-seed" + std::to_string(seed) +
                     (consistent ? "" : "-free");
  return Instance::create(std::move(c), rows, std::move(b), std::move(name));
}

}  // namespace lukfre
