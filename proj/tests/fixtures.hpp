#pragma once

#include <string>
#include <vector>

#include "lukfre/instance.hpp"

namespace lukfre::testing {

inline std::string data_path(const std::string& relative) {
  return std::string(LUKFRE_DATA_DIR) + "/" + relative;
}

// The 4x6 system used throughout as the worked example.
inline Instance worked_example() {
  return Instance::create({3, 4, 1, 1, -1, 5},
                          {{0.5, 0.85, 0.9, 0.3, 0.85, 0.4},
                           {0.2, 0.2, 0.1, 0.95, 0.1, 0.8},
                           {0.8, 0.8, 0.4, 0.1, 0.1, 0.1},
                           {0.1, 0.1, 0.1, 0.1, 0.1, 0.0}},
                          {0.85, 0.6, 0.5, 0.1}, "worked-example");
}

inline Instance single(double a, double b, double c = 1.0) {
  return Instance::create({c}, {{a}}, {b});
}

// 0-based index sets from 1-based literals.
inline std::vector<std::vector<std::size_t>> zero_based(
    std::vector<std::vector<std::size_t>> sets) {
  for (auto& s : sets) {
    for (auto& j : s) --j;
  }
  return sets;
}

}  // namespace lukfre::testing
