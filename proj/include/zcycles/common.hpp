#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zcycles {

using Int = mpz_class;
using Rat = mpq_class;

// degree -> dimension; negative degrees are meaningful (reduced homology of
// one- and two-element posets lives in degrees -2 and -1)
using GradedDims = std::map<int, long>;

// (p,q) -> dimension, p,q >= 0
using BiGradedDims = std::map<std::pair<int, int>, long>;

struct invalid_input_error : std::runtime_error {
  explicit invalid_input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// guard knobs, overridable by callers / CLI flags
struct Limits {
  int max_ground_set = 10;          // partition enumeration
  int max_symmetry_ground = 6;      // orbit / stabilizer / Burnside averaging
  int max_poset_elements = 25000;   // explicit order matrix
  std::size_t max_simplices = 2000000;  // order complex / boundary matrices
  long max_fq_tuples = 5000000;     // brute-force polynomial enumeration
};

inline const Limits& default_limits() {
  static const Limits L{};
  return L;
}

inline void drop_zeros(GradedDims& d) {
  for (auto it = d.begin(); it != d.end();)
    it = (it->second == 0) ? d.erase(it) : std::next(it);
}

inline void drop_zeros(BiGradedDims& d) {
  for (auto it = d.begin(); it != d.end();)
    it = (it->second == 0) ? d.erase(it) : std::next(it);
}

}  // namespace zcycles
