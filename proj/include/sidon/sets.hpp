#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidon/numtheory.hpp"

namespace sidon {

// A residue a (mod N), kept in canonical range [0, N).
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;
};

inline Residue residue(std::int64_t value, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("residue: modulus must be >= 1");
  return Residue{mod_floor(value, modulus), modulus};
}

enum class Ambient { kModular, kInterval };

// Finite set of residues together with its ambient structure: the cyclic
// group Z_N or the integer interval [1..N].
struct ResidueSet {
  Ambient ambient = Ambient::kModular;
  std::int64_t n = 1;                   // modulus N, or interval limit N
  std::vector<std::int64_t> elements;   // strictly increasing

  std::size_t size() const { return elements.size(); }
  bool contains(std::int64_t v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
  }
};

inline void validate(const ResidueSet& s) {
  if (s.ambient == Ambient::kModular) {
    if (s.n < 1) throw std::invalid_argument("modular set: modulus must be >= 1");
  } else {
    if (s.n < 0) throw std::invalid_argument("interval set: limit must be >= 0");
  }
  const std::int64_t lo = s.ambient == Ambient::kModular ? 0 : 1;
  const std::int64_t hi = s.ambient == Ambient::kModular ? s.n - 1 : s.n;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (s.elements[i] < lo || s.elements[i] > hi)
      throw std::invalid_argument("set element " + std::to_string(s.elements[i]) +
                                  " outside ambient range");
    if (i > 0 && s.elements[i] <= s.elements[i - 1])
      throw std::invalid_argument("set elements must be strictly increasing");
  }
}

inline ResidueSet make_modular_set(std::int64_t n, std::vector<std::int64_t> elements) {
  ResidueSet s{Ambient::kModular, n, std::move(elements)};
  validate(s);
  return s;
}

inline ResidueSet make_interval_set(std::int64_t n, std::vector<std::int64_t> elements) {
  ResidueSet s{Ambient::kInterval, n, std::move(elements)};
  validate(s);
  return s;
}

}  // namespace sidon
