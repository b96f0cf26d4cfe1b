#pragma once

// Verifiers for "only trivial solutions" conditions.
//
// verify_dilate_family is the fast multiset test: a set A has only trivial
// solutions to c_i(x1-x2) = c_j(x3-x4) for all 1 <= i <= j <= k exactly when
// the values c_i * (a-b) over ordered pairs a != b are pairwise distinct and
// nonzero. verify_dilate_family_oracle is the independent brute-force check
// that classifies every matching quadruple through is_trivial_solution; it
// exists so the two routes can be compared on random inputs. verify_kfold
// runs the full canonical k-fold equation family.

#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sidon/equations.hpp"
#include "sidon/sets.hpp"

namespace sidon {

struct Violation {
  InvariantEquation equation;
  std::vector<std::int64_t> assignment;  // one value per equation variable
  Ambient ambient = Ambient::kModular;
  std::int64_t n = 0;
};

namespace detail {

inline void check_dilate_preconditions(const ResidueSet& a,
                                       std::span<const std::int64_t> coeffs) {
  validate(a);
  if (coeffs.empty()) throw std::invalid_argument("verify: empty coefficient list");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 1) throw std::invalid_argument("verify: coefficients must be positive");
    if (i > 0 && coeffs[i] <= coeffs[i - 1])
      throw std::invalid_argument("verify: coefficients must be strictly increasing");
    if (a.ambient == Ambient::kModular && std::gcd(coeffs[i], a.n) != 1)
      throw std::invalid_argument("verify: coefficient " + std::to_string(coeffs[i]) +
                                  " shares a factor with modulus " + std::to_string(a.n));
  }
}

// Deterministic re-scan used once a fast-path collision is known: the first
// tuple (i, j, a, b, c, d) in lexicographic order with
// c_i(a-b) = c_j(c-d), a != b, c != d and (i,a,b) != (j,c,d). Any such tuple
// is a nontrivial solution of (c_i, -c_i, -c_j, c_j).
inline Violation first_dilate_violation(const ResidueSet& s,
                                        std::span<const std::int64_t> coeffs) {
  const auto& e = s.elements;
  const bool modular = s.ambient == Ambient::kModular;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = i; j < coeffs.size(); ++j)
      for (std::int64_t a : e)
        for (std::int64_t b : e) {
          if (a == b) continue;
          for (std::int64_t c : e)
            for (std::int64_t d : e) {
              if (c == d) continue;
              if (i == j && a == c && b == d) continue;
              const std::int64_t lhs = coeffs[i] * (a - b);
              const std::int64_t rhs = coeffs[j] * (c - d);
              const bool match = modular ? mod_floor(lhs - rhs, s.n) == 0 : lhs == rhs;
              if (match)
                return Violation{dilate_equation(coeffs[i], coeffs[j]),
                                 {a, b, c, d},
                                 s.ambient,
                                 s.n};
            }
        }
  throw std::logic_error("first_dilate_violation: no violation found");
}

}  // namespace detail

// nullopt = only trivial solutions; otherwise the first violation in
// lexicographic (i, j, a, b, c, d) order.
inline std::optional<Violation> verify_dilate_family(const ResidueSet& a,
                                                     std::span<const std::int64_t> coeffs) {
  detail::check_dilate_preconditions(a, coeffs);
  if (a.size() <= 1) return std::nullopt;

  std::unordered_set<std::int64_t> seen;
  seen.reserve(2 * coeffs.size() * a.size() * a.size());
  const auto& e = a.elements;
  if (a.ambient == Ambient::kModular) {
    for (std::int64_t c : coeffs)
      for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = 0; y < e.size(); ++y) {
          if (x == y) continue;
          const std::int64_t v = mod_floor(c * (e[x] - e[y]), a.n);
          if (v == 0 || !seen.insert(v).second)
            return detail::first_dilate_violation(a, coeffs);
        }
  } else {
    // In [N] it suffices to check the positive differences once.
    for (std::int64_t c : coeffs)
      for (std::size_t x = 0; x < e.size(); ++x)
        for (std::size_t y = 0; y < x; ++y) {
          const std::int64_t v = c * (e[x] - e[y]);
          if (!seen.insert(v).second) return detail::first_dilate_violation(a, coeffs);
        }
  }
  return std::nullopt;
}

// Exhaustive quadruple enumeration classified through is_trivial_solution.
// Agrees with verify_dilate_family on every input, including the reported
// violation tuple.
inline std::optional<Violation> verify_dilate_family_oracle(
    const ResidueSet& a, std::span<const std::int64_t> coeffs) {
  detail::check_dilate_preconditions(a, coeffs);
  const auto& e = a.elements;
  const bool modular = a.ambient == Ambient::kModular;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = i; j < coeffs.size(); ++j) {
      const InvariantEquation eq = dilate_equation(coeffs[i], coeffs[j]);
      // pair-sum index: value of c_j(c-d) -> ordered pairs (c,d), lex order
      std::unordered_map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> rhs;
      for (std::int64_t c : e)
        for (std::int64_t d : e) {
          if (c == d) continue;
          const std::int64_t v = coeffs[j] * (c - d);
          rhs[modular ? mod_floor(v, a.n) : v].emplace_back(c, d);
        }
      for (std::int64_t x1 : e)
        for (std::int64_t x2 : e) {
          if (x1 == x2) continue;
          const std::int64_t v = coeffs[i] * (x1 - x2);
          auto it = rhs.find(modular ? mod_floor(v, a.n) : v);
          if (it == rhs.end()) continue;
          for (const auto& [x3, x4] : it->second) {
            const std::int64_t assignment[4] = {x1, x2, x3, x4};
            if (!is_trivial_solution(eq, assignment).trivial)
              return Violation{eq, {x1, x2, x3, x4}, a.ambient, a.n};
          }
        }
    }
  return std::nullopt;
}

namespace detail {

// First nontrivial solution of one k-fold equation within A, in lexicographic
// assignment order; variables with zero coefficient are free and iterate over
// the single sentinel A[0] (triviality does not depend on them).
inline std::optional<Violation> first_kfold_violation(const ResidueSet& s,
                                                      const InvariantEquation& eq) {
  const auto& e = s.elements;
  if (e.empty()) return std::nullopt;
  const bool modular = s.ambient == Ambient::kModular;
  const std::int64_t c1 = eq.coefficients[0], c2 = eq.coefficients[1],
                     c3 = eq.coefficients[2], c4 = eq.coefficients[3];
  const std::vector<std::int64_t> sentinel{e[0]};
  const auto& r1 = c1 == 0 ? sentinel : e;
  const auto& r2 = c2 == 0 ? sentinel : e;
  const auto& r3 = c3 == 0 ? sentinel : e;
  const auto& r4 = c4 == 0 ? sentinel : e;

  // pair-sum index over the right half: -(c3 x3 + c4 x4) -> (x3, x4) lex
  std::unordered_map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>> rhs;
  for (std::int64_t x3 : r3)
    for (std::int64_t x4 : r4) {
      const std::int64_t v = -(c3 * x3 + c4 * x4);
      rhs[modular ? mod_floor(v, s.n) : v].emplace_back(x3, x4);
    }
  for (std::int64_t x1 : r1)
    for (std::int64_t x2 : r2) {
      const std::int64_t v = c1 * x1 + c2 * x2;
      auto it = rhs.find(modular ? mod_floor(v, s.n) : v);
      if (it == rhs.end()) continue;
      for (const auto& [x3, x4] : it->second) {
        const std::int64_t assignment[4] = {x1, x2, x3, x4};
        if (!is_trivial_solution(eq, assignment).trivial)
          return Violation{eq, {x1, x2, x3, x4}, s.ambient, s.n};
      }
    }
  return std::nullopt;
}

}  // namespace detail

// Checks every canonical equation of the k-fold family. jobs > 1 fans the
// per-equation scans across threads; the verdict and the reported violation
// (first in canonical equation order) do not depend on the schedule.
inline std::optional<Violation> verify_kfold(const ResidueSet& a, std::int64_t k,
                                             int jobs = 1) {
  validate(a);
  if (k < 1) throw std::invalid_argument("verify_kfold: k must be >= 1");
  if (a.ambient == Ambient::kModular)
    for (std::int64_t j = 1; j <= k; ++j)
      if (std::gcd(a.n, j) != 1)
        throw std::invalid_argument("verify_kfold: modulus " + std::to_string(a.n) +
                                    " shares a factor with " + std::to_string(j));
  if (a.size() <= 1) return std::nullopt;

  const std::vector<InvariantEquation> family = enumerate_kfold_equations(k);
  std::vector<std::optional<Violation>> results(family.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      results[i] = detail::first_kfold_violation(a, family[i]);
      if (results[i]) return results[i];
    }
    return std::nullopt;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < family.size(); i = next.fetch_add(1))
        results[i] = detail::first_kfold_violation(a, family[i]);
    });
  for (auto& t : workers) t.join();
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace sidon
