#pragma once

// Invariant equations c_1 x_1 + ... + c_r x_r = 0 with sum(c_i) = 0, their
// trivial-solution classification via set partitions, genus, and the
// enumeration of the 4-variable k-fold coefficient family.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace sidon {

// Partition enumeration is exhaustive over Bell(r) set partitions.
inline constexpr int kMaxEquationArity = 8;

struct InvariantEquation {
  std::vector<std::int64_t> coefficients;  // r >= 2, sum 0, not all zero

  int arity() const { return static_cast<int>(coefficients.size()); }
};

inline InvariantEquation make_equation(std::vector<std::int64_t> c) {
  if (c.size() < 2) throw std::invalid_argument("equation needs at least 2 variables");
  if (c.size() > kMaxEquationArity)
    throw std::invalid_argument("equation arity above partition-enumeration limit");
  if (std::accumulate(c.begin(), c.end(), std::int64_t{0}) != 0)
    throw std::invalid_argument("equation coefficients must sum to zero");
  if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }))
    throw std::invalid_argument("equation coefficients must not all be zero");
  return InvariantEquation{std::move(c)};
}

// c_i (x1 - x2) = c_j (x3 - x4) as a coefficient vector.
inline InvariantEquation dilate_equation(std::int64_t ci, std::int64_t cj) {
  if (ci < 1 || cj < 1) throw std::invalid_argument("dilate_equation: coefficients must be >= 1");
  return InvariantEquation{{ci, -ci, -cj, cj}};
}

struct SolutionVerdict {
  bool trivial = false;
  // Restricted-growth labels of the witness partition (part of x_i), valid
  // only when trivial.
  std::vector<int> witness_partition;
};

namespace detail {

// Visits restricted-growth strings of length r in lexicographic order.
// Callback gets the label vector and the number of parts; returning true
// stops the enumeration.
template <typename Visit>
bool for_each_partition(int r, Visit visit) {
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  while (true) {
    int parts = *std::max_element(a.begin(), a.end()) + 1;
    if (visit(a, parts)) return true;
    // next restricted-growth string
    int i = r - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) return false;
    ++a[static_cast<std::size_t>(i)];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
}

}  // namespace detail

// Trivial iff some set partition of the indices has zero coefficient sum and
// equal solution values within every part. The first matching partition in
// restricted-growth lexicographic order is reported.
inline SolutionVerdict is_trivial_solution(const InvariantEquation& eq,
                                           std::span<const std::int64_t> x) {
  const int r = eq.arity();
  if (static_cast<int>(x.size()) != r)
    throw std::invalid_argument("is_trivial_solution: solution length mismatch");
  if (r > kMaxEquationArity)
    throw std::invalid_argument("is_trivial_solution: arity above limit");

  SolutionVerdict verdict;
  detail::for_each_partition(r, [&](const std::vector<int>& label, int parts) {
    for (int part = 0; part < parts; ++part) {
      std::int64_t coeff_sum = 0;
      std::int64_t value = 0;
      bool have_value = false;
      for (int j = 0; j < r; ++j) {
        if (label[static_cast<std::size_t>(j)] != part) continue;
        coeff_sum += eq.coefficients[static_cast<std::size_t>(j)];
        if (!have_value) {
          value = x[static_cast<std::size_t>(j)];
          have_value = true;
        } else if (x[static_cast<std::size_t>(j)] != value) {
          return false;
        }
      }
      if (coeff_sum != 0) return false;
    }
    verdict.trivial = true;
    verdict.witness_partition = label;
    return true;
  });
  return verdict;
}

// Largest number of parts over partitions whose parts all have zero
// coefficient sum; parts made of zero coefficients only do not count.
// Returns 0 when no such partition exists.
inline int genus(const InvariantEquation& eq) {
  const int r = eq.arity();
  int best = 0;
  detail::for_each_partition(r, [&](const std::vector<int>& label, int parts) {
    int counted = 0;
    for (int part = 0; part < parts; ++part) {
      std::int64_t coeff_sum = 0;
      bool all_zero = true;
      for (int j = 0; j < r; ++j) {
        if (label[static_cast<std::size_t>(j)] != part) continue;
        coeff_sum += eq.coefficients[static_cast<std::size_t>(j)];
        all_zero = all_zero && eq.coefficients[static_cast<std::size_t>(j)] == 0;
      }
      if (coeff_sum != 0) return false;
      if (!all_zero) ++counted;
    }
    best = std::max(best, counted);
    return false;  // keep scanning for the maximum
  });
  return best;
}

// Canonical orbit representative under variable permutation and global sign
// flip: the lexicographically largest vector, i.e. max of the two
// descending-sorted candidates.
inline std::vector<std::int64_t> canonical_coefficients(std::vector<std::int64_t> c) {
  std::vector<std::int64_t> neg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
  std::sort(c.begin(), c.end(), std::greater<>());
  std::sort(neg.begin(), neg.end(), std::greater<>());
  return std::max(c, neg);
}

// All 4-variable equations with 0 <= |c_i| <= k and sum zero, one canonical
// representative per permutation/sign orbit, sorted. Vectors with fewer than
// three nonzero coefficients are omitted: they are (c, -c, 0, 0) up to the
// orbit action, and every solution of c(x1 - x2) = 0 is trivial, so they
// constrain nothing.
inline std::vector<InvariantEquation> enumerate_kfold_equations(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("enumerate_kfold_equations: k must be >= 1");
  std::set<std::vector<std::int64_t>> classes;
  for (std::int64_t c1 = -k; c1 <= k; ++c1)
    for (std::int64_t c2 = -k; c2 <= k; ++c2)
      for (std::int64_t c3 = -k; c3 <= k; ++c3) {
        const std::int64_t c4 = -(c1 + c2 + c3);
        if (c4 < -k || c4 > k) continue;
        const int nonzero = (c1 != 0) + (c2 != 0) + (c3 != 0) + (c4 != 0);
        if (nonzero < 3) continue;
        classes.insert(canonical_coefficients({c1, c2, c3, c4}));
      }
  std::vector<InvariantEquation> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(InvariantEquation{c});
  return out;
}

}  // namespace sidon
