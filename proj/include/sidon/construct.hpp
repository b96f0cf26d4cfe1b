#pragma once

// Sidon set constructions in Z_{q^2-1} for prime powers q = p^t, and the
// cycle-pruned sets that are free of nontrivial solutions to
// x1 - x2 = p^{j-1}(x3 - x4) for 1 <= j <= k.
//
// C(q, theta) = { a : theta^a - theta in F_q }        (Bose-Chowla)
// B(q, theta) = { b : theta^b + theta^{q b} = 1 }     (Lindstrom)
//
// B is closed under multiplication by p, so the permutation b -> p*b splits
// it into cycles; keeping only the positions divisible by k inside each
// cycle destroys every dilation chain a, p^j a while keeping about q/k
// elements.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sidon/field.hpp"
#include "sidon/sets.hpp"

namespace sidon {

// q^2 - 1 must stay below this for the O(q^2) membership scans and the
// squared products used by the verifier to fit comfortably in 64 bits.
inline constexpr std::int64_t kModulusCutoff = std::int64_t{1} << 31;

struct ConstructionParams {
  std::int64_t p = 2;  // prime
  int t = 1;           // field exponent, q = p^t
  std::int64_t k = 1;
  // size-bound regime fields: r prime with r > M*k and t = r^i
  std::optional<std::int64_t> m_margin;  // M >= 2
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> i;
};

struct CycleDecomposition {
  std::vector<std::vector<std::int64_t>> cycles;  // each starts at its minimum,
                                                  // sorted by minima
  std::int64_t multiplier = 0;
  std::int64_t modulus = 0;
  std::vector<std::int64_t> base;  // the permuted set
};

namespace detail {

inline void check_desk_scale(std::int64_t p, int t) {
  if (!is_prime(p)) throw std::invalid_argument("construct: p must be prime");
  if (t < 1) throw std::invalid_argument("construct: t must be >= 1");
  // q^2 - 1 <= cutoff, i.e. p^{2t} <= cutoff + 1
  std::int64_t q2 = 1;
  for (int i = 0; i < 2 * t; ++i) {
    q2 *= p;
    if (q2 > kModulusCutoff) throw std::invalid_argument("construct: q^2 - 1 exceeds desk-scale cutoff");
  }
}

}  // namespace detail

// { a in Z_{q^2-1} : theta^a - theta in F_q } for the deterministic field and
// generator; always q elements. Membership uses the Frobenius fixed-point
// test v in F_q <=> v^q = v, evaluated incrementally: with u = theta^a and
// w = u^q maintained by one multiplication each per step,
// (u - theta)^q = u^q - theta^q, so the test is w - theta^q == u - theta.
inline ResidueSet bose_chowla(std::int64_t p, int t) {
  detail::check_desk_scale(p, t);
  const Field field = Field::extension(p, 2 * t);
  const std::int64_t q = checked_pow(p, t);
  const std::int64_t n = q * q - 1;
  const FieldElement theta = field.generator();
  const FieldElement theta_q = theta.pow(q);
  std::vector<std::int64_t> elems;
  FieldElement u = field.one();
  FieldElement w = field.one();  // u^q
  for (std::int64_t a = 0; a < n; ++a) {
    if (w - theta_q == u - theta) elems.push_back(a);
    u = u * theta;
    w = w * theta_q;
  }
  if (static_cast<std::int64_t>(elems.size()) != q)
    throw std::logic_error("bose_chowla: expected q elements, got " +
                           std::to_string(elems.size()));
  return make_modular_set(n, std::move(elems));
}

// { b in Z_{q^2-1} : theta^b + theta^{q b} = 1 }; a translate of the
// Bose-Chowla set, also of size q.
inline ResidueSet lindstrom(std::int64_t p, int t) {
  detail::check_desk_scale(p, t);
  const Field field = Field::extension(p, 2 * t);
  const std::int64_t q = checked_pow(p, t);
  const std::int64_t n = q * q - 1;
  const FieldElement theta = field.generator();
  const FieldElement theta_q = theta.pow(q);
  const FieldElement one = field.one();
  std::vector<std::int64_t> elems;
  FieldElement u = field.one();       // theta^b
  FieldElement w = field.one();       // theta^{q b}
  for (std::int64_t b = 0; b < n; ++b) {
    if (u + w == one) elems.push_back(b);
    u = u * theta;
    w = w * theta_q;
  }
  if (static_cast<std::int64_t>(elems.size()) != q)
    throw std::logic_error("lindstrom: expected q elements, got " +
                           std::to_string(elems.size()));
  return make_modular_set(n, std::move(elems));
}

// Orbit partition of b -> multiplier * b (mod N) on the given set. Requires
// the set to be closed under the map; each cycle is rotated to start at its
// smallest element and cycles are sorted by those minima.
inline CycleDecomposition cycle_decompose(const ResidueSet& b, std::int64_t multiplier) {
  validate(b);
  if (b.ambient != Ambient::kModular)
    throw std::invalid_argument("cycle_decompose: modular ambient required");
  for (std::int64_t v : b.elements)
    if (!b.contains(mod_floor(multiplier * v, b.n)))
      throw std::runtime_error("cycle_decompose: set is not closed under multiplication by " +
                               std::to_string(multiplier));
  CycleDecomposition dec;
  dec.multiplier = multiplier;
  dec.modulus = b.n;
  dec.base = b.elements;
  std::unordered_set<std::int64_t> visited;
  for (std::int64_t start : b.elements) {  // ascending: each cycle met at its minimum
    if (visited.count(start)) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t v = start;
    do {
      cycle.push_back(v);
      visited.insert(v);
      v = mod_floor(multiplier * v, b.n);
    } while (v != start);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

// Keep the positions divisible by k within each cycle (b_1 = cycle minimum);
// cycles shorter than k contribute nothing.
inline ResidueSet prune(const CycleDecomposition& dec, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("prune: k must be >= 1");
  std::vector<std::int64_t> kept;
  for (const auto& cycle : dec.cycles) {
    const std::int64_t m = static_cast<std::int64_t>(cycle.size());
    if (m < k) continue;
    for (std::int64_t j = k; j <= m; j += k)
      kept.push_back(cycle[static_cast<std::size_t>(j - 1)]);
  }
  std::sort(kept.begin(), kept.end());
  return make_modular_set(dec.modulus, std::move(kept));
}

// gcd(p^4 - 1, q^2 - 1): an upper bound on the number of cycles of length at
// most M*k - 1 when r is a prime > M*k and t = r^i (outside that regime the
// divisibility argument behind it does not apply).
inline std::int64_t short_cycle_bound(std::int64_t p, int t, std::int64_t m_margin,
                                      std::int64_t k) {
  detail::check_desk_scale(p, t);
  if (m_margin < 2) throw std::invalid_argument("short_cycle_bound: M must be >= 2");
  if (k < 1) throw std::invalid_argument("short_cycle_bound: k must be >= 1");
  // recover r from t = r^i: t must be a prime power with prime root r > M*k
  std::vector<std::int64_t> tf = distinct_prime_factors(t);
  if (t == 1 || tf.size() != 1)
    throw std::invalid_argument("short_cycle_bound: t must be a prime power r^i");
  const std::int64_t r = tf[0];
  if (r <= m_margin * k)
    throw std::invalid_argument("short_cycle_bound: requires r > M*k");
  const std::int64_t q = checked_pow(p, t);
  const std::int64_t p4 = p * p * p * p;
  return std::gcd(p4 - 1, q * q - 1);
}

struct ConstructReport {
  std::int64_t p = 0;
  int t = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t modulus = 0;
  Coeffs theta;                          // generator coefficient vector
  std::vector<std::int64_t> set;
  std::vector<std::int64_t> coefficients;  // (1, p, ..., p^{k-1})
  std::vector<std::int64_t> cycle_lengths;
  bool regime_valid = false;
  std::optional<std::int64_t> short_cycle_count;  // cycles of length <= M*k - 1
  std::optional<std::int64_t> short_cycle_cap;    // gcd bound, regime only
  std::optional<double> size_lower_bound;         // q/k (1 - 1/M) - (p^4-1)(M-1)
  bool size_lower_bound_holds = false;            // exact rational comparison
  bool size_lower_bound_vacuous = false;          // bound <= 0
};

// Full pipeline: prune(cycle_decompose(lindstrom(p, t), p), k). The pruned
// set has only trivial solutions to x1 - x2 = p^{j-1}(x3 - x4) for every
// 1 <= j <= k whether or not the size-bound regime fields are supplied; the
// regime only gates the size lower bound and the short-cycle accounting.
inline ConstructReport construct_dilate_free(const ConstructionParams& params) {
  detail::check_desk_scale(params.p, params.t);
  if (params.k < 1) throw std::invalid_argument("construct: k must be >= 1");
  const std::int64_t q = checked_pow(params.p, params.t);

  ConstructReport report;
  report.p = params.p;
  report.t = params.t;
  report.q = q;
  report.k = params.k;
  report.modulus = q * q - 1;

  const Field field = Field::extension(params.p, 2 * params.t);
  report.theta = field.generator().coeffs();

  const ResidueSet base = lindstrom(params.p, params.t);
  const CycleDecomposition dec = cycle_decompose(base, params.p);
  for (const auto& c : dec.cycles)
    report.cycle_lengths.push_back(static_cast<std::int64_t>(c.size()));
  const ResidueSet pruned = prune(dec, params.k);
  report.set = pruned.elements;
  for (std::int64_t j = 0, c = 1; j < params.k; ++j, c *= params.p)
    report.coefficients.push_back(c);

  if (params.m_margin) {
    const std::int64_t m_margin = *params.m_margin;
    if (m_margin < 2) throw std::invalid_argument("construct: M must be >= 2");
    std::int64_t short_count = 0;
    for (std::int64_t len : report.cycle_lengths)
      if (len <= m_margin * params.k - 1) ++short_count;
    report.short_cycle_count = short_count;

    const bool regime = params.r && params.i && is_prime(*params.r) &&
                        *params.r > m_margin * params.k && *params.i >= 1 &&
                        checked_pow(*params.r, *params.i) == params.t;
    report.regime_valid = regime;
    if (regime) {
      report.short_cycle_cap = short_cycle_bound(params.p, params.t, m_margin, params.k);
      const std::int64_t p4 = params.p * params.p * params.p * params.p;
      // bound = q (M-1) / (k M) - (p^4 - 1)(M - 1), compared exactly over
      // the common denominator k*M
      const std::int64_t num = q * (m_margin - 1) - (p4 - 1) * (m_margin - 1) * params.k * m_margin;
      const std::int64_t den = params.k * m_margin;
      report.size_lower_bound = static_cast<double>(num) / static_cast<double>(den);
      report.size_lower_bound_holds =
          static_cast<std::int64_t>(report.set.size()) * den >= num;
      report.size_lower_bound_vacuous = num <= 0;
    }
  }
  return report;
}

}  // namespace sidon
