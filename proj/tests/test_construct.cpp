#include "sidon/construct.hpp"

#include <gtest/gtest.h>

#include "sidon/verify.hpp"

using namespace sidon;

namespace {

// prime powers q = p^t with q <= limit, smallest-first per p
std::vector<std::pair<std::int64_t, int>> prime_power_cases(std::int64_t p_max,
                                                            std::int64_t q_max) {
  std::vector<std::pair<std::int64_t, int>> cases;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = p;
    for (int t = 1; q <= q_max; ++t, q *= p) cases.emplace_back(p, t);
  }
  return cases;
}

}  // namespace

TEST(BoseChowla, WorkedExampleQ3) {
  // theta = x + 1 over GF(9) = GF(3)[x]/(x^2+1); theta^1 = x+1, theta^6 = x,
  // theta^7 = x+2 are exactly the exponents with theta^a - theta in F_3
  const ResidueSet c = bose_chowla(3, 1);
  EXPECT_EQ(c.n, 8);
  EXPECT_EQ(c.elements, (std::vector<std::int64_t>{1, 6, 7}));
}

TEST(BoseChowla, GoldenQ4) {
  // GF(16) = GF(2)[x]/(x^4+x+1), theta = x: the classic {1, 2, 4, 8} mod 15
  const ResidueSet c = bose_chowla(2, 2);
  EXPECT_EQ(c.n, 15);
  EXPECT_EQ(c.elements, (std::vector<std::int64_t>{1, 2, 4, 8}));
}

TEST(Lindstrom, WorkedExampleQ3) {
  const ResidueSet b = lindstrom(3, 1);
  EXPECT_EQ(b.n, 8);
  EXPECT_EQ(b.elements, (std::vector<std::int64_t>{4, 5, 7}));
}

TEST(Lindstrom, TranslateOfBoseChowlaQ3) {
  // {1,6,7} + 6 = {7,4,5} mod 8
  const ResidueSet c = bose_chowla(3, 1);
  const ResidueSet b = lindstrom(3, 1);
  std::vector<std::int64_t> shifted;
  for (std::int64_t a : c.elements) shifted.push_back(mod_floor(a + 6, 8));
  std::sort(shifted.begin(), shifted.end());
  EXPECT_EQ(shifted, b.elements);
}

TEST(Constructions, SizeTranslateClosureAndSidonUpTo32) {
  // the full q <= 128 sweep lives in the acceptance suite
  for (auto [p, t] : prime_power_cases(13, 32)) {
    const std::int64_t q = checked_pow(p, t);
    const std::int64_t n = q * q - 1;
    const ResidueSet c = bose_chowla(p, t);
    const ResidueSet b = lindstrom(p, t);
    EXPECT_EQ(static_cast<std::int64_t>(c.size()), q);
    EXPECT_EQ(static_cast<std::int64_t>(b.size()), q);

    const std::int64_t one[] = {1};
    EXPECT_FALSE(verify_dilate_family(c, one).has_value()) << "q=" << q;
    EXPECT_FALSE(verify_dilate_family(b, one).has_value()) << "q=" << q;

    // b = c + d for some shift d (exhaustive scan)
    bool translate_found = false;
    for (std::int64_t d = 0; d < n && !translate_found; ++d) {
      std::vector<std::int64_t> shifted;
      for (std::int64_t a : c.elements) shifted.push_back(mod_floor(a + d, n));
      std::sort(shifted.begin(), shifted.end());
      translate_found = shifted == b.elements;
    }
    EXPECT_TRUE(translate_found) << "q=" << q;

    // p * B = B
    std::vector<std::int64_t> mapped;
    for (std::int64_t a : b.elements) mapped.push_back(mod_floor(p * a, n));
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, b.elements) << "q=" << q;
  }
}

TEST(CycleDecompose, WorkedExample) {
  const auto dec = cycle_decompose(make_modular_set(8, {4, 5, 7}), 3);
  ASSERT_EQ(dec.cycles.size(), 2u);
  EXPECT_EQ(dec.cycles[0], (std::vector<std::int64_t>{4}));
  EXPECT_EQ(dec.cycles[1], (std::vector<std::int64_t>{5, 7}));
}

TEST(CycleDecompose, FixedPointAndPartition) {
  // 3*4 = 12 = 4 mod 8: singleton cycle
  const auto dec = cycle_decompose(make_modular_set(8, {4}), 3);
  ASSERT_EQ(dec.cycles.size(), 1u);
  EXPECT_EQ(dec.cycles[0], (std::vector<std::int64_t>{4}));

  // cycles partition the base set
  const ResidueSet b = lindstrom(2, 3);
  const auto full = cycle_decompose(b, 2);
  std::size_t total = 0;
  for (const auto& cycle : full.cycles) {
    total += cycle.size();
    EXPECT_EQ(*std::min_element(cycle.begin(), cycle.end()), cycle.front());
    for (std::size_t i = 1; i < cycle.size(); ++i)
      EXPECT_EQ(cycle[i], mod_floor(2 * cycle[i - 1], b.n));
  }
  EXPECT_EQ(total, b.size());
}

TEST(CycleDecompose, ClosureFailureDetected) {
  EXPECT_THROW(cycle_decompose(make_modular_set(8, {1, 2}), 3), std::runtime_error);
}

TEST(Prune, WorkedExamples) {
  CycleDecomposition dec;
  dec.modulus = 8;
  dec.multiplier = 3;
  dec.cycles = {{4}, {5, 7}};
  EXPECT_EQ(prune(dec, 2).elements, (std::vector<std::int64_t>{7}));
  EXPECT_EQ(prune(dec, 1).elements, (std::vector<std::int64_t>{4, 5, 7}));

  CycleDecomposition five;
  five.modulus = 100;
  five.cycles = {{10, 20, 30, 40, 50}};
  EXPECT_EQ(prune(five, 2).elements, (std::vector<std::int64_t>{20, 40}));
}

TEST(ConstructDilateFree, GoldenPipeline) {
  ConstructionParams params;
  params.p = 3;
  params.t = 1;
  params.k = 2;
  const ConstructReport report = construct_dilate_free(params);
  EXPECT_EQ(report.modulus, 8);
  EXPECT_EQ(report.set, (std::vector<std::int64_t>{7}));
  EXPECT_EQ(report.coefficients, (std::vector<std::int64_t>{1, 3}));
  EXPECT_FALSE(report.regime_valid);
}

TEST(ConstructDilateFree, OutputVerifiesAndHasNoDilationChains) {
  for (auto [p, t] : prime_power_cases(5, 32)) {
    for (std::int64_t k : {2, 3}) {
      ConstructionParams params;
      params.p = p;
      params.t = t;
      params.k = k;
      const ConstructReport report = construct_dilate_free(params);
      const auto a = make_modular_set(report.modulus, report.set);
      EXPECT_FALSE(verify_dilate_family(a, report.coefficients).has_value())
          << "p=" << p << " t=" << t << " k=" << k;
      // no pair v, p^j v with 1 <= j <= k-1 may survive pruning
      for (std::int64_t v : report.set) {
        std::int64_t image = v;
        for (std::int64_t j = 1; j < k; ++j) {
          image = mod_floor(p * image, report.modulus);
          EXPECT_FALSE(a.contains(image)) << "chain " << v << " -> " << image;
        }
      }
      // size accounting: sum of floor(m/k) over cycles
      std::int64_t expected = 0;
      for (std::int64_t len : report.cycle_lengths) expected += len / k;
      EXPECT_EQ(static_cast<std::int64_t>(report.set.size()), expected);
    }
  }
}

TEST(ShortCycleBound, GcdValues) {
  // q = 32: gcd(15, 1023) = 3
  EXPECT_EQ(short_cycle_bound(2, 5, 2, 2), 3);
  EXPECT_LE(short_cycle_bound(3, 5, 2, 2), 80);  // always at most p^4 - 1
  EXPECT_THROW(short_cycle_bound(2, 4, 2, 2), std::invalid_argument);  // t = 4 not prime power of r > Mk
  EXPECT_THROW(short_cycle_bound(2, 5, 3, 2), std::invalid_argument);  // r = 5 <= M*k = 6
}

TEST(ConstructDilateFree, ShortCycleCountWithinCapAcrossRegimes) {
  // every size-bound-regime instance at desk scale: actual short cycles <= gcd cap
  for (auto [p, r] : {std::pair<std::int64_t, std::int64_t>{2, 5}, {3, 5}, {2, 7}}) {
    ConstructionParams params;
    params.p = p;
    params.t = static_cast<int>(r);
    params.k = 2;
    params.m_margin = 2;
    params.r = r;
    params.i = 1;
    const ConstructReport report = construct_dilate_free(params);
    ASSERT_TRUE(report.regime_valid);
    ASSERT_TRUE(report.short_cycle_count.has_value());
    ASSERT_TRUE(report.short_cycle_cap.has_value());
    EXPECT_LE(*report.short_cycle_count, *report.short_cycle_cap) << "p=" << p << " r=" << r;
    EXPECT_LE(*report.short_cycle_cap, p * p * p * p - 1);
  }
}

TEST(ConstructDilateFree, TheoremRegimeAccounting) {
  // p=2, k=2, M=2, r=5, i=1: q=32, modulus 1023, bound = 8 - 15 = -7
  ConstructionParams params;
  params.p = 2;
  params.t = 5;
  params.k = 2;
  params.m_margin = 2;
  params.r = 5;
  params.i = 1;
  const ConstructReport report = construct_dilate_free(params);
  EXPECT_TRUE(report.regime_valid);
  ASSERT_TRUE(report.short_cycle_cap.has_value());
  EXPECT_EQ(*report.short_cycle_cap, 3);
  ASSERT_TRUE(report.short_cycle_count.has_value());
  EXPECT_LE(*report.short_cycle_count, 3);
  ASSERT_TRUE(report.size_lower_bound.has_value());
  EXPECT_DOUBLE_EQ(*report.size_lower_bound, -7.0);
  EXPECT_TRUE(report.size_lower_bound_holds);
  EXPECT_TRUE(report.size_lower_bound_vacuous);
}

TEST(ConstructDilateFree, CutoffEnforced) {
  ConstructionParams params;
  params.p = 2;
  params.t = 17;  // q^2 - 1 = 2^34 - 1 over the cutoff
  params.k = 2;
  EXPECT_THROW(construct_dilate_free(params), std::invalid_argument);
}
