#include "sidon/search.hpp"

#include <gtest/gtest.h>

#include "sidon/verify.hpp"

using namespace sidon;

namespace {

SearchTask interval_sidon(std::int64_t n) {
  SearchTask task;
  task.ambient = Ambient::kInterval;
  task.n = n;
  task.family = Family::kDilate;
  task.coeffs = {1};
  return task;
}

SearchTask modular_kfold(std::int64_t n, std::int64_t k) {
  SearchTask task;
  task.ambient = Ambient::kModular;
  task.n = n;
  task.family = Family::kFullKfold;
  task.k = k;
  return task;
}

// independent oracle: enumerate all subsets of the domain and verify each
// with the quadruple oracle
std::int64_t brute_force_optimum(const SearchTask& task) {
  std::vector<std::int64_t> domain;
  const std::int64_t lo = task.ambient == Ambient::kModular ? 0 : 1;
  const std::int64_t hi = task.ambient == Ambient::kModular ? task.n - 1 : task.n;
  for (std::int64_t v = lo; v <= hi; ++v) domain.push_back(v);
  std::int64_t best = 0;
  const std::int64_t total = std::int64_t{1} << domain.size();
  for (std::int64_t mask = 0; mask < total; ++mask) {
    std::vector<std::int64_t> elems;
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (mask & (std::int64_t{1} << i)) elems.push_back(domain[i]);
    if (static_cast<std::int64_t>(elems.size()) <= best) continue;
    const ResidueSet a = task.ambient == Ambient::kModular
                             ? make_modular_set(task.n, elems)
                             : make_interval_set(task.n, elems);
    const bool ok = task.family == Family::kDilate
                        ? !verify_dilate_family_oracle(a, task.coeffs).has_value()
                        : !verify_kfold(a, task.k).has_value();
    if (ok) best = static_cast<std::int64_t>(elems.size());
  }
  return best;
}

}  // namespace

TEST(MaxSet, SidonInterval7) {
  const SearchResult r = max_set(interval_sidon(7));
  EXPECT_EQ(r.optimum, 4);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.witness.elements, (std::vector<std::int64_t>{1, 2, 5, 7}));
  const std::int64_t one[] = {1};
  EXPECT_FALSE(verify_dilate_family_oracle(r.witness, one).has_value());
}

TEST(MaxSet, SidonModular7) {
  const SearchResult r = max_set(modular_kfold(7, 1));
  EXPECT_EQ(r.optimum, 3);
  EXPECT_EQ(r.witness.elements, (std::vector<std::int64_t>{0, 1, 3}));
  EXPECT_EQ(r.optimum, sidon_zn_bound(7).integer_cap);
}

TEST(MaxSet, MatchesBruteForceOnSmallInstances) {
  for (std::int64_t n = 1; n <= 16; ++n) {
    const SearchResult r = max_set(interval_sidon(n));
    EXPECT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.optimum, brute_force_optimum(interval_sidon(n))) << "interval n=" << n;
  }
  for (std::int64_t n : {3, 5, 7, 9, 11, 13, 15}) {
    const SearchTask task = modular_kfold(n, 2);
    const SearchResult r = max_set(task);
    EXPECT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.optimum, brute_force_optimum(task)) << "modular n=" << n;
  }
  for (std::int64_t n = 1; n <= 12; ++n) {
    SearchTask task;
    task.ambient = Ambient::kInterval;
    task.n = n;
    task.family = Family::kFullKfold;
    task.k = 2;
    const SearchResult r = max_set(task);
    EXPECT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.optimum, brute_force_optimum(task)) << "interval 2-fold n=" << n;
  }
}

TEST(MaxSet, DilateFamilyWithLargerCoefficients) {
  SearchTask task;
  task.ambient = Ambient::kModular;
  task.n = 13;
  task.family = Family::kDilate;
  task.coeffs = {1, 3};
  const SearchResult r = max_set(task);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.optimum, brute_force_optimum(task));
  EXPECT_FALSE(verify_dilate_family_oracle(r.witness, task.coeffs).has_value());
}

TEST(MaxSet, WitnessIsLexSmallest) {
  // all maximum witnesses, by brute force; the search must return the
  // lexicographically smallest
  const SearchTask task = modular_kfold(11, 2);
  const SearchResult r = max_set(task);
  std::vector<std::int64_t> best_lex;
  for (std::int64_t mask = 0; mask < (1 << 11); ++mask) {
    std::vector<std::int64_t> elems;
    for (int i = 0; i < 11; ++i)
      if (mask & (1 << i)) elems.push_back(i);
    if (static_cast<std::int64_t>(elems.size()) != r.optimum) continue;
    if (verify_kfold(make_modular_set(11, elems), 2)) continue;
    if (best_lex.empty() || elems < best_lex) best_lex = elems;
  }
  EXPECT_EQ(r.witness.elements, best_lex);
}

TEST(MaxSet, RespectsGroupBoundCap) {
  for (std::int64_t n : {7, 11, 13, 17, 19, 23}) {
    const SearchResult r = max_set(modular_kfold(n, 2));
    EXPECT_LE(r.optimum, group_bound(n, 2).integer_cap);
  }
}

TEST(MaxSet, MonotoneInKAndN) {
  // larger equation family -> no larger optimum
  for (std::int64_t n : {11, 13, 25}) {
    const std::int64_t s1 = max_set(modular_kfold(n, 1)).optimum;
    const std::int64_t s2 = max_set(modular_kfold(n, 2)).optimum;
    EXPECT_LE(s2, s1) << n;
  }
  // interval optimum grows with N
  std::int64_t previous = 0;
  for (std::int64_t n = 1; n <= 20; ++n) {
    const std::int64_t opt = max_set(interval_sidon(n)).optimum;
    EXPECT_GE(opt, previous);
    previous = opt;
  }
}

TEST(MaxSet, BudgetExhaustionFlagged) {
  SearchTask task = interval_sidon(40);
  task.node_budget = 5;
  const SearchResult r = max_set(task);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_GE(r.optimum, 1);  // greedy incumbent survives
  const std::int64_t one[] = {1};
  EXPECT_FALSE(verify_dilate_family(r.witness, one).has_value());
}

TEST(MaxSet, DeterministicAcrossRuns) {
  const SearchTask task = modular_kfold(21, 2);
  const SearchResult a = max_set(task);
  const SearchResult b = max_set(task);
  EXPECT_EQ(a.optimum, b.optimum);
  EXPECT_EQ(a.witness.elements, b.witness.elements);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(GreedySeed, GoldenAndInvariants) {
  // interval(10), Sidon: scan keeps 1, 2, 4, 8
  const ResidueSet seed = greedy_seed(interval_sidon(10));
  EXPECT_EQ(seed.elements, (std::vector<std::int64_t>{1, 2, 4, 8}));
  const std::int64_t one[] = {1};
  EXPECT_FALSE(verify_dilate_family_oracle(seed, one).has_value());

  // empty ambient
  EXPECT_TRUE(greedy_seed(interval_sidon(0)).elements.empty());

  // seed never beats the optimum
  for (std::int64_t n : {5, 9, 12, 15}) {
    EXPECT_LE(static_cast<std::int64_t>(greedy_seed(interval_sidon(n)).size()),
              max_set(interval_sidon(n)).optimum);
  }
}

TEST(MaxSet, InvalidTasksRejected) {
  SearchTask task = modular_kfold(8, 2);  // gcd(8, 2) != 1
  EXPECT_THROW(max_set(task), std::invalid_argument);
  SearchTask empty_coeffs;
  empty_coeffs.ambient = Ambient::kModular;
  empty_coeffs.n = 11;
  empty_coeffs.family = Family::kDilate;
  EXPECT_THROW(max_set(empty_coeffs), std::invalid_argument);
}

TEST(EmitTable, SidonRowsUpTo25) {
  SearchTask prototype = modular_kfold(2, 1);
  const auto rows = emit_table(2, 25, prototype);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_TRUE(row.proven);
    ASSERT_TRUE(row.group_cap.has_value());
    EXPECT_LE(row.optimum, *row.group_cap);
    EXPECT_NEAR(row.ratio, row.optimum / std::sqrt(static_cast<double>(row.n)), 1e-12);
  }
  // perfect difference sets: N = 7 and N = 13 meet the cap
  const auto at = [&](std::int64_t n) {
    for (const auto& row : rows)
      if (row.n == n) return row;
    throw std::logic_error("row missing");
  };
  EXPECT_EQ(at(7).optimum, 3);
  EXPECT_EQ(at(13).optimum, 4);
}

TEST(EmitTable, SkipsInadmissibleModuli) {
  SearchTask prototype = modular_kfold(3, 2);
  const auto rows = emit_table(2, 15, prototype);
  for (const auto& row : rows) EXPECT_EQ(row.n % 2, 1) << "even modulus should be skipped";
}

TEST(EmitTable, CsvShape) {
  SearchTask prototype = interval_sidon(2);
  const auto rows = emit_table(2, 8, prototype);
  const std::string csv = table_to_csv(rows);
  EXPECT_NE(csv.find("N,optimum,group_cap,interval_cap,ratio,proven"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
}
