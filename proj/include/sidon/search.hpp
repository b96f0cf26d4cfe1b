#pragma once

// Exact extremal search: the maximum size of a set that is free of
// nontrivial solutions to a dilate family or to the full k-fold family,
// by depth-first branch and bound over elements in increasing order.
//
// Feasibility is maintained incrementally: the dilate conditions live in a
// value table of the products c_i * (a - b) (any repeat or zero is a
// violation), and the k-fold equations that are not of dilate form are
// re-checked only against assignments that use the newly added element.
// Because all equations are translation invariant, the smallest element can
// be fixed (0 in Z_N, 1 in [N]); in Z_N multiplication by units preserves
// the family, which pins the second element to a divisor of N. Both
// reductions keep the lexicographically smallest maximum witness reachable,
// and depth-first order then guarantees that the first witness found at each
// size is the lexicographically smallest one of that size.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidon/bounds.hpp"
#include "sidon/equations.hpp"
#include "sidon/sets.hpp"
#include "sidon/verify.hpp"

namespace sidon {

enum class Family { kDilate, kFullKfold };

struct SearchTask {
  Ambient ambient = Ambient::kModular;
  std::int64_t n = 1;
  Family family = Family::kFullKfold;
  std::int64_t k = 1;                  // full k-fold family order
  std::vector<std::int64_t> coeffs;    // dilate family coefficient list
  std::int64_t node_budget = 50'000'000;
};

struct SearchResult {
  std::int64_t optimum = 0;
  ResidueSet witness;
  std::int64_t nodes_explored = 0;
  bool proven_optimal = false;
};

namespace detail {

inline bool is_dilate_form(const std::vector<std::int64_t>& c) {
  // canonical (descending) dilate vectors look like (a, b, -b, -a), b >= 1
  return c.size() == 4 && c[0] == -c[3] && c[1] == -c[2] && c[1] >= 1;
}

// Incremental feasibility for growing sets. Elements are added in increasing
// order and removed in LIFO order.
class FeasibilityState {
 public:
  FeasibilityState(Ambient ambient, std::int64_t n, std::vector<std::int64_t> coeffs,
                   std::vector<InvariantEquation> extra_equations)
      : ambient_(ambient), n_(n), coeffs_(std::move(coeffs)),
        extra_(std::move(extra_equations)) {
    const std::int64_t range =
        ambient_ == Ambient::kModular ? n_ : coeffs_.back() * n_ + 1;
    if (range > (std::int64_t{1} << 26))
      throw std::invalid_argument("search: value range too large for the incremental table");
    used_.assign(static_cast<std::size_t>(std::max<std::int64_t>(range, 1)), 0);
  }

  const std::vector<std::int64_t>& elements() const { return elements_; }

  // Adds v if the set stays feasible; returns false (state unchanged) if not.
  bool try_add(std::int64_t v) {
    batch_.clear();
    if (ambient_ == Ambient::kModular) {
      for (std::int64_t c : coeffs_)
        for (std::int64_t a : elements_) {
          batch_.push_back(mod_floor(c * (v - a), n_));
          batch_.push_back(mod_floor(c * (a - v), n_));
        }
    } else {
      for (std::int64_t c : coeffs_)
        for (std::int64_t a : elements_) batch_.push_back(c * (v > a ? v - a : a - v));
    }
    std::size_t marked = 0;
    bool ok = true;
    for (; marked < batch_.size(); ++marked) {
      const std::int64_t val = batch_[marked];
      if (val == 0 || used_[static_cast<std::size_t>(val)] != 0) {
        ok = false;
        break;
      }
      used_[static_cast<std::size_t>(val)] = 1;
    }
    if (ok && !extra_.empty() && !extra_equations_ok(v)) ok = false;
    if (!ok) {
      for (std::size_t j = 0; j < marked; ++j) used_[static_cast<std::size_t>(batch_[j])] = 0;
      return false;
    }
    elements_.push_back(v);
    return true;
  }

  void pop() {
    const std::int64_t v = elements_.back();
    elements_.pop_back();
    if (ambient_ == Ambient::kModular) {
      for (std::int64_t c : coeffs_)
        for (std::int64_t a : elements_) {
          used_[static_cast<std::size_t>(mod_floor(c * (v - a), n_))] = 0;
          used_[static_cast<std::size_t>(mod_floor(c * (a - v), n_))] = 0;
        }
    } else {
      for (std::int64_t c : coeffs_)
        for (std::int64_t a : elements_)
          used_[static_cast<std::size_t>(c * (v > a ? v - a : a - v))] = 0;
    }
  }

 private:
  // Any nontrivial solution created by adding v must use v in a slot with a
  // nonzero coefficient; scan exactly those assignments.
  bool extra_equations_ok(std::int64_t v) {
    scratch_ = elements_;
    scratch_.push_back(v);
    for (const InvariantEquation& eq : extra_) {
      const auto& c = eq.coefficients;
      const std::vector<std::int64_t> sentinel{v};
      const auto& r1 = c[0] == 0 ? sentinel : scratch_;
      const auto& r2 = c[1] == 0 ? sentinel : scratch_;
      const auto& r3 = c[2] == 0 ? sentinel : scratch_;
      const auto& r4 = c[3] == 0 ? sentinel : scratch_;
      for (std::int64_t x1 : r1)
        for (std::int64_t x2 : r2)
          for (std::int64_t x3 : r3)
            for (std::int64_t x4 : r4) {
              const bool uses_v = (c[0] != 0 && x1 == v) || (c[1] != 0 && x2 == v) ||
                                  (c[2] != 0 && x3 == v) || (c[3] != 0 && x4 == v);
              if (!uses_v) continue;
              const std::int64_t s = c[0] * x1 + c[1] * x2 + c[2] * x3 + c[3] * x4;
              if (ambient_ == Ambient::kModular ? mod_floor(s, n_) != 0 : s != 0) continue;
              const std::int64_t assignment[4] = {x1, x2, x3, x4};
              if (!is_trivial_solution(eq, assignment).trivial) return false;
            }
    }
    return true;
  }

  Ambient ambient_;
  std::int64_t n_;
  std::vector<std::int64_t> coeffs_;
  std::vector<InvariantEquation> extra_;
  std::vector<std::int8_t> used_;
  std::vector<std::int64_t> elements_;
  std::vector<std::int64_t> batch_;
  std::vector<std::int64_t> scratch_;
};

struct TaskConfig {
  std::vector<std::int64_t> coeffs;
  std::vector<InvariantEquation> extra;
  std::optional<std::int64_t> cap;
};

inline TaskConfig configure(const SearchTask& task) {
  TaskConfig config;
  if (task.family == Family::kDilate) {
    config.coeffs = task.coeffs;
    if (config.coeffs.empty())
      throw std::invalid_argument("search: dilate family needs a coefficient list");
    for (std::size_t i = 0; i < config.coeffs.size(); ++i) {
      if (config.coeffs[i] < 1)
        throw std::invalid_argument("search: coefficients must be positive");
      if (i > 0 && config.coeffs[i] <= config.coeffs[i - 1])
        throw std::invalid_argument("search: coefficients must be strictly increasing");
      if (task.ambient == Ambient::kModular && std::gcd(config.coeffs[i], task.n) != 1)
        throw std::invalid_argument("search: coefficient shares a factor with the modulus");
    }
  } else {
    if (task.k < 1) throw std::invalid_argument("search: k must be >= 1");
    if (task.ambient == Ambient::kModular)
      for (std::int64_t j = 1; j <= task.k; ++j)
        if (std::gcd(task.n, j) != 1)
          throw std::invalid_argument("search: modulus shares a factor with 1..k");
    for (std::int64_t j = 1; j <= task.k; ++j) config.coeffs.push_back(j);
    for (InvariantEquation& eq : enumerate_kfold_equations(task.k))
      if (!is_dilate_form(eq.coefficients)) config.extra.push_back(std::move(eq));
  }
  const std::int64_t kk = static_cast<std::int64_t>(config.coeffs.size());
  if (task.ambient == Ambient::kModular) {
    if (task.n >= 2) config.cap = group_bound(task.n, kk).integer_cap;
  } else {
    const std::int64_t ck = config.coeffs.back();
    if (task.n >= kk * ck)
      config.cap = interval_dilate_bound(task.n, kk, ck, IntervalBoundMode::kSharp).integer_cap;
  }
  return config;
}

}  // namespace detail

// Greedy scan in increasing element order, keeping whatever stays feasible.
// Used as the branch-and-bound incumbent; its output always verifies.
inline ResidueSet greedy_seed(const SearchTask& task) {
  if (task.ambient == Ambient::kInterval && task.n < 0)
    throw std::invalid_argument("search: interval limit must be >= 0");
  if (task.n == 0 && task.ambient == Ambient::kInterval)
    return make_interval_set(0, {});
  detail::TaskConfig config = detail::configure(task);
  detail::FeasibilityState state(task.ambient, task.n, config.coeffs, config.extra);
  const std::int64_t lo = task.ambient == Ambient::kModular ? 0 : 1;
  const std::int64_t hi = task.ambient == Ambient::kModular ? task.n - 1 : task.n;
  for (std::int64_t v = lo; v <= hi; ++v) state.try_add(v);
  std::vector<std::int64_t> elems = state.elements();
  return task.ambient == Ambient::kModular ? make_modular_set(task.n, std::move(elems))
                                           : make_interval_set(task.n, std::move(elems));
}

// Exhaustive maximum-size search. The witness is the lexicographically
// smallest maximum set; proven_optimal is false only on budget exhaustion.
inline SearchResult max_set(const SearchTask& task) {
  SearchResult result;
  if (task.ambient == Ambient::kInterval && task.n < 0)
    throw std::invalid_argument("search: interval limit must be >= 0");
  if (task.ambient == Ambient::kInterval && task.n == 0) {
    result.witness = make_interval_set(0, {});
    result.proven_optimal = true;
    return result;
  }
  if (task.ambient == Ambient::kModular && task.n < 1)
    throw std::invalid_argument("search: modulus must be >= 1");

  detail::TaskConfig config = detail::configure(task);
  detail::FeasibilityState state(task.ambient, task.n, config.coeffs, config.extra);

  const ResidueSet seed = greedy_seed(task);
  std::vector<std::int64_t> best = seed.elements;
  const std::int64_t hi = task.ambient == Ambient::kModular ? task.n - 1 : task.n;
  const std::int64_t first = task.ambient == Ambient::kModular ? 0 : 1;

  // Second-element candidates in Z_N: one representative per unit orbit,
  // which is exactly the set of divisors of N below N.
  std::vector<std::int64_t> second_candidates;
  if (task.ambient == Ambient::kModular)
    for (std::int64_t d = 1; d <= task.n - 1; ++d)
      if (task.n % d == 0) second_candidates.push_back(d);

  std::int64_t nodes = 0;
  bool budget_hit = false;

  std::function<void(std::int64_t)> dfs = [&](std::int64_t last) {
    if (budget_hit) return;
    ++nodes;
    if (nodes > task.node_budget) {
      budget_hit = true;
      return;
    }
    const auto& current = state.elements();
    const std::int64_t size = static_cast<std::int64_t>(current.size());
    if (size > static_cast<std::int64_t>(best.size())) best = current;
    if (config.cap && size >= *config.cap) return;
    if (size + (hi - last) <= static_cast<std::int64_t>(best.size())) return;
    if (size == 1 && task.ambient == Ambient::kModular) {
      for (std::int64_t d : second_candidates) {
        if (size + (hi - d) + 1 <= static_cast<std::int64_t>(best.size())) break;
        if (state.try_add(d)) {
          dfs(d);
          state.pop();
        }
        if (budget_hit) return;
      }
      return;
    }
    for (std::int64_t v = last + 1; v <= hi; ++v) {
      if (size + (hi - v) + 1 <= static_cast<std::int64_t>(best.size())) break;
      if (state.try_add(v)) {
        dfs(v);
        state.pop();
      }
      if (budget_hit) return;
    }
  };

  if (state.try_add(first)) {
    dfs(first);
    state.pop();
  }

  result.optimum = static_cast<std::int64_t>(best.size());
  result.witness = task.ambient == Ambient::kModular
                       ? make_modular_set(task.n, std::move(best))
                       : make_interval_set(task.n, std::move(best));
  result.nodes_explored = nodes;
  result.proven_optimal = !budget_hit;

  // Safety net: the witness must pass the one-shot verifier.
  const std::optional<Violation> check =
      task.family == Family::kDilate
          ? verify_dilate_family(result.witness, config.coeffs)
          : verify_kfold(result.witness, task.k);
  if (check) throw std::logic_error("max_set: witness failed re-verification");
  return result;
}

struct TableRow {
  std::int64_t n = 0;
  std::int64_t optimum = 0;
  std::optional<std::int64_t> group_cap;     // modular rows
  std::optional<std::int64_t> interval_cap;  // interval rows
  double ratio = 0.0;                        // optimum / sqrt(N)
  bool proven = false;
};

// One row per admissible N in [from, to]; moduli sharing a factor with the
// coefficient set are skipped (the k-fold condition is not defined there).
inline std::vector<TableRow> emit_table(std::int64_t from, std::int64_t to,
                                        const SearchTask& prototype) {
  std::vector<TableRow> rows;
  for (std::int64_t n = std::max<std::int64_t>(from, 2); n <= to; ++n) {
    SearchTask task = prototype;
    task.n = n;
    if (task.ambient == Ambient::kModular) {
      bool admissible = true;
      if (task.family == Family::kFullKfold) {
        for (std::int64_t j = 1; j <= task.k; ++j)
          if (std::gcd(n, j) != 1) admissible = false;
      } else {
        for (std::int64_t c : task.coeffs)
          if (std::gcd(n, c) != 1) admissible = false;
      }
      if (!admissible) continue;
    }
    const SearchResult r = max_set(task);
    TableRow row;
    row.n = n;
    row.optimum = r.optimum;
    row.proven = r.proven_optimal;
    row.ratio = static_cast<double>(r.optimum) / std::sqrt(static_cast<double>(n));
    const std::int64_t kk = task.family == Family::kFullKfold
                                ? task.k
                                : static_cast<std::int64_t>(task.coeffs.size());
    if (task.ambient == Ambient::kModular) {
      row.group_cap = group_bound(n, kk).integer_cap;
    } else {
      const std::int64_t ck =
          task.family == Family::kFullKfold ? task.k : task.coeffs.back();
      if (n >= kk * ck)
        row.interval_cap = interval_dilate_bound(n, kk, ck, IntervalBoundMode::kSharp).integer_cap;
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "N,optimum,group_cap,interval_cap,ratio,proven\n";
  for (const TableRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.optimum) + ",";
    out += r.group_cap ? std::to_string(*r.group_cap) : std::string{};
    out += ",";
    out += r.interval_cap ? std::to_string(*r.interval_cap) : std::string{};
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", r.ratio);
    out += ",";
    out += buf;
    out += r.proven ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace sidon
