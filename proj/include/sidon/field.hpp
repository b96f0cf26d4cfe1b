#pragma once

// Exact arithmetic in GF(p^m) with a polynomial-basis representation
// GF(p)[x]/(f), f monic irreducible of degree m. The modulus and the
// multiplicative generator are both found by deterministic lexicographic
// search, so every field built from (p, m) is bit-identical across runs.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sidon/numtheory.hpp"

namespace sidon {

using Coeffs = std::vector<std::int64_t>;  // dense, ascending degree, values in [0, p)

namespace poly {

// Degree of a (not necessarily normalized) coefficient vector; -1 for zero.
inline int degree(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

inline void trim(Coeffs& a) { a.resize(static_cast<std::size_t>(degree(a) + 1)); }

inline Coeffs add(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = mod_floor(v, p);
  }
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a modulo monic m (leading coefficient must be 1).
inline Coeffs mod(Coeffs a, const Coeffs& m, std::int64_t p) {
  const int dm = degree(m);
  if (dm < 0) throw std::invalid_argument("poly::mod: zero modulus");
  trim(a);
  while (degree(a) >= dm) {
    const int da = degree(a);
    const std::int64_t lead = a[static_cast<std::size_t>(da)];
    for (int i = 0; i <= dm; ++i) {
      std::size_t k = static_cast<std::size_t>(da - dm + i);
      a[k] = mod_floor(a[k] - lead * m[static_cast<std::size_t>(i)], p);
    }
    trim(a);
  }
  return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so mod() applies
    std::int64_t lead = b.back();
    if (lead != 1) {
      // lead^{-1} via Fermat
      std::int64_t inv = 1, base = lead, e = p - 2;
      while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    Coeffs r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    std::int64_t lead = a.back();
    std::int64_t inv = 1, base = lead, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

inline Coeffs powmod(const Coeffs& a, std::int64_t e, const Coeffs& m, std::int64_t p) {
  if (e < 0) throw std::invalid_argument("poly::powmod: negative exponent");
  Coeffs result{1};
  Coeffs base = mod(a, m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace poly

// Monic polynomial over GF(p), used as a field modulus.
struct PrimePolynomial {
  std::int64_t characteristic = 0;
  Coeffs coefficients;  // ascending degree, leading coefficient 1

  int degree() const { return poly::degree(coefficients); }
};

// Rabin test: f of degree m is irreducible over GF(p) iff x^{p^m} = x (mod f)
// and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
inline bool is_irreducible(const Coeffs& f, std::int64_t p) {
  const int m = poly::degree(f);
  if (m < 1) return false;
  const Coeffs x{0, 1};
  const std::int64_t pm = checked_pow(p, m);
  if (poly::powmod(x, pm, f, p) != poly::mod(x, f, p)) return false;
  for (std::int64_t l : distinct_prime_factors(m)) {
    Coeffs xq = poly::powmod(x, checked_pow(p, m / l), f, p);
    Coeffs g = poly::gcd(poly::sub(xq, x, p), f, p);
    if (poly::degree(g) != 0) return false;
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m over GF(p), where
// candidates are ordered by the integer value of the coefficient tuple
// (c_{m-1}, ..., c_0) in base p.
inline PrimePolynomial find_irreducible(std::int64_t p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p is not prime");
  if (m < 1) throw std::invalid_argument("find_irreducible: m must be >= 1");
  const std::int64_t count = checked_pow(p, m);  // number of monic candidates
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Coeffs f(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t v = idx;
    for (int i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(i)] = v % p;
      v /= p;
    }
    f[static_cast<std::size_t>(m)] = 1;
    if (is_irreducible(f, p)) return PrimePolynomial{p, std::move(f)};
  }
  throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

class Field;

// Element of GF(p^m); coefficient vector always reduced to degree < m.
// Elements from different field contexts never mix.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* field, Coeffs c) : field_(field), c_(std::move(c)) {}

  const Coeffs& coeffs() const { return c_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return poly::degree(c_) < 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field* field_ = nullptr;
  Coeffs c_;
};

class Field {
 public:
  Field(std::int64_t p, PrimePolynomial modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("Field: p is not prime");
    if (modulus_.characteristic != p_)
      throw std::invalid_argument("Field: modulus characteristic mismatch");
    m_ = modulus_.degree();
    if (m_ < 1 || modulus_.coefficients.back() != 1)
      throw std::invalid_argument("Field: modulus must be monic of degree >= 1");
    if (!is_irreducible(modulus_.coefficients, p_))
      throw std::invalid_argument("Field: modulus is reducible");
    order_ = checked_pow(p_, m_);
    generator_coeffs_ = find_generator_coeffs();
  }

  // GF(p^m) with the deterministic lexicographically-smallest modulus.
  static Field extension(std::int64_t p, int m) { return Field(p, find_irreducible(p, m)); }

  // Elements hold a pointer to their field, so the context must stay put.
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::int64_t characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t order() const { return order_; }
  const PrimePolynomial& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(this, {}); }
  FieldElement one() const { return element({1}); }
  FieldElement x() const { return element({0, 1}); }

  FieldElement element(Coeffs c) const {
    for (auto& v : c) v = mod_floor(v, p_);
    return FieldElement(this, poly::mod(std::move(c), modulus_.coefficients, p_));
  }

  // Element whose coefficient tuple (c_{m-1},...,c_0), read as a base-p
  // integer, equals idx. idx = 0 is zero, idx = p is "x".
  FieldElement from_index(std::int64_t idx) const {
    if (idx < 0 || idx >= order_) throw std::invalid_argument("Field::from_index: out of range");
    Coeffs c(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      c[static_cast<std::size_t>(i)] = idx % p_;
      idx /= p_;
    }
    poly::trim(c);
    return FieldElement(this, std::move(c));
  }

  // Generator of the multiplicative group, certified by
  // g^{(p^m-1)/l} != 1 for every prime l | p^m - 1.
  FieldElement generator() const { return FieldElement(this, generator_coeffs_); }

  bool same_context(const Field& o) const {
    return p_ == o.p_ && modulus_.coefficients == o.modulus_.coefficients;
  }

  Coeffs reduce_product(const Coeffs& a, const Coeffs& b) const {
    return poly::mod(poly::mul(a, b, p_), modulus_.coefficients, p_);
  }

 private:
  bool has_full_order(const Coeffs& c, const std::vector<std::int64_t>& primes) const {
    const std::int64_t n = order_ - 1;
    if (poly::powmod(c, n, modulus_.coefficients, p_) != Coeffs{1}) return false;
    for (std::int64_t l : primes)
      if (poly::powmod(c, n / l, modulus_.coefficients, p_) == Coeffs{1}) return false;
    return true;
  }

  Coeffs find_generator_coeffs() const {
    const std::vector<std::int64_t> primes = distinct_prime_factors(order_ - 1);
    if (m_ == 1) {
      // Constants are the whole field; scan 1, 2, ..., p-1.
      for (std::int64_t v = 1; v < p_; ++v)
        if (has_full_order(Coeffs{v}, primes)) return Coeffs{v};
      throw std::logic_error("Field: no generator found");
    }
    // A generator has order p^m - 1 > p - 1, so it is never a prime-field
    // constant: start the lexicographic scan at "x" (index p).
    for (std::int64_t idx = p_; idx < order_; ++idx) {
      Coeffs c(static_cast<std::size_t>(m_), 0);
      std::int64_t v = idx;
      for (int i = 0; i < m_; ++i) {
        c[static_cast<std::size_t>(i)] = v % p_;
        v /= p_;
      }
      poly::trim(c);
      if (has_full_order(c, primes)) return c;
    }
    throw std::logic_error("Field: no generator found");
  }

  std::int64_t p_;
  PrimePolynomial modulus_;
  int m_ = 0;
  std::int64_t order_ = 0;
  Coeffs generator_coeffs_;
};

inline void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_context(b.field()))
    throw std::invalid_argument("field elements from different contexts");
}

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  return FieldElement(field_, poly::add(c_, o.c_, field_->characteristic()));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*this, o);
  return FieldElement(field_, poly::sub(c_, o.c_, field_->characteristic()));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  return FieldElement(field_, field_->reduce_product(c_, o.c_));
}

inline FieldElement FieldElement::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("FieldElement::pow: negative exponent");
  return FieldElement(field_, poly::powmod(c_, e, field_->modulus().coefficients,
                                           field_->characteristic()));
}

inline bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_context(o.field()) && c_ == o.c_;
}

}  // namespace sidon
