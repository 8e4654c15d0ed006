#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wriggle/errors.hpp"

namespace wriggle {

// Sparse exponent vector: 1-based variable index -> nonzero exponent.
using Monomial = std::map<int, std::int64_t>;

// Canonical term order. Terms are compared as sparse (variable, exponent)
// pair sequences: earlier variables first, larger exponents first within a
// variable, and on a shared prefix the longer monomial wins. The empty
// monomial (the constant term) therefore always sorts last, which yields
// e.g. "t1 + t1^-1 - 2".
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
    }
    return ia != a.end();
  }
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Integer-coefficient multivariate Laurent polynomial in t_1, t_2, ...
// Stored canonically: no zero coefficients, no zero exponents.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Monomial, std::int64_t, MonomialOrder>;

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(std::int64_t value);
  // coeff * t_variable^exponent
  static LaurentPolynomial term(std::int64_t coeff, int variable, std::int64_t exponent);

  void add_term(const Monomial& monomial, std::int64_t coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  LaurentPolynomial operator-() const;

  LaurentPolynomial scaled(std::int64_t factor) const;
  LaurentPolynomial times_monomial(const Monomial& monomial) const;

  // t_variable -> t_variable^-1
  LaurentPolynomial invert_variable(int variable) const;
  // Applies an injective variable renaming; unmapped variables stay put.
  LaurentPolynomial rename(const std::map<int, int>& mapping) const;

  std::int64_t eval_ones() const;
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  // 1-based indices of variables that actually occur.
  std::vector<int> variables() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  TermMap terms_;
};

}  // namespace wriggle
