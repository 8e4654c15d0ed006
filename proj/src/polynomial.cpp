#include "wriggle/polynomial.hpp"

#include <limits>
#include <set>
#include <string>

namespace wriggle {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CoefficientOverflowError("64-bit overflow in " + std::to_string(a) + " + " +
                                   std::to_string(b));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CoefficientOverflowError("64-bit overflow in " + std::to_string(a) + " * " +
                                   std::to_string(b));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::constant(std::int64_t value) {
  LaurentPolynomial p;
  p.add_term({}, value);
  return p;
}

LaurentPolynomial LaurentPolynomial::term(std::int64_t coeff, int variable,
                                          std::int64_t exponent) {
  LaurentPolynomial p;
  Monomial m;
  if (exponent != 0) m[variable] = exponent;
  p.add_term(m, coeff);
  return p;
}

void LaurentPolynomial::add_term(const Monomial& monomial, std::int64_t coeff) {
  if (coeff == 0) return;
  for (const auto& [variable, exponent] : monomial) {
    if (variable < 1) throw Error("variable indices are 1-based");
    if (exponent == 0) throw Error("canonical monomials carry no zero exponent");
  }
  auto [it, inserted] = terms_.emplace(monomial, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [monomial, coeff] : other.terms_) add_term(monomial, coeff);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [monomial, coeff] : other.terms_) {
    if (coeff == std::numeric_limits<std::int64_t>::min()) {
      throw CoefficientOverflowError("cannot negate INT64_MIN coefficient");
    }
    add_term(monomial, -coeff);
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial result;
  result -= *this;
  return result;
}

LaurentPolynomial LaurentPolynomial::scaled(std::int64_t factor) const {
  LaurentPolynomial result;
  for (const auto& [monomial, coeff] : terms_) {
    result.add_term(monomial, checked_mul(coeff, factor));
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::times_monomial(const Monomial& shift) const {
  LaurentPolynomial result;
  for (const auto& [monomial, coeff] : terms_) {
    Monomial shifted = monomial;
    for (const auto& [variable, exponent] : shift) {
      std::int64_t& slot = shifted[variable];
      slot = checked_add(slot, exponent);
      if (slot == 0) shifted.erase(variable);
    }
    result.add_term(shifted, coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::invert_variable(int variable) const {
  LaurentPolynomial result;
  for (const auto& [monomial, coeff] : terms_) {
    Monomial flipped = monomial;
    auto it = flipped.find(variable);
    if (it != flipped.end()) it->second = -it->second;
    result.add_term(flipped, coeff);
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::rename(const std::map<int, int>& mapping) const {
  std::set<int> images;
  for (int variable : variables()) {
    auto it = mapping.find(variable);
    const int image = it == mapping.end() ? variable : it->second;
    if (!images.insert(image).second) {
      throw Error("variable renaming is not injective on used variables");
    }
  }
  LaurentPolynomial result;
  for (const auto& [monomial, coeff] : terms_) {
    Monomial renamed;
    for (const auto& [variable, exponent] : monomial) {
      auto it = mapping.find(variable);
      renamed[it == mapping.end() ? variable : it->second] = exponent;
    }
    result.add_term(renamed, coeff);
  }
  return result;
}

std::int64_t LaurentPolynomial::eval_ones() const {
  std::int64_t total = 0;
  for (const auto& [monomial, coeff] : terms_) total = checked_add(total, coeff);
  return total;
}

std::vector<int> LaurentPolynomial::variables() const {
  std::set<int> seen;
  for (const auto& [monomial, coeff] : terms_) {
    for (const auto& [variable, exponent] : monomial) seen.insert(variable);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace wriggle
