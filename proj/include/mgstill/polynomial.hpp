#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgstill/rational.hpp"

namespace mgstill {

/// Sparse exponent vector: variable index -> positive exponent.
using Exponents = std::map<int, int>;

Exponents exponents_mul(const Exponents& a, const Exponents& b);
long exponents_total_degree(const Exponents& e);

/// Sparse multivariate polynomial with exact rational coefficients. The zero
/// polynomial is the empty term map; stored coefficients are never zero.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int index);
  static Polynomial monomial(Exponents e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Highest variable index used, or -1 for constants.
  int max_variable() const;

 private:
  std::map<Exponents, Rational> terms_;
};

/// Deterministic rendering with the grammar's token set (`name`, `^`, `*`,
/// `+`, `-`); terms ordered by total degree, then earliest-variable exponent.
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

}  // namespace mgstill
