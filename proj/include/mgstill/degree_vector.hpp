#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgstill/rational.hpp"

namespace mgstill {

/// Element of the grading group embedded in Q^k. Two vectors are equal iff
/// they agree entrywise; dimension is part of the value.
class DegreeVector {
 public:
  DegreeVector() = default;
  explicit DegreeVector(std::vector<Rational> entries) : e_(std::move(entries)) {}
  static DegreeVector zero(int dim) { return DegreeVector(std::vector<Rational>(dim)); }

  int dim() const { return static_cast<int>(e_.size()); }
  const Rational& operator[](int i) const { return e_[i]; }
  const std::vector<Rational>& entries() const { return e_; }

  bool is_zero() const;
  bool all_integer() const;
  std::vector<BigInt> to_integers() const;  // requires all_integer

  DegreeVector operator+(const DegreeVector& o) const;
  DegreeVector operator-(const DegreeVector& o) const;
  DegreeVector operator-() const;
  DegreeVector scaled(const Rational& c) const;
  Rational dot(const DegreeVector& o) const;

  bool operator==(const DegreeVector& o) const { return e_ == o.e_; }
  std::strong_ordering operator<=>(const DegreeVector& o) const;

  /// "(1,-2/3)" — always parenthesized, also for dimension 1.
  std::string str() const;
  /// Parses the str() format. Throws std::invalid_argument.
  static DegreeVector parse(const std::string& text);

 private:
  std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const DegreeVector& v);

void require_same_dim(const DegreeVector& a, const DegreeVector& b);
void require_same_dim(const std::vector<DegreeVector>& vs);

}  // namespace mgstill
