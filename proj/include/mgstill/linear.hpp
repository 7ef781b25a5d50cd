#pragma once

#include <optional>
#include <vector>

#include "mgstill/degree_vector.hpp"

namespace mgstill {

/// Outcome of the positive-functional search: exactly one member is engaged.
/// `witness` satisfies witness . g >= 1 for every generator; `certificate` is a
/// nontrivial nonnegative integer relation sum_i lambda_i g_i = 0.
struct GordanResult {
  std::optional<DegreeVector> witness;
  std::optional<std::vector<BigInt>> certificate;
  bool has_witness() const { return witness.has_value(); }
};

/// Gordan dichotomy over exact rationals. Generators must be nonzero and share
/// a dimension. The returned object is re-verified arithmetically before
/// returning; failure to verify is a logic error.
GordanResult positive_functional_or_certificate(const std::vector<DegreeVector>& gens);

/// All tuples x of nonnegative integers with sum_i x_i * gens_i == target and
/// sum_i x_i <= length_bound, in lexicographic order.
std::vector<std::vector<long>> bounded_nonneg_solutions(const std::vector<DegreeVector>& gens,
                                                        const DegreeVector& target,
                                                        long length_bound);

/// Dense rational matrix, just big enough for the solver below.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;
  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// One exact solution of A x = b (free variables set to 0), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace mgstill
