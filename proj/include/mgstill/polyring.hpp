#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgstill/degree_vector.hpp"
#include "mgstill/field.hpp"
#include "mgstill/linear.hpp"
#include "mgstill/monoid.hpp"
#include "mgstill/polynomial.hpp"

namespace mgstill {

/// Degree assignment for every variable; all degrees share the grading rank.
struct GradingSpec {
  int rank = 1;
  std::vector<DegreeVector> degree_of;  // indexed by variable

  bool operator==(const GradingSpec& o) const = default;
};

/// Multigraded polynomial ring: named variables, a degree per variable, and a
/// coefficient field descriptor.
class MGPolyRing {
 public:
  MGPolyRing(std::vector<std::string> variables, GradingSpec grading, FieldDesc field);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const GradingSpec& grading() const { return grading_; }
  const FieldDesc& field() const { return field_; }
  const DegreeVector& degree_of(int var) const;
  std::optional<int> variable_index(const std::string& name) const;

  bool operator==(const MGPolyRing& o) const = default;

 private:
  std::vector<std::string> vars_;
  GradingSpec grading_;
  FieldDesc field_;
};

struct IdealPresentation {
  MGPolyRing ring;
  std::vector<Polynomial> generators;  // nonzero, in the ring's variables
};

IdealPresentation make_ideal(MGPolyRing ring, std::vector<Polynomial> gens);

/// Degree of a monomial: sum of exponent * variable degree, exact.
DegreeVector monomial_degree(const MGPolyRing& ring, const Exponents& e);

/// Common degree of all monomials of f, if there is one. f must be nonzero.
std::optional<DegreeVector> is_homogeneous(const MGPolyRing& ring, const Polynomial& f);

/// Submonoid generated by the nonzero variable degrees (deduplicated).
/// A degree-0 variable is reported by has_zero_degree_variable, not here.
FgMonoid support_monoid(const MGPolyRing& ring);
bool has_zero_degree_variable(const MGPolyRing& ring);

/// Connected iff no variable has degree 0 and the support monoid is pointed:
/// together these forbid nonconstant degree-0 monomials, and conversely a
/// connected grading has pointed support.
bool is_connected(const MGPolyRing& ring);

/// Every monomial of the i-th generator has degree <= d_i in the divisibility
/// order of the support monoid (reflexive). Requires pointed support.
bool degree_sequence_check(const IdealPresentation& ideal, const std::vector<DegreeVector>& d);

struct RegradeResult {
  MGPolyRing ring;
  /// Present when the new rank is 1: whether all variable degrees are > 0.
  std::optional<bool> positive;
};

/// Push every variable degree through a rational linear map Q^k -> Q^k'
/// (hom has k' rows, k columns). Polynomial data is untouched.
RegradeResult regrade(const MGPolyRing& ring, const QMatrix& hom);

/// Extend the ring with one fresh variable per target generator that is not
/// already a variable degree, so the support monoid becomes exactly the
/// target set. The current support generators must be contained in target.
MGPolyRing adjoin_support_variables(const MGPolyRing& ring, const std::vector<DegreeVector>& target);

}  // namespace mgstill
