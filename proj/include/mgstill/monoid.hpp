#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgstill/degree_vector.hpp"
#include "mgstill/linear.hpp"

namespace mgstill {

/// Finitely generated submonoid of Q^k. Cancellative by construction; zero
/// generators are stripped and duplicates removed, preserving first-seen order.
class FgMonoid {
 public:
  FgMonoid(int dim, std::vector<DegreeVector> generators);

  int dim() const { return dim_; }
  const std::vector<DegreeVector>& generators() const { return gens_; }

 private:
  int dim_;
  std::vector<DegreeVector> gens_;
};

/// Linear height function certificate: functional . g >= 1 on every generator
/// of the monoid it was produced for (and 0 at 0). Linearity makes the
/// superadditivity of a height function automatic.
struct HeightWitness {
  DegreeVector functional;
};

/// Witness that a monoid is not pointed / not BF: a nontrivial nonnegative
/// relation sum multiplicity*generator = 0. `element` has factorizations of
/// unbounded length (append the relation to its trivial factorization).
struct NonBfCertificate {
  DegreeVector element;
  std::vector<std::pair<DegreeVector, BigInt>> relation;
};

struct PointednessResult {
  bool pointed = false;
  std::optional<NonBfCertificate> certificate;
};

struct BfResult {
  bool bounded = false;
  std::optional<HeightWitness> witness;
  std::optional<NonBfCertificate> certificate;
};

/// q + q' = 0 forces q = q' = 0. Decided through the Gordan dichotomy on the
/// generators; the false branch carries a verifying certificate.
PointednessResult is_pointed(const FgMonoid& m);

/// For finitely generated submonoids of Q^k, bounded factorization holds iff a
/// positive linear functional on the generators exists, i.e. iff the monoid is
/// pointed. True branch carries the height witness, false branch the relation.
BfResult has_bounded_factorization(const FgMonoid& m);

/// True iff c . g >= 1 for every generator.
bool verify_height_witness(const std::vector<DegreeVector>& gens, const DegreeVector& functional);

/// Membership of q. Requires a pointed monoid: the height witness bounds the
/// search depth (throws analysis_error otherwise).
bool member(const FgMonoid& m, const DegreeVector& q);

/// Divisibility order: g <= h iff h - g is a member.
bool leq(const FgMonoid& m, const DegreeVector& g, const DegreeVector& h);

/// Exact maximum of sum x_i over factorizations of g into generators; the
/// search is bounded by floor(witness . g). Throws analysis_error when g is
/// not a member.
long max_factorization_length(const FgMonoid& m, const HeightWitness& w, const DegreeVector& g);

/// Integer flattening functional, positive on every generator, when one
/// exists (iff the monoid is pointed). Generators must have integer entries.
/// For finitely generated integer monoids this is equivalent to BF; the
/// divergence happens only for infinitely generated monoids (see the
/// PrimeShift built-in, which is BF yet admits no integer flattening).
std::optional<DegreeVector> flattening_exists(const FgMonoid& m);

}  // namespace mgstill
