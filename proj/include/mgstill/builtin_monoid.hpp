#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mgstill/degree_vector.hpp"

namespace mgstill {

/// The named infinitely generated monoids used by the tests and the CLI.
///
///  - HalfplanePlusOrigin: (Z x Z>0) u {(0,0)} in dimension 2. BF; the second
///    coordinate is a height function.
///  - PrimeReciprocal: submonoid of Q>=0 generated by {1/p : p prime}.
///    Well-founded but not BF (1 is a sum of p copies of 1/p for every p).
///  - PrimeShift: submonoid of Q generated by {1} u {n + 1/p_n : n >= 1} with
///    p_n the n-th prime. BF, yet admits no flattening homomorphism to Z>=0:
///    any candidate would need phi(1) divisible by every prime.
enum class BuiltinTag { HalfplanePlusOrigin, PrimeReciprocal, PrimeShift };

class BuiltinMonoid {
 public:
  explicit BuiltinMonoid(BuiltinTag tag) : tag_(tag) {}
  BuiltinTag tag() const { return tag_; }
  int dim() const { return tag_ == BuiltinTag::HalfplanePlusOrigin ? 2 : 1; }
  bool contains(const DegreeVector& q) const;

 private:
  BuiltinTag tag_;
};

/// Canonical form h1 + sum_k hk/pk with 0 < hk < pk of a member of the
/// prime-reciprocal monoid. Uniqueness is CRT on the squarefree denominator.
struct PrimeReciprocalForm {
  BigInt integer_part;                        // h1 >= 0
  std::vector<std::pair<long, long>> parts;   // (prime pk, residue hk), pk ascending
};

/// The canonical form when q (>= 0) is a member, nullopt otherwise.
/// Membership: squarefree fractional denominator and nonnegative h1.
std::optional<PrimeReciprocalForm> prime_reciprocal_canonical(const Rational& q);

/// Value of a canonical form, h1 + sum hk/pk.
Rational prime_reciprocal_value(const PrimeReciprocalForm& form);

/// h1 + sum hk: any strictly descending chain from q has at most this many
/// elements. Throws analysis_error when q is not a member.
long descending_chain_bound(const Rational& q);

/// p copies of 1/p — a length-p factorization of 1 in the prime-reciprocal
/// monoid, witnessing that factorization lengths of 1 are unbounded.
std::vector<Rational> unbounded_factorization_witness(long p);

bool is_prime(long n);
long nth_prime(long n);  // 1-based: nth_prime(1) == 2

}  // namespace mgstill
