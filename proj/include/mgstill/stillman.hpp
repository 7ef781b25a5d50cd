#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgstill/int_matrix.hpp"
#include "mgstill/monoid.hpp"
#include "mgstill/polyring.hpp"
#include "mgstill/resolution.hpp"

namespace mgstill {

using DegreeSequence = std::vector<DegreeVector>;

/// A length-B factorization d = d_1 + ... + d_B into nonzero degrees.
struct FactorizationCert {
  DegreeVector target;
  std::vector<DegreeVector> parts;
};

/// N = floor(witness . d): any monomial whose degree is <=_Lambda d has total
/// standard degree at most N, because the witness is >= 1 on every generator
/// and >= 0 on the monoid.
long flatten_degree_bound(const HeightWitness& w, const DegreeVector& d);

/// k[x, y, z_1..z_n] with every variable of degree 1/n and the generators
/// x^n, y^n, x^{n-1} z_1 + x^{n-2} y z_2 + ... + y^{n-1} z_n.
IdealPresentation mccullough_family(int n, FieldDesc field = FieldDesc::gf(32003));

/// k[x_1..x_n, y_1..y_n] standard graded with prod x_i, prod y_i and
/// sum_i prod_{j != i} x_j y_j. Rejects n = 1 (empty product degenerates).
IdealPresentation burch_kohn_family(int n, FieldDesc field = FieldDesc::gf(32003));

struct CounterexampleResult {
  MGPolyRing ring;
  IdealPresentation ideal;
  FactorizationCert cert;
  /// parts[i] expressed as generator multiplicities, so the degree bound
  /// <= 2d of every third-generator monomial is checkable without search.
  std::vector<std::vector<BigInt>> part_combinations;
};

/// Builds, from a non-BF monoid, the length-b factorization and the graded
/// ring/ideal whose quotient has projective dimension b + 2: pad the zero
/// relation until at least b parts, append the target generator, then merge
/// adjacent parts left-to-right (skipping merges that would create a zero
/// part) until exactly b remain. Throws analysis_error when the monoid is BF.
CounterexampleResult non_bf_counterexample(const FgMonoid& m, int b,
                                           FieldDesc field = FieldDesc::gf(32003));

struct FinestGrading {
  GradingSpec grading;
  int rank = 0;                   // free rank of the universal grading group
  std::vector<BigInt> torsion;    // discarded invariant factors > 1
};

/// Universal grading making every generator homogeneous: Smith normal form of
/// the exponent-difference matrix, free part of Z^n / rowspace. Homogeneity of
/// the inputs under the output is asserted.
FinestGrading finest_grading(const std::vector<Polynomial>& gens, int nvars);

/// Known standard-graded bounds, keyed by sorted flattened degree sequence.
class KnownBoundsTable {
 public:
  static KnownBoundsTable builtin();
  static KnownBoundsTable load(const std::string& path);  // falls back to builtin on parse
  void add(std::vector<long> sorted_degrees, long bound);
  std::optional<long> lookup(std::vector<long> degrees) const;  // sorts its argument
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::vector<long>, long>> entries_;
};

struct BoundReport {
  bool connected = false;
  BfResult support_bf;
  DegreeSequence degree_sequence;                 // the d used (given or derived)
  std::optional<std::vector<long>> flatten_bounds;  // per generator, floor(w . d_i)
  std::optional<std::vector<long>> flattened_degrees;  // sorted copy for lookup
  std::optional<long> known_bound;
  long hilbert_bound = 0;  // number of distinct variables in the generators
  std::optional<long> pdim;
  std::optional<bool> regular_sequence;
  int finest_rank = 0;
  DegreeSequence refined_degrees;  // generator degrees under the finest grading
  std::vector<BigInt> finest_torsion;
};

struct ReportOptions {
  bool compute_pdim = true;
  std::vector<long> weights;  // all-ones when empty
  KnownBoundsTable table = KnownBoundsTable::builtin();
  ResolveOptions resolve;
};

/// Assembles the bound report. Throws analysis_error for rings with a
/// degree-0 variable (no Stillman bound for non-connected gradings). A
/// non-BF support yields a certificate-only report.
BoundReport stillman_report(const IdealPresentation& ideal,
                            const std::optional<DegreeSequence>& d = std::nullopt,
                            const ReportOptions& opts = {});

}  // namespace mgstill
