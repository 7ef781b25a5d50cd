#include "mgstill/monoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "mgstill/errors.hpp"

namespace mgstill {

FgMonoid::FgMonoid(int dim, std::vector<DegreeVector> generators) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  for (auto& g : generators) {
    if (g.dim() != dim) throw std::invalid_argument("generator dimension mismatch");
    if (g.is_zero()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(std::move(g));
  }
}

namespace {

NonBfCertificate make_certificate(const FgMonoid& m, const std::vector<BigInt>& lambda) {
  NonBfCertificate cert;
  const auto& gens = m.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (lambda[i] == 0) continue;
    if (cert.relation.empty()) cert.element = gens[i];
    cert.relation.emplace_back(gens[i], lambda[i]);
  }
  return cert;
}

}  // namespace

PointednessResult is_pointed(const FgMonoid& m) {
  GordanResult g = positive_functional_or_certificate(m.generators());
  if (g.has_witness()) return {true, std::nullopt};
  return {false, make_certificate(m, *g.certificate)};
}

BfResult has_bounded_factorization(const FgMonoid& m) {
  GordanResult g = positive_functional_or_certificate(m.generators());
  if (g.has_witness()) return {true, HeightWitness{std::move(*g.witness)}, std::nullopt};
  return {false, std::nullopt, make_certificate(m, *g.certificate)};
}

bool verify_height_witness(const std::vector<DegreeVector>& gens, const DegreeVector& functional) {
  for (const auto& g : gens) {
    require_same_dim(g, functional);
    if (functional.dot(g) < Rational(1)) return false;
  }
  return true;
}

namespace {

HeightWitness require_witness(const FgMonoid& m, const char* op) {
  BfResult bf = has_bounded_factorization(m);
  if (!bf.bounded)
    throw analysis_error(std::string(op) + " requires a pointed monoid (search is unbounded)");
  return *bf.witness;
}

}  // namespace

bool member(const FgMonoid& m, const DegreeVector& q) {
  if (q.dim() != m.dim()) throw std::invalid_argument("dimension mismatch");
  if (q.is_zero()) return true;
  HeightWitness w = require_witness(m, "membership");
  Rational h = w.functional.dot(q);
  if (h < Rational(1)) return false;
  long bound = static_cast<long>(h.floor().get_si());
  return !bounded_nonneg_solutions(m.generators(), q, bound).empty();
}

bool leq(const FgMonoid& m, const DegreeVector& g, const DegreeVector& h) {
  return member(m, h - g);
}

long max_factorization_length(const FgMonoid& m, const HeightWitness& w, const DegreeVector& g) {
  if (!verify_height_witness(m.generators(), w.functional))
    throw std::invalid_argument("invalid height witness for this monoid");
  if (g.is_zero()) return 0;
  Rational h = w.functional.dot(g);
  long bound = h.sign() < 0 ? -1 : static_cast<long>(h.floor().get_si());
  if (bound < 0) throw analysis_error("element is not a member of the monoid");
  auto sols = bounded_nonneg_solutions(m.generators(), g, bound);
  if (sols.empty()) throw analysis_error("element is not a member of the monoid");
  long best = 0;
  for (const auto& x : sols) {
    long s = 0;
    for (long xi : x) s += xi;
    best = std::max(best, s);
  }
  return best;
}

std::optional<DegreeVector> flattening_exists(const FgMonoid& m) {
  for (const auto& g : m.generators())
    if (!g.all_integer()) throw std::invalid_argument("flattening requires integer generators");
  BfResult bf = has_bounded_factorization(m);
  if (!bf.bounded) return std::nullopt;
  const DegreeVector& c = bf.witness->functional;
  BigInt scale = 1;
  for (const auto& q : c.entries()) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), q.den().get_mpz_t());
    scale = l;
  }
  return c.scaled(Rational(scale));
}

}  // namespace mgstill
