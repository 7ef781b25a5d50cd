#include "mgstill/polyring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mgstill/errors.hpp"

namespace mgstill {

FieldDesc FieldDesc::gf(long prime) {
  auto prime_ok = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  if (!prime_ok(prime)) throw std::invalid_argument("GF modulus must be prime");
  return FieldDesc{Kind::GF, prime};
}

MGPolyRing::MGPolyRing(std::vector<std::string> variables, GradingSpec grading, FieldDesc field)
    : vars_(std::move(variables)), grading_(std::move(grading)), field_(field) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable: " + v);
  }
  if (grading_.degree_of.size() != vars_.size())
    throw std::invalid_argument("grading must assign a degree to every variable");
  for (const auto& d : grading_.degree_of)
    if (d.dim() != grading_.rank) throw std::invalid_argument("degree rank mismatch");
}

const DegreeVector& MGPolyRing::degree_of(int var) const {
  if (var < 0 || var >= nvars()) throw std::invalid_argument("unknown variable index");
  return grading_.degree_of[var];
}

std::optional<int> MGPolyRing::variable_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

IdealPresentation make_ideal(MGPolyRing ring, std::vector<Polynomial> gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero ideal generator");
    if (g.max_variable() >= ring.nvars())
      throw std::invalid_argument("generator uses a variable outside the ring");
  }
  return IdealPresentation{std::move(ring), std::move(gens)};
}

DegreeVector monomial_degree(const MGPolyRing& ring, const Exponents& e) {
  DegreeVector acc = DegreeVector::zero(ring.grading().rank);
  for (const auto& [v, k] : e) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    acc = acc + ring.degree_of(v).scaled(Rational(k));
  }
  return acc;
}

std::optional<DegreeVector> is_homogeneous(const MGPolyRing& ring, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  std::optional<DegreeVector> deg;
  for (const auto& [e, c] : f.terms()) {
    DegreeVector d = monomial_degree(ring, e);
    if (!deg)
      deg = std::move(d);
    else if (!(*deg == d))
      return std::nullopt;
  }
  return deg;
}

FgMonoid support_monoid(const MGPolyRing& ring) {
  return FgMonoid(ring.grading().rank, ring.grading().degree_of);
}

bool has_zero_degree_variable(const MGPolyRing& ring) {
  return std::any_of(ring.grading().degree_of.begin(), ring.grading().degree_of.end(),
                     [](const DegreeVector& d) { return d.is_zero(); });
}

bool is_connected(const MGPolyRing& ring) {
  return !has_zero_degree_variable(ring) && is_pointed(support_monoid(ring)).pointed;
}

bool degree_sequence_check(const IdealPresentation& ideal, const std::vector<DegreeVector>& d) {
  if (d.size() != ideal.generators.size())
    throw std::invalid_argument("degree sequence length must match the generator count");
  FgMonoid support = support_monoid(ideal.ring);
  if (!is_pointed(support).pointed)
    throw analysis_error("degree sequence check requires a pointed support monoid");
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& [e, c] : ideal.generators[i].terms())
      if (!leq(support, monomial_degree(ideal.ring, e), d[i])) return false;
  return true;
}

RegradeResult regrade(const MGPolyRing& ring, const QMatrix& hom) {
  const int k = ring.grading().rank;
  if (hom.cols != k) throw std::invalid_argument("regrading map has wrong source rank");
  GradingSpec g;
  g.rank = hom.rows;
  for (const auto& d : ring.grading().degree_of) {
    std::vector<Rational> image(hom.rows);
    for (int i = 0; i < hom.rows; ++i)
      for (int j = 0; j < k; ++j) image[i] += hom.at(i, j) * d[j];
    g.degree_of.emplace_back(std::move(image));
  }
  RegradeResult out{MGPolyRing(ring.variables(), std::move(g), ring.field()), std::nullopt};
  if (hom.rows == 1) {
    bool positive = true;
    for (const auto& d : out.ring.grading().degree_of)
      if (d[0].sign() <= 0) positive = false;
    out.positive = positive;
  }
  return out;
}

MGPolyRing adjoin_support_variables(const MGPolyRing& ring, const std::vector<DegreeVector>& target) {
  FgMonoid current = support_monoid(ring);
  for (const auto& g : current.generators())
    if (std::find(target.begin(), target.end(), g) == target.end())
      throw std::invalid_argument("target generators must contain the current support generators");

  std::vector<std::string> names = ring.variables();
  GradingSpec grading = ring.grading();
  auto fresh_name = [&names](int hint) {
    for (int i = hint;; ++i) {
      std::string candidate = "u" + std::to_string(i);
      if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
    }
  };
  int counter = 1;
  for (const auto& t : target) {
    if (t.dim() != grading.rank) throw std::invalid_argument("target degree rank mismatch");
    if (t.is_zero()) throw std::invalid_argument("zero target degree");
    bool already = std::any_of(grading.degree_of.begin(), grading.degree_of.end(),
                               [&](const DegreeVector& d) { return d == t; });
    if (already) continue;
    std::string n = fresh_name(counter++);
    names.push_back(n);
    grading.degree_of.push_back(t);
  }
  return MGPolyRing(std::move(names), std::move(grading), ring.field());
}

}  // namespace mgstill
