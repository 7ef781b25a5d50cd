#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "mgstill/engine.hpp"
#include "mgstill/polyring.hpp"
#include "mgstill/resolve.hpp"
#include "mgstill/term_order.hpp"

namespace mgstill {

struct ResolveOptions {
  ExecMode mode = ExecMode::Parallel;
  TermOrder::Kind order_kind = TermOrder::Kind::Degrevlex;
  ComputeGuard guard;
};

/// Common weighted degree of all monomials, when f is homogeneous under the
/// weight vector. f must be nonzero.
std::optional<long> weight_degree(const Polynomial& f, const std::vector<long>& weights);

/// Reduced Groebner basis: monic, pairwise fully reduced, deterministic for a
/// fixed order. The result is self-checked (every S-pair reduces to zero).
std::vector<Polynomial> groebner_basis(const MGPolyRing& ring, const std::vector<Polynomial>& gens,
                                       const TermOrder& order, const ResolveOptions& opts = {});

/// Every S-pair of `basis` reduces to zero against it.
bool is_groebner(const MGPolyRing& ring, const std::vector<Polynomial>& basis,
                 const TermOrder& order);

/// Generating set of { (a_1..a_m) : sum a_i gens_i = 0 } via Schreyer's
/// construction on a cofactor-tracked Groebner basis. Every returned tuple is
/// re-verified arithmetically.
std::vector<std::vector<Polynomial>> syzygies(const MGPolyRing& ring,
                                              const std::vector<Polynomial>& gens,
                                              const TermOrder& order,
                                              const ResolveOptions& opts = {});

/// Field-dispatched graded complex of free modules with weight-degree labels.
class GradedComplex {
 public:
  using Impl = std::variant<engine::Complex<engine::GFp>, engine::Complex<engine::QQField>>;
  explicit GradedComplex(Impl impl) : impl_(std::move(impl)) {}

  const std::vector<std::vector<long>>& degrees() const;
  std::vector<long> ranks() const;
  int length() const;
  bool verify(ExecMode mode = ExecMode::Serial) const;
  const Impl& impl() const { return impl_; }

 private:
  Impl impl_;
};

/// Free resolution of S/I over the ring's coefficient field. Generators must
/// be homogeneous under `weights` (all-ones when empty); the complex is built
/// from a reduced Groebner basis by iterated Schreyer syzygies and its
/// differentials are verified to compose to zero.
GradedComplex free_resolution(const IdealPresentation& ideal, std::vector<long> weights = {},
                              const ResolveOptions& opts = {});

/// Minimal complex homotopy equivalent to the input, plus its Betti table.
std::pair<GradedComplex, BettiTable> minimalize(const GradedComplex& complex);

/// Length of the minimal free resolution of S/I.
long pdim(const IdealPresentation& ideal, std::vector<long> weights = {},
          const ResolveOptions& opts = {});

/// pdim(S/<gens>) equals the number of generators (Koszul-sized resolution).
bool is_regular_sequence(const IdealPresentation& ideal, std::vector<long> weights = {},
                         const ResolveOptions& opts = {});

// --- engine conversions, shared with the test suites ---

template <class F>
engine::MPoly<F> to_engine_poly(const F& f, const engine::ModuleOrder& o, const Polynomial& p,
                                int nvars) {
  std::vector<engine::Term<F>> terms;
  terms.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    engine::Exps x(nvars, 0);
    for (const auto& [v, k] : e) {
      if (v >= nvars) throw std::invalid_argument("variable index outside the ring");
      x[v] = k;
    }
    auto coeff = f.from_rational(c);
    if (!f.is_zero(coeff)) terms.push_back(engine::Term<F>{0, std::move(x), std::move(coeff)});
  }
  return engine::make_poly(f, o, std::move(terms));
}

template <class F>
Polynomial from_engine_poly(const F& f, const engine::MPoly<F>& p) {
  Polynomial out;
  for (const auto& tm : p.t) {
    Exponents e;
    for (std::size_t v = 0; v < tm.exps.size(); ++v)
      if (tm.exps[v] != 0) e[static_cast<int>(v)] = tm.exps[v];
    out = out + Polynomial::monomial(std::move(e), f.to_rational(tm.c));
  }
  return out;
}

}  // namespace mgstill
