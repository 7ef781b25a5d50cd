#include "mgstill/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "mgstill/errors.hpp"

namespace mgstill {

using engine::FreeModule;
using engine::GFp;
using engine::ModuleOrder;
using engine::MPoly;
using engine::QQField;
using engine::RingOrder;

namespace {

template <class Fn>
auto with_field(const FieldDesc& fd, Fn&& fn) {
  if (fd.kind == FieldDesc::Kind::GF) return fn(GFp(fd.p));
  return fn(QQField{});
}

RingOrder make_ring_order(const TermOrder& order) { return RingOrder{order.kind, order.weights}; }

template <class F>
std::vector<MPoly<F>> to_engine_all(const F& f, const ModuleOrder& o,
                                    const std::vector<Polynomial>& gens, int nvars) {
  std::vector<MPoly<F>> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(to_engine_poly(f, o, g, nvars));
  return out;
}

}  // namespace

std::optional<long> weight_degree(const Polynomial& f, const std::vector<long>& weights) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  std::optional<long> deg;
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (const auto& [v, k] : e) {
      if (v >= static_cast<int>(weights.size()))
        throw std::invalid_argument("variable index outside the weight vector");
      d += weights[v] * k;
    }
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::vector<Polynomial> groebner_basis(const MGPolyRing& ring, const std::vector<Polynomial>& gens,
                                       const TermOrder& order, const ResolveOptions& opts) {
  order.validate(ring.nvars());
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  auto result = with_field(ring.field(), [&](auto f) {
    ModuleOrder o{make_ring_order(order), FreeModule::rank_one(ring.nvars())};
    engine::GBOptions<decltype(f)> gopts;
    gopts.mode = opts.mode;
    gopts.guard = opts.guard;
    auto gb = engine::buchberger(f, o, to_engine_all(f, o, gens, ring.nvars()), gopts);
    std::vector<Polynomial> out;
    for (const auto& g : gb.basis) out.push_back(from_engine_poly(f, g));
    return out;
  });
  if (!is_groebner(ring, result, order))
    throw std::logic_error("Groebner self-check failed");
  return result;
}

bool is_groebner(const MGPolyRing& ring, const std::vector<Polynomial>& basis,
                 const TermOrder& order) {
  order.validate(ring.nvars());
  return with_field(ring.field(), [&](auto f) {
    ModuleOrder o{make_ring_order(order), FreeModule::rank_one(ring.nvars())};
    auto b = to_engine_all(f, o, basis, ring.nvars());
    for (auto& g : b) {
      if (g.is_zero()) return false;
      engine::make_monic(f, g);
    }
    auto view = engine::basis_view(b);
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (b[i].lead().comp != b[j].lead().comp) continue;
        auto p = engine::detail::make_pair(o, b, static_cast<int>(i), static_cast<int>(j));
        auto rem = engine::normal_form(f, o, engine::detail::s_poly(f, o, b, p), view);
        if (!rem.is_zero()) return false;
      }
    return true;
  });
}

std::vector<std::vector<Polynomial>> syzygies(const MGPolyRing& ring,
                                              const std::vector<Polynomial>& gens,
                                              const TermOrder& order, const ResolveOptions& opts) {
  order.validate(ring.nvars());
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  const int m = static_cast<int>(gens.size());
  const int nvars = ring.nvars();

  auto result = with_field(ring.field(), [&](auto f) {
    using Fld = decltype(f);
    ModuleOrder o{make_ring_order(order), FreeModule::rank_one(nvars)};
    ModuleOrder cof_order{make_ring_order(order), FreeModule::trivial(m, nvars)};
    auto inputs = to_engine_all(f, o, gens, nvars);

    engine::GBOptions<Fld> gopts;
    gopts.mode = ExecMode::Serial;
    gopts.track_cofactors = true;
    gopts.guard = opts.guard;
    auto gb = engine::buchberger(f, o, inputs, gopts);

    auto schreyer = engine::schreyer_syzygies(f, o, gb.basis, ExecMode::Serial, opts.guard);

    std::vector<MPoly<Fld>> raw;
    for (const auto& sigma : schreyer.syzygies) {
      MPoly<Fld> acc;
      for (const auto& tm : sigma.t)
        acc = engine::sub_scaled(f, cof_order, acc, gb.cofactors[tm.comp], tm.exps, f.neg(tm.c));
      raw.push_back(std::move(acc));
    }
    // rows of I - B*A: e_i minus the division of input_i by the basis pushed
    // through the cofactors
    auto view = engine::basis_view(gb.basis);
    std::vector<int> identity(gb.basis.size());
    for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
    for (int i = 0; i < m; ++i) {
      std::vector<engine::QuotTerm<Fld>> quots;
      auto rem = engine::normal_form(f, o, inputs[i], view, &quots);
      if (!rem.is_zero()) throw std::logic_error("ideal generator did not reduce against its basis");
      MPoly<Fld> acc;
      acc.t.push_back(engine::Term<Fld>{i, engine::Exps(nvars, 0), f.one()});
      acc = engine::detail::apply_quotients(f, cof_order, std::move(acc), quots, gb.cofactors,
                                            identity);
      raw.push_back(std::move(acc));
    }

    std::vector<std::vector<Polynomial>> out;
    for (const auto& r : raw) {
      if (r.is_zero()) continue;
      std::vector<Polynomial> tuple(m);
      for (const auto& tm : r.t) {
        Exponents e;
        for (std::size_t v = 0; v < tm.exps.size(); ++v)
          if (tm.exps[v] != 0) e[static_cast<int>(v)] = tm.exps[v];
        tuple[tm.comp] = tuple[tm.comp] + Polynomial::monomial(std::move(e), f.to_rational(tm.c));
      }
      if (std::find(out.begin(), out.end(), tuple) == out.end()) out.push_back(std::move(tuple));
    }
    return out;
  });

  if (ring.field().kind == FieldDesc::Kind::QQ) {
    for (const auto& tuple : result) {
      Polynomial acc;
      for (int i = 0; i < m; ++i) acc = acc + tuple[i] * gens[i];
      if (!acc.is_zero()) throw std::logic_error("syzygy failed arithmetic verification");
    }
  }
  return result;
}

const std::vector<std::vector<long>>& GradedComplex::degrees() const {
  return std::visit([](const auto& c) -> const std::vector<std::vector<long>>& { return c.degrees; },
                    impl_);
}

std::vector<long> GradedComplex::ranks() const {
  return std::visit([](const auto& c) { return c.ranks(); }, impl_);
}

int GradedComplex::length() const {
  return std::visit([](const auto& c) { return c.length(); }, impl_);
}

bool GradedComplex::verify(ExecMode mode) const {
  return std::visit([mode](const auto& c) { return c.verify(mode); }, impl_);
}

namespace {

std::vector<long> resolve_weights(const IdealPresentation& ideal, std::vector<long> weights) {
  if (weights.empty()) weights.assign(ideal.ring.nvars(), 1);
  if (static_cast<int>(weights.size()) != ideal.ring.nvars())
    throw std::invalid_argument("weight vector length must match the variable count");
  for (long w : weights)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) throw std::invalid_argument("zero ideal generator");
    if (!weight_degree(g, weights))
      throw analysis_error("generator is inhomogeneous under the supplied weight vector");
  }
  return weights;
}

}  // namespace

GradedComplex free_resolution(const IdealPresentation& ideal, std::vector<long> weights,
                              const ResolveOptions& opts) {
  weights = resolve_weights(ideal, std::move(weights));
  TermOrder order{opts.order_kind, weights};
  GradedComplex out = with_field(ideal.ring.field(), [&](auto f) {
    ModuleOrder o{make_ring_order(order), FreeModule::rank_one(ideal.ring.nvars())};
    auto gens = to_engine_all(f, o, ideal.generators, ideal.ring.nvars());
    auto res = engine::resolve(f, make_ring_order(order), std::move(gens), opts.mode, opts.guard);
    return GradedComplex(GradedComplex::Impl(std::move(res.complex)));
  });
  if (!out.verify(opts.mode)) throw std::logic_error("resolution differentials do not compose to zero");
  return out;
}

std::pair<GradedComplex, BettiTable> minimalize(const GradedComplex& complex) {
  return std::visit(
      [](const auto& c) {
        auto [mini, betti] = engine::minimalize(c);
        return std::pair(GradedComplex(GradedComplex::Impl(std::move(mini))), std::move(betti));
      },
      complex.impl());
}

long pdim(const IdealPresentation& ideal, std::vector<long> weights, const ResolveOptions& opts) {
  if (ideal.generators.empty()) return 0;
  auto [mini, betti] = minimalize(free_resolution(ideal, std::move(weights), opts));
  if (!mini.verify(opts.mode)) throw std::logic_error("minimal complex failed verification");
  return mini.length();
}

bool is_regular_sequence(const IdealPresentation& ideal, std::vector<long> weights,
                         const ResolveOptions& opts) {
  return pdim(ideal, std::move(weights), opts) == static_cast<long>(ideal.generators.size());
}

std::string BettiTable::str() const {
  std::ostringstream os;
  const int len = length();
  for (int i = 0; i <= len; ++i) {
    os << "  " << i << ":";
    bool any = false;
    for (const auto& [key, v] : counts) {
      if (key.first != i || v == 0) continue;
      os << " " << v << "@deg" << key.second;
      any = true;
    }
    if (!any) os << " -";
    os << "\n";
  }
  return os.str();
}

}  // namespace mgstill
