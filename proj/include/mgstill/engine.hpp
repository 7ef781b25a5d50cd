#pragma once

// Exact Buchberger / Schreyer kernel shared by the public resolution API.
// Everything is templated on the coefficient field; values are immutable once
// built and safe to share across threads. The parallel mode reduces
// independent S-polynomials with OpenMP; the serial mode is the reference the
// tests compare against. Both end in the same reduced basis because the
// reduced Groebner basis of a module is unique for a fixed order.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mgstill/errors.hpp"
#include "mgstill/rational.hpp"
#include "mgstill/term_order.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgstill {

enum class ExecMode { Serial, Parallel };

/// Resource guard threaded through long-running computations: pair-queue cap
/// (MGSTILL_MAX_PAIRS) and a cooperative cancellation flag.
struct ComputeGuard {
  std::size_t max_pairs;
  const std::atomic<bool>* cancel = nullptr;

  ComputeGuard() : max_pairs(default_max_pairs()) {}

  static std::size_t default_max_pairs() {
    if (const char* s = std::getenv("MGSTILL_MAX_PAIRS")) {
      long v = std::atol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return 2000000;
  }

  void check_pairs(std::size_t n) const {
    if (n > max_pairs)
      throw resource_limit_error("pair queue exceeded MGSTILL_MAX_PAIRS (" +
                                 std::to_string(max_pairs) + ")");
  }
  void check_cancel() const {
    if (cancel && cancel->load(std::memory_order_relaxed)) throw cancelled_error();
  }
};

namespace engine {

// ---------------------------------------------------------------- fields

struct GFp {
  using Elem = long;
  long p;
  explicit GFp(long prime) : p(prime) {}
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
  Elem sub(Elem a, Elem b) const { Elem s = a - b; return s < 0 ? s + p : s; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long q = r / newr;
      t -= q * newt; std::swap(t, newt);
      r -= q * newr; std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return t < 0 ? t + p : t;
  }
  Elem from_rational(const Rational& q) const {
    long num = static_cast<long>(mpz_fdiv_ui(q.num().get_mpz_t(), p));
    long den = static_cast<long>(mpz_fdiv_ui(q.den().get_mpz_t(), p));
    if (den == 0) throw analysis_error("coefficient denominator divisible by the field characteristic");
    return mul(num, inv(den));
  }
  Rational to_rational(Elem a) const { return Rational(a); }
};

struct QQField {
  using Elem = Rational;
  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.reciprocal(); }
  Elem from_rational(const Rational& q) const { return q; }
  Rational to_rational(const Elem& a) const { return a; }
};

// ---------------------------------------------------------------- monomials

using Exps = std::vector<int>;

inline bool exps_divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps exps_sub(const Exps& a, const Exps& b) {
  Exps out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

inline Exps exps_add(const Exps& a, const Exps& b) {
  Exps out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline bool exps_coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline bool exps_is_one(const Exps& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

struct RingOrder {
  TermOrder::Kind kind;
  std::vector<long> weights;

  long wdeg(const Exps& e) const {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
    return d;
  }

  // Compares a + la against b + lb without allocating; null shift = zero.
  std::strong_ordering cmp_shift(const Exps& a, const Exps* la, const Exps& b, const Exps* lb) const {
    auto at = [&](const Exps& e, const Exps* l, std::size_t i) {
      return e[i] + (l ? (*l)[i] : 0);
    };
    const std::size_t n = a.size();
    if (kind == TermOrder::Kind::Degrevlex) {
      long da = wdeg(a) + (la ? wdeg(*la) : 0);
      long db = wdeg(b) + (lb ? wdeg(*lb) : 0);
      if (da != db) return da <=> db;
      for (std::size_t i = n; i-- > 0;) {
        int va = at(a, la, i), vb = at(b, lb, i);
        if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
      int va = at(a, la, i), vb = at(b, lb, i);
      if (va != vb) return va <=> vb;
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering cmp(const Exps& a, const Exps& b) const {
    return cmp_shift(a, nullptr, b, nullptr);
  }
};

// ------------------------------------------------------- labeled free modules

/// Free module with Schreyer labels: each basis element carries its composed
/// base-ring monomial label, its weight degree, and a unique tiebreak path.
/// The root module (rank 1, trivial label) makes the induced order coincide
/// with the plain ring order.
struct FreeModule {
  std::vector<long> degree;
  std::vector<Exps> label;
  std::vector<std::vector<int>> path;

  int rank() const { return static_cast<int>(degree.size()); }

  static FreeModule rank_one(int nvars) {
    FreeModule m;
    m.degree = {0};
    m.label = {Exps(nvars, 0)};
    m.path = {{0}};
    return m;
  }

  static FreeModule trivial(int rank, int nvars) {
    FreeModule m;
    m.degree.assign(rank, 0);
    m.label.assign(rank, Exps(nvars, 0));
    for (int i = 0; i < rank; ++i) m.path.push_back({i});
    return m;
  }
};

struct ModuleOrder {
  RingOrder ring;
  FreeModule mod;

  std::strong_ordering cmp(int ca, const Exps& ea, int cb, const Exps& eb) const {
    auto c = ring.cmp_shift(ea, &mod.label[ca], eb, &mod.label[cb]);
    if (c != std::strong_ordering::equal) return c;
    const auto& pa = mod.path[ca];
    const auto& pb = mod.path[cb];
    for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i)
      if (pa[i] != pb[i])
        return pa[i] < pb[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    if (pa.size() != pb.size())
      return pa.size() < pb.size() ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  long term_wdeg(int comp, const Exps& e) const { return ring.wdeg(e) + mod.degree[comp]; }
};

// ---------------------------------------------------------------- polynomials

template <class F>
struct Term {
  int comp;
  Exps exps;
  typename F::Elem c;
};

/// Element of a labeled free module; terms strictly descending in the order.
template <class F>
struct MPoly {
  std::vector<Term<F>> t;
  bool is_zero() const { return t.empty(); }
  const Term<F>& lead() const { return t.front(); }
};

template <class F>
MPoly<F> make_poly(const F& f, const ModuleOrder& o, std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
    return o.cmp(a.comp, a.exps, b.comp, b.exps) == std::strong_ordering::greater;
  });
  MPoly<F> out;
  for (auto& tm : terms) {
    if (!out.t.empty() && out.t.back().comp == tm.comp && out.t.back().exps == tm.exps) {
      out.t.back().c = f.add(out.t.back().c, tm.c);
      if (f.is_zero(out.t.back().c)) out.t.pop_back();
    } else if (!f.is_zero(tm.c)) {
      out.t.push_back(std::move(tm));
    }
  }
  return out;
}

template <class F>
void make_monic(const F& f, MPoly<F>& p) {
  if (p.is_zero()) return;
  auto inv = f.inv(p.lead().c);
  for (auto& tm : p.t) tm.c = f.mul(tm.c, inv);
}

/// a - c * x^m * b; both inputs sorted, result sorted (merge).
template <class F>
MPoly<F> sub_scaled(const F& f, const ModuleOrder& o, const MPoly<F>& a, const MPoly<F>& b,
                    const Exps& m, const typename F::Elem& c) {
  MPoly<F> out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  Exps shifted;
  while (i < a.t.size() || j < b.t.size()) {
    if (j < b.t.size()) shifted = exps_add(b.t[j].exps, m);
    std::strong_ordering rel = std::strong_ordering::less;
    if (i < a.t.size() && j < b.t.size())
      rel = o.cmp(a.t[i].comp, a.t[i].exps, b.t[j].comp, shifted);
    else if (i < a.t.size())
      rel = std::strong_ordering::greater;

    if (rel == std::strong_ordering::greater) {
      out.t.push_back(a.t[i++]);
    } else if (rel == std::strong_ordering::less) {
      out.t.push_back(Term<F>{b.t[j].comp, shifted, f.neg(f.mul(c, b.t[j].c))});
      ++j;
    } else {
      auto coeff = f.sub(a.t[i].c, f.mul(c, b.t[j].c));
      if (!f.is_zero(coeff)) out.t.push_back(Term<F>{a.t[i].comp, a.t[i].exps, coeff});
      ++i, ++j;
    }
  }
  return out;
}

// ---------------------------------------------------------------- division

template <class F>
struct QuotTerm {
  int basis_index;
  Exps exps;
  typename F::Elem c;
};

/// Full normal form against `basis` (elements assumed monic). Divisor search
/// is first-match in index order. Quotient terms are collected unsorted.
template <class F>
MPoly<F> normal_form(const F& f, const ModuleOrder& o, MPoly<F> work,
                     const std::vector<const MPoly<F>*>& basis,
                     std::vector<QuotTerm<F>>* quotients = nullptr) {
  MPoly<F> rem;
  while (!work.is_zero()) {
    const Term<F>& lead = work.lead();
    int found = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& g = *basis[k];
      if (g.lead().comp == lead.comp && exps_divides(g.lead().exps, lead.exps)) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      // leads strictly decrease, so rem stays sorted
      rem.t.push_back(lead);
      work.t.erase(work.t.begin());
      continue;
    }
    Exps u = exps_sub(lead.exps, basis[found]->lead().exps);
    auto c = lead.c;  // divisor monic
    if (quotients) quotients->push_back(QuotTerm<F>{found, u, c});
    work = sub_scaled(f, o, work, *basis[found], u, c);
  }
  return rem;
}

template <class F>
std::vector<const MPoly<F>*> basis_view(const std::vector<MPoly<F>>& basis, int skip = -1) {
  std::vector<const MPoly<F>*> v;
  v.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (static_cast<int>(i) != skip) v.push_back(&basis[i]);
  return v;
}

// ---------------------------------------------------------------- Buchberger

template <class F>
struct GBPair {
  int i, j;
  Exps lcm;
  int comp;
  long wdeg;
};

template <class F>
struct GBOptions {
  ExecMode mode = ExecMode::Serial;
  bool track_cofactors = false;
  ComputeGuard guard;
};

template <class F>
struct GBResult {
  std::vector<MPoly<F>> basis;      // reduced GB, monic, leads ascending
  std::vector<MPoly<F>> cofactors;  // basis[i] = sum_k cofactors[i][(k,...)] * input_k
};

namespace detail {

template <class F>
GBPair<F> make_pair(const ModuleOrder& o, const std::vector<MPoly<F>>& basis, int i, int j) {
  const auto& li = basis[i].lead();
  const auto& lj = basis[j].lead();
  GBPair<F> p{i, j, exps_lcm(li.exps, lj.exps), li.comp, 0};
  p.wdeg = o.term_wdeg(p.comp, p.lcm);
  return p;
}

// Strict chain criterion: some other basis lead divides the pair lcm and both
// sub-lcms strictly divide it. Safe for GB computation and for keeping the
// Schreyer syzygy set a Groebner basis (Noetherian induction on leads).
template <class F>
bool chain_prunable(const std::vector<MPoly<F>>& basis, const GBPair<F>& p) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
    const auto& lk = basis[k].lead();
    if (lk.comp != p.comp || !exps_divides(lk.exps, p.lcm)) continue;
    Exps lik = exps_lcm(basis[p.i].lead().exps, lk.exps);
    if (lik == p.lcm) continue;
    Exps lkj = exps_lcm(lk.exps, basis[p.j].lead().exps);
    if (lkj == p.lcm) continue;
    return true;
  }
  return false;
}

template <class F>
MPoly<F> s_poly(const F& f, const ModuleOrder& o, const std::vector<MPoly<F>>& basis,
                const GBPair<F>& p) {
  Exps ui = exps_sub(p.lcm, basis[p.i].lead().exps);
  Exps uj = exps_sub(p.lcm, basis[p.j].lead().exps);
  MPoly<F> left;
  left.t.reserve(basis[p.i].t.size());
  for (const auto& tm : basis[p.i].t)
    left.t.push_back(Term<F>{tm.comp, exps_add(tm.exps, ui), tm.c});
  return sub_scaled(f, o, left, basis[p.j], uj, f.one());
}

// Same combination applied to the cofactor vectors.
template <class F>
MPoly<F> s_poly_cof(const F& f, const ModuleOrder& cof_order, const std::vector<MPoly<F>>& cofs,
                    const std::vector<MPoly<F>>& basis, const GBPair<F>& p) {
  Exps ui = exps_sub(p.lcm, basis[p.i].lead().exps);
  Exps uj = exps_sub(p.lcm, basis[p.j].lead().exps);
  MPoly<F> left;
  left.t.reserve(cofs[p.i].t.size());
  for (const auto& tm : cofs[p.i].t)
    left.t.push_back(Term<F>{tm.comp, exps_add(tm.exps, ui), tm.c});
  left = make_poly(f, cof_order, std::move(left.t));
  return sub_scaled(f, cof_order, left, cofs[p.j], uj, f.one());
}

template <class F>
MPoly<F> apply_quotients(const F& f, const ModuleOrder& cof_order, MPoly<F> acc,
                         const std::vector<QuotTerm<F>>& quots,
                         const std::vector<MPoly<F>>& cofs,
                         const std::vector<int>& index_map) {
  for (const auto& q : quots)
    acc = sub_scaled(f, cof_order, acc, cofs[index_map[q.basis_index]], q.exps, q.c);
  return acc;
}

}  // namespace detail

/// Buchberger with normal selection (smallest lcm in the module order) and the
/// product criterion on rank-one modules. Returns the reduced Groebner basis.
/// Cofactor tracking expresses every output element over the inputs and is
/// only supported in serial mode.
template <class F>
GBResult<F> buchberger(const F& f, const ModuleOrder& o, std::vector<MPoly<F>> input,
                       const GBOptions<F>& opts) {
  if (opts.track_cofactors && opts.mode == ExecMode::Parallel)
    throw std::logic_error("cofactor tracking requires serial mode");

  const int nvars = static_cast<int>(o.ring.weights.size());
  ModuleOrder cof_order{o.ring, FreeModule::trivial(static_cast<int>(input.size()), nvars)};

  std::vector<MPoly<F>> basis;
  std::vector<MPoly<F>> cofs;
  for (std::size_t i = 0; i < input.size(); ++i) {
    MPoly<F> g = std::move(input[i]);
    if (g.is_zero()) continue;
    MPoly<F> cof;
    if (opts.track_cofactors) {
      auto inv = f.inv(g.lead().c);
      cof.t.push_back(Term<F>{static_cast<int>(i), Exps(nvars, 0), inv});
    }
    make_monic(f, g);
    basis.push_back(std::move(g));
    cofs.push_back(std::move(cof));
  }

  const bool rank_one = o.mod.rank() == 1;
  std::vector<GBPair<F>> pairs;
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      if (basis[i].lead().comp == basis[j].lead().comp)
        pairs.push_back(detail::make_pair(o, basis, i, j));
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

  auto pair_less = [&](const GBPair<F>& a, const GBPair<F>& b) {
    auto c = o.cmp(a.comp, a.lcm, b.comp, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };

  auto process_remainder = [&](MPoly<F>&& nf, MPoly<F>&& cof) {
    if (nf.is_zero()) return;
    if (opts.track_cofactors) {
      auto inv = f.inv(nf.lead().c);
      for (auto& tm : cof.t) tm.c = f.mul(tm.c, inv);
      cofs.push_back(std::move(cof));
    }
    make_monic(f, nf);
    basis.push_back(std::move(nf));
    add_pairs_for(static_cast<int>(basis.size()) - 1);
  };

  while (!pairs.empty()) {
    opts.guard.check_pairs(pairs.size());
    opts.guard.check_cancel();

    if (opts.mode == ExecMode::Serial) {
      auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
      GBPair<F> p = *it;
      pairs.erase(it);
      if (rank_one && exps_coprime(basis[p.i].lead().exps, basis[p.j].lead().exps)) continue;
      if (detail::chain_prunable(basis, p)) continue;

      std::vector<QuotTerm<F>> quots;
      MPoly<F> nf = normal_form(f, o, detail::s_poly(f, o, basis, p), basis_view(basis),
                                opts.track_cofactors ? &quots : nullptr);
      MPoly<F> cof;
      if (opts.track_cofactors) {
        std::vector<int> identity(basis.size());
        for (std::size_t k = 0; k < identity.size(); ++k) identity[k] = static_cast<int>(k);
        cof = detail::apply_quotients(f, cof_order,
                                      detail::s_poly_cof(f, cof_order, cofs, basis, p), quots,
                                      cofs, identity);
      }
      process_remainder(std::move(nf), std::move(cof));
      continue;
    }

    // Parallel mode: reduce the whole minimal-degree slice against a snapshot,
    // then insert remainders serially with re-reduction.
    long dmin = pairs.front().wdeg;
    for (const auto& p : pairs) dmin = std::min(dmin, p.wdeg);
    std::vector<GBPair<F>> batch;
    std::vector<GBPair<F>> rest;
    for (auto& p : pairs) (p.wdeg == dmin ? batch : rest).push_back(std::move(p));
    pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(), pair_less);

    std::vector<GBPair<F>> todo;
    for (auto& p : batch) {
      if (rank_one && exps_coprime(basis[p.i].lead().exps, basis[p.j].lead().exps)) continue;
      if (detail::chain_prunable(basis, p)) continue;
      todo.push_back(std::move(p));
    }

    std::vector<MPoly<F>> reduced(todo.size());
    auto snapshot = basis_view(basis);
    std::string parallel_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < static_cast<long>(todo.size()); ++idx) {
      try {
        reduced[idx] = normal_form(f, o, detail::s_poly(f, o, basis, todo[idx]), snapshot);
      } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
        parallel_error = e.what();
      }
    }
    if (!parallel_error.empty()) throw std::runtime_error(parallel_error);

    for (auto& nf : reduced) {
      if (nf.is_zero()) continue;
      nf = normal_form(f, o, std::move(nf), basis_view(basis));
      process_remainder(std::move(nf), MPoly<F>{});
    }
  }

  // Interreduce: minimal leads, then tail-reduce. Unique for a fixed order.
  std::vector<int> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return o.cmp(basis[a].lead().comp, basis[a].lead().exps, basis[b].lead().comp,
                 basis[b].lead().exps) == std::strong_ordering::less;
  });
  std::vector<MPoly<F>> kept;
  std::vector<MPoly<F>> kept_cofs;
  for (int id : idx) {
    bool redundant = false;
    for (const auto& g : kept)
      if (g.lead().comp == basis[id].lead().comp &&
          exps_divides(g.lead().exps, basis[id].lead().exps)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(std::move(basis[id]));
      if (opts.track_cofactors) kept_cofs.push_back(std::move(cofs[id]));
    }
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<QuotTerm<F>> quots;
    auto others = basis_view(kept, static_cast<int>(i));
    MPoly<F> nf = normal_form(f, o, std::move(kept[i]), others,
                              opts.track_cofactors ? &quots : nullptr);
    if (opts.track_cofactors) {
      std::vector<int> map;
      for (std::size_t k = 0; k < kept.size(); ++k)
        if (k != i) map.push_back(static_cast<int>(k));
      kept_cofs[i] = detail::apply_quotients(f, cof_order, std::move(kept_cofs[i]), quots,
                                             kept_cofs, map);
    }
    kept[i] = std::move(nf);
  }

  GBResult<F> out;
  out.basis = std::move(kept);
  out.cofactors = std::move(kept_cofs);
  return out;
}

// ------------------------------------------------------------ Schreyer level

template <class F>
struct SchreyerResult {
  std::vector<MPoly<F>> syzygies;  // in the free module on the input basis
  FreeModule module;               // that free module, with induced labels
};

/// Syzygies of a Groebner basis from its S-pair reductions. All
/// same-component pairs are taken except those removed by the strict chain
/// criterion, so the result is again a Groebner basis for the induced order.
template <class F>
SchreyerResult<F> schreyer_syzygies(const F& f, const ModuleOrder& o,
                                    const std::vector<MPoly<F>>& gb, ExecMode mode,
                                    const ComputeGuard& guard) {
  SchreyerResult<F> out;
  const int n = static_cast<int>(gb.size());
  for (int i = 0; i < n; ++i) {
    const auto& lead = gb[i].lead();
    out.module.degree.push_back(o.term_wdeg(lead.comp, lead.exps));
    out.module.label.push_back(exps_add(lead.exps, o.mod.label[lead.comp]));
    auto path = o.mod.path[lead.comp];
    path.push_back(i);
    out.module.path.push_back(std::move(path));
  }
  ModuleOrder induced{o.ring, out.module};

  std::vector<GBPair<F>> pairs;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (gb[i].lead().comp == gb[j].lead().comp) {
        auto p = detail::make_pair(o, gb, i, j);
        if (!detail::chain_prunable(gb, p)) pairs.push_back(std::move(p));
      }
  guard.check_pairs(pairs.size());
  guard.check_cancel();

  auto view = basis_view(gb);
  out.syzygies.resize(pairs.size());
  std::string parallel_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (mode == ExecMode::Parallel)
#endif
  for (long idx = 0; idx < static_cast<long>(pairs.size()); ++idx) {
    try {
      const auto& p = pairs[idx];
      std::vector<QuotTerm<F>> quots;
      MPoly<F> rem = normal_form(f, o, detail::s_poly(f, o, gb, p), view, &quots);
      if (!rem.is_zero()) throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
      std::vector<Term<F>> terms;
      terms.reserve(quots.size() + 2);
      terms.push_back(Term<F>{p.i, exps_sub(p.lcm, gb[p.i].lead().exps), f.one()});
      terms.push_back(Term<F>{p.j, exps_sub(p.lcm, gb[p.j].lead().exps), f.neg(f.one())});
      for (auto& q : quots) terms.push_back(Term<F>{q.basis_index, std::move(q.exps), f.neg(q.c)});
      out.syzygies[idx] = make_poly(f, induced, std::move(terms));
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      parallel_error = e.what();
    }
  }
  if (!parallel_error.empty()) throw std::runtime_error(parallel_error);
  return out;
}

// ---------------------------------------------------------------- complexes

/// Ring polynomial helpers: a rank-one module with the trivial label.
template <class F>
using RPoly = MPoly<F>;

template <class F>
RPoly<F> rpoly_mul(const F& f, const ModuleOrder& ring1, const RPoly<F>& a, const RPoly<F>& b) {
  std::vector<Term<F>> terms;
  terms.reserve(a.t.size() * b.t.size());
  for (const auto& ta : a.t)
    for (const auto& tb : b.t)
      terms.push_back(Term<F>{0, exps_add(ta.exps, tb.exps), f.mul(ta.c, tb.c)});
  return make_poly(f, ring1, std::move(terms));
}

template <class F>
RPoly<F> rpoly_add(const F& f, const ModuleOrder& ring1, const RPoly<F>& a, const RPoly<F>& b) {
  return sub_scaled(f, ring1, a, b, Exps(ring1.ring.weights.size(), 0), f.neg(f.one()));
}

template <class F>
struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<MPoly<F>> e;
  PolyMat() = default;
  PolyMat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
  MPoly<F>& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const MPoly<F>& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

template <class F>
struct Complex {
  F field;
  RingOrder ring_order;
  std::vector<std::vector<long>> degrees;  // weight degrees of F_0, F_1, ...
  std::vector<PolyMat<F>> d;               // d[l] : F_{l+1} -> F_l

  explicit Complex(F f) : field(std::move(f)) {}

  int levels() const { return static_cast<int>(degrees.size()); }
  long rank(int l) const { return static_cast<long>(degrees[l].size()); }
  /// Largest homological index with a nonzero module.
  int length() const {
    for (int l = levels() - 1; l >= 0; --l)
      if (rank(l) > 0) return l;
    return 0;
  }
  std::vector<long> ranks() const {
    std::vector<long> r;
    for (int l = 0; l < levels(); ++l) r.push_back(rank(l));
    return r;
  }

  ModuleOrder ring1() const {
    return ModuleOrder{ring_order, FreeModule::rank_one(static_cast<int>(ring_order.weights.size()))};
  }

  /// d_l . d_{l+1} == 0 for all consecutive differentials.
  bool verify(ExecMode mode = ExecMode::Serial) const {
    ModuleOrder r1 = ring1();
    for (std::size_t l = 0; l + 1 < d.size(); ++l) {
      const PolyMat<F>& a = d[l];
      const PolyMat<F>& b = d[l + 1];
      bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (mode == ExecMode::Parallel)
#endif
      for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
          MPoly<F> acc;
          for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
            acc = rpoly_add(field, r1, acc, rpoly_mul(field, r1, a.at(i, k), b.at(k, j)));
          }
          if (!acc.is_zero()) ok = false;
        }
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace engine
}  // namespace mgstill
