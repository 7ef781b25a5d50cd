#pragma once

// Free resolutions over the engine: a reduced Groebner basis starts the
// complex, then Schreyer syzygy levels with induced orders until the syzygies
// run out. Minimalization cancels unit entries from homological degree 1
// upward; over a positive weight grading that never reintroduces units below.

#include <map>
#include <string>

#include "mgstill/engine.hpp"

namespace mgstill {

/// Graded ranks of a minimal free resolution: (homological index, weight
/// degree) -> rank.
struct BettiTable {
  std::map<std::pair<int, long>, long> counts;

  long total(int i) const {
    long t = 0;
    for (const auto& [key, v] : counts)
      if (key.first == i) t += v;
    return t;
  }
  int length() const {
    int len = 0;
    for (const auto& [key, v] : counts)
      if (v > 0) len = std::max(len, key.first);
    return len;
  }
  std::string str() const;
};

namespace engine {

template <class F>
struct ResolveOutput {
  Complex<F> complex;
  std::vector<MPoly<F>> groebner;  // the level-1 basis, frame order
};

/// Non-minimal free resolution of S/I for a Groebner-basis start.
/// Generators must be nonzero, homogeneous under the order weights.
template <class F>
ResolveOutput<F> resolve(const F& f, const RingOrder& ring_order,
                         std::vector<MPoly<F>> gens, ExecMode mode, const ComputeGuard& guard) {
  const int nvars = static_cast<int>(ring_order.weights.size());
  ModuleOrder o{ring_order, FreeModule::rank_one(nvars)};

  ResolveOutput<F> out{Complex<F>(f), {}};
  Complex<F>& cx = out.complex;
  cx.ring_order = ring_order;
  cx.degrees.push_back({0});  // F_0 = S

  GBOptions<F> gb_opts;
  gb_opts.mode = mode;
  gb_opts.guard = guard;
  auto gb = buchberger(f, o, std::move(gens), gb_opts).basis;
  if (gb.empty()) return out;  // zero ideal: F_0 alone
  for (const auto& g : gb)
    if (exps_is_one(g.lead().exps))
      throw std::invalid_argument("unit ideal has no minimal free resolution of S/I");

  // Frame sort: leads descending in the current order.
  auto frame_sort = [&](std::vector<MPoly<F>>& v, const ModuleOrder& ord) {
    std::sort(v.begin(), v.end(), [&](const MPoly<F>& a, const MPoly<F>& b) {
      return ord.cmp(a.lead().comp, a.lead().exps, b.lead().comp, b.lead().exps) ==
             std::strong_ordering::greater;
    });
  };
  frame_sort(gb, o);
  out.groebner = gb;

  const int max_levels = nvars + static_cast<int>(gb.size()) + 2;
  std::vector<MPoly<F>> basis = std::move(gb);
  for (int level = 1; level <= max_levels; ++level) {
    guard.check_cancel();
    // record F_level and d_level from the current basis in its ambient module
    std::vector<long> degs;
    for (const auto& g : basis) degs.push_back(o.term_wdeg(g.lead().comp, g.lead().exps));
    cx.degrees.push_back(degs);

    PolyMat<F> mat(static_cast<int>(cx.degrees[level - 1].size()), static_cast<int>(basis.size()));
    for (int c = 0; c < mat.cols; ++c)
      for (const auto& tm : basis[c].t) mat.at(tm.comp, c).t.push_back(Term<F>{0, tm.exps, tm.c});
    cx.d.push_back(std::move(mat));

    SchreyerResult<F> next = schreyer_syzygies(f, o, basis, mode, guard);
    if (next.syzygies.empty()) break;
    if (level == max_levels)
      throw std::logic_error("resolution did not terminate within the level cap");
    o = ModuleOrder{ring_order, std::move(next.module)};
    basis = std::move(next.syzygies);
    frame_sort(basis, o);
  }
  return out;
}

template <class F>
bool entry_is_unit(const MPoly<F>& p) {
  return p.t.size() == 1 && exps_is_one(p.t.front().exps);
}

/// Unit-entry cancellation, processed from homological degree 1 upward.
/// Exactness is preserved; rank accounting (Euler characteristic) is checked.
template <class F>
std::pair<Complex<F>, BettiTable> minimalize(const Complex<F>& input) {
  Complex<F> cx = input;
  const F& f = cx.field;
  ModuleOrder r1 = cx.ring1();
  const Exps zero_exps(cx.ring_order.weights.size(), 0);

  long euler_before = 0;
  for (int l = 0; l < cx.levels(); ++l) euler_before += (l % 2 ? -1 : 1) * cx.rank(l);

  auto sub_scaled_entry = [&](MPoly<F>& target, const MPoly<F>& src, const MPoly<F>& q) {
    // target -= q * src
    if (src.is_zero() || q.is_zero()) return;
    target = rpoly_add(f, r1, target, [&] {
      MPoly<F> prod = rpoly_mul(f, r1, q, src);
      for (auto& tm : prod.t) tm.c = f.neg(tm.c);
      return prod;
    }());
  };

  for (std::size_t l = 0; l < cx.d.size(); ++l) {
    for (;;) {
      PolyMat<F>& m = cx.d[l];
      int pr = -1, pc = -1;
      for (int r = 0; r < m.rows && pr < 0; ++r)
        for (int c = 0; c < m.cols; ++c)
          if (entry_is_unit(m.at(r, c))) { pr = r; pc = c; break; }
      if (pr < 0) break;

      auto uinv = f.inv(m.at(pr, pc).lead().c);
      // clear row pr with column operations; mirror as row operations on d[l+1]
      for (int j = 0; j < m.cols; ++j) {
        if (j == pc || m.at(pr, j).is_zero()) continue;
        MPoly<F> q = m.at(pr, j);
        for (auto& tm : q.t) tm.c = f.mul(tm.c, uinv);
        for (int i = 0; i < m.rows; ++i) {
          MPoly<F> delta = rpoly_mul(f, r1, q, m.at(i, pc));
          for (auto& tm : delta.t) tm.c = f.neg(tm.c);
          m.at(i, j) = rpoly_add(f, r1, m.at(i, j), delta);
        }
        if (l + 1 < cx.d.size()) {
          PolyMat<F>& nxt = cx.d[l + 1];
          for (int c2 = 0; c2 < nxt.cols; ++c2)
            sub_scaled_entry(nxt.at(pc, c2), nxt.at(j, c2), [&] {
              MPoly<F> nq = q;
              for (auto& tm : nq.t) tm.c = f.neg(tm.c);
              return nq;
            }());
        }
      }
      // clear column pc with row operations; mirror as column operations on d[l-1]
      for (int i = 0; i < m.rows; ++i) {
        if (i == pr || m.at(i, pc).is_zero()) continue;
        MPoly<F> w = m.at(i, pc);
        for (auto& tm : w.t) tm.c = f.mul(tm.c, uinv);
        m.at(i, pc) = MPoly<F>{};
        if (l >= 1) {
          PolyMat<F>& prev = cx.d[l - 1];
          for (int r2 = 0; r2 < prev.rows; ++r2) {
            MPoly<F> delta = rpoly_mul(f, r1, w, prev.at(r2, i));
            prev.at(r2, pr) = rpoly_add(f, r1, prev.at(r2, pr), delta);
          }
        }
      }

      // d . d = 0 forces row pc of d[l+1] and column pr of d[l-1] to be zero
      // now; anything else means a mirror update went wrong.
      if (l + 1 < cx.d.size())
        for (int c2 = 0; c2 < cx.d[l + 1].cols; ++c2)
          if (!cx.d[l + 1].at(pc, c2).is_zero())
            throw std::logic_error("cancellation left a nonzero row in the next differential");
      if (l >= 1)
        for (int r2 = 0; r2 < cx.d[l - 1].rows; ++r2)
          if (!cx.d[l - 1].at(r2, pr).is_zero())
            throw std::logic_error("cancellation left a nonzero column in the previous differential");

      // drop row pr and column pc of d[l], row pc of d[l+1], column pr of d[l-1]
      PolyMat<F> shrunk(m.rows - 1, m.cols - 1);
      for (int i = 0, si = 0; i < m.rows; ++i) {
        if (i == pr) continue;
        for (int j = 0, sj = 0; j < m.cols; ++j) {
          if (j == pc) continue;
          shrunk.at(si, sj++) = std::move(m.at(i, j));
        }
        ++si;
      }
      cx.d[l] = std::move(shrunk);
      if (l + 1 < cx.d.size()) {
        PolyMat<F>& nxt = cx.d[l + 1];
        PolyMat<F> s2(nxt.rows - 1, nxt.cols);
        for (int i = 0, si = 0; i < nxt.rows; ++i) {
          if (i == pc) continue;
          for (int j = 0; j < nxt.cols; ++j) s2.at(si, j) = std::move(nxt.at(i, j));
          ++si;
        }
        cx.d[l + 1] = std::move(s2);
      }
      if (l >= 1) {
        PolyMat<F>& prev = cx.d[l - 1];
        PolyMat<F> s0(prev.rows, prev.cols - 1);
        for (int i = 0; i < prev.rows; ++i)
          for (int j = 0, sj = 0; j < prev.cols; ++j) {
            if (j == pr) continue;
            s0.at(i, sj++) = std::move(prev.at(i, j));
          }
        cx.d[l - 1] = std::move(s0);
      }
      cx.degrees[l].erase(cx.degrees[l].begin() + pr);
      cx.degrees[l + 1].erase(cx.degrees[l + 1].begin() + pc);
    }
  }

  long euler_after = 0;
  for (int l = 0; l < cx.levels(); ++l) euler_after += (l % 2 ? -1 : 1) * cx.rank(l);
  if (euler_before != euler_after)
    throw std::logic_error("minimalization changed the Euler characteristic");

  // drop trailing zero modules
  while (cx.levels() > 1 && cx.degrees.back().empty()) {
    cx.degrees.pop_back();
    cx.d.pop_back();
  }

  BettiTable betti;
  for (int l = 0; l < cx.levels(); ++l)
    for (long deg : cx.degrees[l]) ++betti.counts[{l, deg}];
  return {std::move(cx), std::move(betti)};
}

}  // namespace engine
}  // namespace mgstill
