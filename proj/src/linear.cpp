#include "mgstill/linear.hpp"

#include <stdexcept>

namespace mgstill {

namespace {

// Phase-1 simplex tableau for the system g_i . c >= 1, c free.
// Columns: c+ (k), c- (k), surplus s (m), artificial a (m); minimize sum a_i.
// Bland's rule on entering and leaving variables guarantees termination.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const std::vector<DegreeVector>& gens, int k)
      : m_(static_cast<int>(gens.size())), k_(k), ncols_(2 * k + 2 * m_),
        t_(m_, std::vector<Rational>(ncols_ + 1)), z_(ncols_ + 1), basis_(m_) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < k_; ++j) {
        t_[i][j] = gens[i][j];
        t_[i][k_ + j] = -gens[i][j];
      }
      t_[i][2 * k_ + i] = Rational(-1);
      t_[i][2 * k_ + m_ + i] = Rational(1);
      t_[i][ncols_] = Rational(1);
      basis_[i] = 2 * k_ + m_ + i;
    }
    // reduced costs with the all-artificial basis (cost 1 each)
    for (int j = 0; j <= ncols_; ++j) {
      Rational colsum;
      for (int i = 0; i < m_; ++i) colsum += t_[i][j];
      z_[j] = cost(j) - colsum;
    }
  }

  void solve() {
    for (;;) {
      int e = -1;
      for (int j = 0; j < ncols_; ++j)
        if (z_[j].sign() < 0) { e = j; break; }
      if (e < 0) return;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][e].sign() <= 0) continue;
        Rational ratio = t_[i][ncols_] / t_[i][e];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("phase-1 LP unbounded");
      pivot(leave, e);
    }
  }

  Rational objective() const {
    Rational val;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= 2 * k_ + m_) val += t_[i][ncols_];
    return val;
  }

  std::vector<Rational> primal_c() const {
    std::vector<Rational> c(k_);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (b < k_)
        c[b] += t_[i][ncols_];
      else if (b < 2 * k_)
        c[b - k_] -= t_[i][ncols_];
    }
    return c;
  }

  // lambda_i = cost(a_i) - reduced cost of a_i at optimum
  std::vector<Rational> dual_lambda() const {
    std::vector<Rational> lam(m_);
    for (int i = 0; i < m_; ++i) lam[i] = Rational(1) - z_[2 * k_ + m_ + i];
    return lam;
  }

 private:
  Rational cost(int j) const { return j >= 2 * k_ + m_ && j < ncols_ ? Rational(1) : Rational(0); }

  void pivot(int r, int e) {
    Rational inv = t_[r][e].reciprocal();
    for (auto& x : t_[r]) x *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || t_[i][e].is_zero()) continue;
      Rational f = t_[i][e];
      for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    if (!z_[e].is_zero()) {
      Rational f = z_[e];
      for (int j = 0; j <= ncols_; ++j) z_[j] -= f * t_[r][j];
    }
    basis_[r] = e;
  }

  int m_, k_, ncols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> z_;
  std::vector<int> basis_;
};

}  // namespace

GordanResult positive_functional_or_certificate(const std::vector<DegreeVector>& gens) {
  GordanResult out;
  if (gens.empty()) {
    out.witness = DegreeVector();
    return out;
  }
  require_same_dim(gens);
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  const int k = gens[0].dim();

  PhaseOneSimplex lp(gens, k);
  lp.solve();

  if (lp.objective().is_zero()) {
    DegreeVector c{lp.primal_c()};
    for (const auto& g : gens)
      if (c.dot(g) < Rational(1)) throw std::logic_error("simplex witness failed verification");
    out.witness = std::move(c);
    return out;
  }

  std::vector<Rational> lam = lp.dual_lambda();
  BigInt scale = 1;
  for (const auto& q : lam) {
    if (q.sign() < 0) throw std::logic_error("negative dual multiplier");
    BigInt l;
    mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), q.den().get_mpz_t());
    scale = l;
  }
  std::vector<BigInt> cert(lam.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    cert[i] = (lam[i] * Rational(scale)).num();
    BigInt acc;
    mpz_gcd(acc.get_mpz_t(), g.get_mpz_t(), cert[i].get_mpz_t());
    g = acc;
  }
  if (g == 0) throw std::logic_error("simplex produced an empty certificate");
  for (auto& x : cert) x /= g;

  DegreeVector sum = DegreeVector::zero(k);
  for (std::size_t i = 0; i < cert.size(); ++i) sum = sum + gens[i].scaled(Rational(cert[i]));
  if (!sum.is_zero()) throw std::logic_error("simplex certificate failed verification");
  out.certificate = std::move(cert);
  return out;
}

namespace {

void enumerate(const std::vector<DegreeVector>& gens, const DegreeVector& target, std::size_t i,
               long budget, DegreeVector& acc, std::vector<long>& x,
               std::vector<std::vector<long>>& out) {
  if (i == gens.size()) {
    if (acc == target) out.push_back(x);
    return;
  }
  DegreeVector saved = acc;
  for (long t = 0; t <= budget; ++t) {
    x[i] = t;
    enumerate(gens, target, i + 1, budget - t, acc, x, out);
    acc = acc + gens[i];
  }
  x[i] = 0;
  acc = saved;
}

}  // namespace

std::vector<std::vector<long>> bounded_nonneg_solutions(const std::vector<DegreeVector>& gens,
                                                        const DegreeVector& target,
                                                        long length_bound) {
  if (length_bound < 0) throw std::invalid_argument("negative length bound");
  if (!gens.empty()) {
    require_same_dim(gens);
    require_same_dim(gens[0], target);
  }
  std::vector<std::vector<long>> out;
  std::vector<long> x(gens.size());
  DegreeVector acc = DegreeVector::zero(target.dim());
  enumerate(gens, target, 0, length_bound, acc, x, out);
  return out;
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("rhs size mismatch");
  QMatrix m(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int p = -1;
    for (int i = row; i < a.rows; ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j <= a.cols; ++j) std::swap(m.at(row, j), m.at(p, j));
    Rational inv = m.at(row, col).reciprocal();
    for (int j = 0; j <= a.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j <= a.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < a.rows; ++i)
    if (!m.at(i, a.cols).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols);
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = m.at(i, a.cols);
  return x;
}

}  // namespace mgstill
