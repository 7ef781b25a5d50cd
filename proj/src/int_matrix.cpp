#include "mgstill/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mgstill {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row(int i, int j, const BigInt& c) {
  for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const BigInt& c) {
  for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix m(*this);
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

// Absolute value comparison without allocating.
bool abs_less(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  const int r = input.rows(), c = input.cols();
  SnfResult res{IntMatrix::identity(r), input, IntMatrix::identity(c)};
  IntMatrix& a = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  const int steps = std::min(r, c);

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j) {
          if (a.at(i, j) == 0) continue;
          if (pi < 0 || abs_less(a.at(i, j), a.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) { t = steps; break; }  // trailing block is zero — done
      if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
      if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a.at(i, t) != 0) clean = false;  // remainder left, pivot will shrink
      }
      for (int j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: pivot must divide the trailing block.
      bool fixed = false;
      for (int i = t + 1; i < r && !fixed; ++i)
        for (int j = t + 1; j < c && !fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= steps) break;
  }

  for (int t = 0; t < steps; ++t) {
    if (a.at(t, t) < 0) { a.negate_col(t); v.negate_col(t); }
    if (a.at(t, t) != 0) {
      ++res.rank;
      res.invariants.push_back(a.at(t, t));
    }
  }
  return res;
}

}  // namespace mgstill
