#include "mgstill/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mgstill {

Exponents exponents_mul(const Exponents& a, const Exponents& b) {
  Exponents out = a;
  for (const auto& [v, e] : b) {
    int& slot = out[v];
    slot += e;
    if (slot == 0) out.erase(v);
  }
  return out;
}

long exponents_total_degree(const Exponents& e) {
  long d = 0;
  for (const auto& [v, k] : e) d += k;
  return d;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial f;
  if (!c.is_zero()) f.terms_[Exponents{}] = c;
  return f;
}

Polynomial Polynomial::variable(int index) {
  if (index < 0) throw std::invalid_argument("negative variable index");
  Polynomial f;
  f.terms_[Exponents{{index, 1}}] = Rational(1);
  return f;
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  for (const auto& [v, k] : e)
    if (v < 0 || k <= 0) throw std::invalid_argument("bad exponent entry");
  Polynomial f;
  if (!c.is_zero()) f.terms_[std::move(e)] = c;
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e = exponents_mul(ea, eb);
      Rational c = ca * cb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        if (!c.is_zero()) out.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  Polynomial out = Polynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

int Polynomial::max_variable() const {
  int mv = -1;
  for (const auto& [e, c] : terms_)
    if (!e.empty()) mv = std::max(mv, e.rbegin()->first);
  return mv;
}

namespace {

// degree desc, then bigger exponent on the earliest differing variable first
bool print_before(const Exponents& a, const Exponents& b) {
  long da = exponents_total_degree(a), db = exponents_total_degree(b);
  if (da != db) return da > db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia, ++ib;
  }
  return ib == b.end() && ia != a.end();
}

}  // namespace

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Exponents, Rational>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](auto* x, auto* y) { return print_before(x->first, y->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [e, c] = *t;
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) { os << '-'; coeff = -coeff; }
      first = false;
    } else if (coeff.sign() < 0) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    bool need_coeff = !(coeff == Rational(1)) || e.empty();
    if (need_coeff) os << coeff;
    bool need_star = need_coeff;
    for (const auto& [v, k] : e) {
      if (v >= static_cast<int>(names.size())) throw std::invalid_argument("variable index out of range");
      if (need_star) os << '*';
      os << names[v];
      if (k > 1) os << '^' << k;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace mgstill
