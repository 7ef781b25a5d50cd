#include "mgstill/degree_vector.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgstill {

bool DegreeVector::is_zero() const {
  for (const auto& q : e_)
    if (!q.is_zero()) return false;
  return true;
}

bool DegreeVector::all_integer() const {
  for (const auto& q : e_)
    if (!q.is_integer()) return false;
  return true;
}

std::vector<BigInt> DegreeVector::to_integers() const {
  if (!all_integer()) throw std::invalid_argument("degree vector has non-integer entries");
  std::vector<BigInt> out;
  out.reserve(e_.size());
  for (const auto& q : e_) out.push_back(q.num());
  return out;
}

DegreeVector DegreeVector::operator+(const DegreeVector& o) const {
  require_same_dim(*this, o);
  std::vector<Rational> out(e_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.e_[i];
  return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::operator-(const DegreeVector& o) const {
  require_same_dim(*this, o);
  std::vector<Rational> out(e_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.e_[i];
  return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::operator-() const {
  std::vector<Rational> out;
  out.reserve(e_.size());
  for (const auto& q : e_) out.push_back(-q);
  return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::scaled(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(e_.size());
  for (const auto& q : e_) out.push_back(q * c);
  return DegreeVector(std::move(out));
}

Rational DegreeVector::dot(const DegreeVector& o) const {
  require_same_dim(*this, o);
  Rational acc;
  for (std::size_t i = 0; i < e_.size(); ++i) acc += e_[i] * o.e_[i];
  return acc;
}

std::strong_ordering DegreeVector::operator<=>(const DegreeVector& o) const {
  if (auto c = e_.size() <=> o.e_.size(); c != 0) return c;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string DegreeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

DegreeVector DegreeVector::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("degree tuple must be parenthesized: '" + text + "'");
  std::string body = text.substr(1, text.size() - 2);
  std::vector<Rational> entries;
  std::string cur;
  auto flush = [&] {
    // tolerate surrounding spaces inside tuples
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in degree tuple");
    entries.push_back(Rational::parse(cur.substr(a, b - a + 1)));
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return DegreeVector(std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const DegreeVector& v) { return os << v.str(); }

void require_same_dim(const DegreeVector& a, const DegreeVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

void require_same_dim(const std::vector<DegreeVector>& vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) require_same_dim(vs[0], vs[i]);
}

}  // namespace mgstill
