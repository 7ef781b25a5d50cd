#include "mgstill/rational.hpp"

#include <cctype>
#include <ostream>

namespace mgstill {

Rational Rational::parse(const std::string& text) {
  // Strict shape check first; mpq_class accepts more than the grammar allows.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) throw std::invalid_argument("malformed rational: '" + text + "'");
  i = after_num;
  if (i != text.size()) {
    if (text[i] != '/') throw std::invalid_argument("malformed rational: '" + text + "'");
    std::size_t after_den = digits(i + 1);
    if (after_den == i + 1 || after_den != text.size())
      throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: '" + text + "'");
  if (v.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return Rational(v.get_num(), v.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace mgstill
