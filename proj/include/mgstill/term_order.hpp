#pragma once

#include <stdexcept>
#include <vector>

namespace mgstill {

/// Monomial order data: degrevlex (graded by the weight vector, reverse-lex
/// tiebreak) or lex. Weights are positive, one per variable.
struct TermOrder {
  enum class Kind { Degrevlex, Lex };
  Kind kind = Kind::Degrevlex;
  std::vector<long> weights;

  static TermOrder degrevlex(std::vector<long> weights) {
    return TermOrder{Kind::Degrevlex, std::move(weights)};
  }
  static TermOrder lex(int nvars) {
    return TermOrder{Kind::Lex, std::vector<long>(nvars, 1)};
  }

  void validate(int nvars) const {
    if (static_cast<int>(weights.size()) != nvars)
      throw std::invalid_argument("term order needs one weight per variable");
    for (long w : weights)
      if (w <= 0) throw std::invalid_argument("term order weights must be positive");
  }
};

}  // namespace mgstill
