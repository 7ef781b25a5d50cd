#pragma once

#include <stdexcept>
#include <string>

namespace mgstill {

/// Coefficient field descriptor: QQ or GF(p) for a prime p.
struct FieldDesc {
  enum class Kind { GF, QQ };
  Kind kind = Kind::GF;
  long p = 32003;

  static FieldDesc gf(long prime);
  static FieldDesc qq() { return FieldDesc{Kind::QQ, 0}; }

  bool operator==(const FieldDesc& o) const = default;
  std::string str() const {
    return kind == Kind::QQ ? "QQ" : "GF(" + std::to_string(p) + ")";
  }
};

}  // namespace mgstill
