#pragma once

#include <cstdint>
#include <string>

namespace semisplit {

/// Coefficient ring: the integers (modulus 0) or Z/m.
struct CoeffRing {
  std::int64_t modulus = 0;

  static CoeffRing integers() { return {}; }
  static CoeffRing mod(std::int64_t m);
  /// Accepts "int" or "mod:m".
  static CoeffRing parse(const std::string& text);

  bool is_integers() const { return modulus == 0; }
  std::int64_t normalize(std::int64_t v) const;
  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::string name() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;
};

}  // namespace semisplit
