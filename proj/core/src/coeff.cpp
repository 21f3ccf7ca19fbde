#include "semisplit/coeff.hpp"

#include "semisplit/error.hpp"

namespace semisplit {

CoeffRing CoeffRing::mod(std::int64_t m) {
  if (m < 2) throw ParseError("modulus must be at least 2, got " + std::to_string(m));
  if (m > (std::int64_t{1} << 31)) throw ParseError("modulus too large");
  return CoeffRing{m};
}

CoeffRing CoeffRing::parse(const std::string& text) {
  if (text == "int" || text == "Z") return integers();
  if (text.rfind("mod:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long long m = std::stoll(text.substr(4), &used);
      if (used + 4 != text.size()) throw ParseError("bad modulus in '" + text + "'");
      return mod(m);
    } catch (const std::logic_error&) {
      throw ParseError("bad modulus in '" + text + "'");
    }
  }
  throw ParseError("coefficient ring must be 'int' or 'mod:m', got '" + text + "'");
}

std::int64_t CoeffRing::normalize(std::int64_t v) const {
  if (modulus == 0) return v;
  v %= modulus;
  return v < 0 ? v + modulus : v;
}

std::int64_t CoeffRing::add(std::int64_t a, std::int64_t b) const {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient addition");
  return normalize(r);
}

std::int64_t CoeffRing::sub(std::int64_t a, std::int64_t b) const {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient subtraction");
  return normalize(r);
}

std::int64_t CoeffRing::mul(std::int64_t a, std::int64_t b) const {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("coefficient product");
  return normalize(r);
}

std::int64_t CoeffRing::neg(std::int64_t a) const { return sub(0, a); }

std::string CoeffRing::name() const {
  return modulus == 0 ? "int" : "mod:" + std::to_string(modulus);
}

}  // namespace semisplit
