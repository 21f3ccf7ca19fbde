#include <algorithm>
#include <cstdlib>

#include "semisplit/error.hpp"
#include "semisplit/vcclass.hpp"

namespace semisplit::psl2 {

namespace {

constexpr std::uint8_t kA = 1, kB = 2, kBB = 3;

bool is_b(std::uint8_t s) { return s == kB || s == kBB; }
std::uint8_t inv_syllable(std::uint8_t s) { return s == kA ? kA : (s == kB ? kBB : kB); }

Word rotate(const Word& w, std::size_t k) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Word power_word(const Word& w, std::int64_t k) {
  Word base = k >= 0 ? w : inverse(w);
  Word out;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(out);
}

}  // namespace

Matrix generator_a() { return {0, -1, 1, 0}; }
Matrix generator_b() { return {0, -1, 1, -1}; }

Matrix multiply(const Matrix& x, const Matrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

bool same_element(const Matrix& x, const Matrix& y) {
  return x == y || x == Matrix{-y[0], -y[1], -y[2], -y[3]};
}

std::int64_t trace(const Matrix& m) { return m[0] + m[3]; }

Word reduce(const Word& w) {
  Word st;
  for (std::uint8_t s : w) {
    if (s == 0) continue;
    if (!st.empty() && (st.back() == kA) == (s == kA)) {
      if (s == kA) {
        st.pop_back();
      } else {
        int e = ((st.back() == kB ? 1 : 2) + (s == kB ? 1 : 2)) % 3;
        st.pop_back();
        if (e != 0) st.push_back(e == 1 ? kB : kBB);
      }
    } else {
      st.push_back(s);
    }
  }
  return st;
}

Word concat(const Word& x, const Word& y) {
  Word r = x;
  r.insert(r.end(), y.begin(), y.end());
  return reduce(r);
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inv_syllable(*it));
  return r;
}

Word parse(const std::string& s) {
  Word w;
  for (char c : s) {
    switch (c) {
      case 'a': w.push_back(kA); break;
      case 'b': w.push_back(kB); break;
      case 'B': w.push_back(kBB); break;
      case '1':
      case ' ': break;
      default: throw ParseError(std::string("PSL2 word: unexpected '") + c + "' (use a, b, B)");
    }
  }
  return reduce(w);
}

std::string print(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::uint8_t x : w) s += x == kA ? 'a' : (x == kB ? 'b' : 'B');
  return s;
}

Matrix eval(const Word& w) {
  Matrix m{1, 0, 0, 1};
  const Matrix a = generator_a(), b = generator_b(), bb = multiply(b, b);
  for (std::uint8_t s : w) m = multiply(m, s == kA ? a : (s == kB ? b : bb));
  return m;
}

Word normal_form(const Matrix& m0) {
  if (m0[0] * m0[3] - m0[1] * m0[2] != 1) throw NonUnimodular("PSL2 matrix must have determinant 1");
  // T = [[1, 1], [0, 1]] = b^2 a and S = a; peel m = T^k S ... until the lower-left entry vanishes.
  const Word T = {kBB, kA};
  Matrix m = m0;
  Word out;
  while (m[2] != 0) {
    if (std::llabs(m[0]) < std::llabs(m[2])) {
      // m = a (a^-1 m), a^-1 m = -a m = [[r, s], [-p, -q]]
      out.push_back(kA);
      m = {m[2], m[3], -m[0], -m[1]};
      continue;
    }
    std::int64_t k = m[0] / m[2];
    out = concat(out, power_word(T, k));
    m = {m[0] - k * m[2], m[1] - k * m[3], m[2], m[3]};
  }
  // m = +-[[1, q], [0, 1]] up to sign.
  std::int64_t q = m[0] == 1 ? m[1] : -m[1];
  out = concat(out, power_word(T, q));
  return reduce(out);
}

std::string to_string(Type t) {
  switch (t) {
    case Type::Identity: return "Identity";
    case Type::Elliptic: return "Elliptic";
    case Type::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

std::string to_string(MaxVC m) {
  switch (m) {
    case MaxVC::None: return "None";
    case MaxVC::Cyclic: return "Cyclic";
    case MaxVC::Dihedral: return "Dihedral";
  }
  return "?";
}

nlohmann::json Classification::to_json() const {
  nlohmann::json j{{"type", to_string(type)}};
  if (type == Type::Elliptic) j["order"] = order;
  if (type == Type::Hyperbolic) {
    j["translation_length"] = translation_length;
    j["max_vc"] = to_string(max_vc);
    j["cyclic_core"] = print(cyclic_core);
    j["conjugator"] = print(conjugator);
    j["inverter"] = inverter ? nlohmann::json(print(*inverter)) : nlohmann::json(nullptr);
  }
  return j;
}

Classification classify(const Word& w0) {
  Classification c;
  Word w = reduce(w0);
  Word conj;
  // Conjugate by the first syllable while the ends live in the same factor.
  while (w.size() >= 2 && (w.front() == kA) == (w.back() == kA)) {
    std::uint8_t x = w.front();
    conj.push_back(x);
    w = reduce(concat(Word{inv_syllable(x)}, concat(w, Word{x})));
  }
  c.cyclic_core = w;
  c.conjugator = reduce(conj);
  if (w.empty()) return c;
  if (w.size() == 1) {
    c.type = Type::Elliptic;
    c.order = w[0] == kA ? 2 : 3;
    return c;
  }
  c.type = Type::Hyperbolic;
  c.translation_length = w.size();
  const Word winv = inverse(w);
  c.max_vc = MaxVC::Cyclic;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (rotate(w, k) != winv) continue;
    // rotate(w, k) = p^-1 w p with p the first k syllables.
    Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    Word x = inverse(p);
    c.inverter = reduce(concat(c.conjugator, concat(x, inverse(c.conjugator))));
    c.max_vc = MaxVC::Dihedral;
    break;
  }
  return c;
}

std::vector<Word> all_words(std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::uint8_t s : {kA, kB, kBB}) {
        if (!w.empty() && (w.back() == kA) == (s == kA)) continue;
        Word v = w;
        v.push_back(s);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::optional<Word> find_conjugator(const Word& a, const Word& b, std::size_t max_len) {
  const Word ra = reduce(a), rb = reduce(b);
  for (const Word& x : all_words(max_len))
    if (concat(x, concat(ra, inverse(x))) == rb) return x;
  return std::nullopt;
}

std::vector<VCClass> enumerate_maximal_vc(int L, int cap) {
  if (L > cap) throw CapExceeded("enumeration length " + std::to_string(L) + " exceeds cap " + std::to_string(cap));
  std::vector<VCClass> out;
  std::set<Word> seen;
  for (int len = 2; len <= L; len += 2) {
    const int k = len / 2;
    for (int mask = 0; mask < (1 << k); ++mask) {
      Word w;
      for (int i = 0; i < k; ++i) {
        w.push_back(kA);
        w.push_back((mask >> i) & 1 ? kBB : kB);
      }
      bool primitive = true;
      for (int d = 1; d < k && primitive; ++d)
        if (k % d == 0 && rotate(w, static_cast<std::size_t>(2 * d)) == w) primitive = false;
      if (!primitive) continue;
      Word key = w;
      const Word winv = inverse(w);
      for (std::size_t r = 0; r < w.size(); ++r) {
        key = std::min(key, rotate(w, r));
        key = std::min(key, rotate(winv, r));
      }
      if (!seen.insert(key).second) continue;
      out.push_back({w, classify(w).max_vc});
    }
  }
  return out;
}

}  // namespace semisplit::psl2
