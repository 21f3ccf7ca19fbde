#include "semisplit/literal.hpp"

#include <cctype>
#include <vector>

#include "semisplit/error.hpp"

namespace semisplit {

namespace {

struct Token {
  enum Kind { Int, Ident, Sym, End } kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i > 17) throw ParseError("integer too long at " + std::to_string(i));
      out.push_back({Token::Int, s.substr(i, j - i), std::stoll(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), 0, i});
      i = j;
    } else if (std::string("+-*^()[]").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c), 0, i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at " + std::to_string(i));
    }
  }
  out.push_back({Token::End, "", 0, s.size()});
  return out;
}

bool is_indexed(const std::string& id, char prefix, int& k) {
  if (id.size() < 2 || id[0] != prefix) return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  if (id.size() > 4) return false;
  k = std::stoi(id.substr(1));
  return true;
}

class Parser {
 public:
  Parser(const std::string& text, const RingTag& tag) : toks_(tokenize(text)), tag_(tag), G_(*tag.amalgam) {}

  RingElem parse_all() {
    RingElem r = expr();
    if (peek().kind != Token::End) fail("trailing input");
    return r;
  }

  GroupWord word_until(bool bracketed) {
    GroupWord w;
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::End) {
        if (bracketed) fail("missing ']'");
        break;
      }
      if (bracketed && t.kind == Token::Sym && t.text == "]") break;
      if (t.kind == Token::Int && t.value == 1) {
        next();
        continue;
      }
      if (t.kind == Token::Sym && t.text == "*") {
        next();
        continue;
      }
      if (t.kind != Token::Ident) fail("expected a letter or element");
      const std::string id = next().text;
      const std::int64_t e = maybe_exponent();
      if (id == "T1" || id == "T2") {
        G_.append(w, RawToken::t(id == "T1" ? 1 : 2, static_cast<int>(e)));
      } else {
        const FElem f = group_elem(id, e);
        G_.append(w, RawToken::elem(f));
      }
    }
    return w;
  }

  const Token& peek() const { return toks_[pos_]; }

 private:
  const Token& next() { return toks_[pos_++]; }
  bool accept(const char* sym) {
    if (peek().kind == Token::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(peek().pos));
  }

  std::int64_t maybe_exponent() {
    if (!accept("^")) return 1;
    bool neg = accept("-");
    if (peek().kind != Token::Int) fail("expected exponent");
    const std::int64_t v = next().value;
    return neg ? -v : v;
  }

  FElem group_elem(const std::string& id, std::int64_t e) {
    const BaseGroup& F = G_.F();
    int k = 0;
    FElem base;
    if (is_indexed(id, 'f', k)) {
      if (k >= F.finite_order()) fail("element index out of range");
      base.idx = k;
    } else if (is_indexed(id, 'z', k)) {
      if (k >= F.free_rank()) fail("lattice generator out of range");
      base.z[static_cast<std::size_t>(k)] = 1;
    } else {
      auto it = G_.names().find(id);
      if (it == G_.names().end()) fail("unknown identifier '" + id + "'");
      base.idx = it->second;
    }
    FElem r;
    const FElem step = e >= 0 ? base : F.inv(base);
    for (std::int64_t i = e >= 0 ? e : -e; i > 0; --i) r = F.mul(r, step);
    return r;
  }

  RingElem expr() {
    RingElem acc(tag_);
    bool neg = false;
    if (accept("-")) neg = true;
    else accept("+");
    while (true) {
      RingElem t = term();
      acc = neg ? acc - t : acc + t;
      if (accept("+")) neg = false;
      else if (accept("-")) neg = true;
      else break;
    }
    return acc;
  }

  RingElem term() {
    RingElem r = factor();
    while (accept("*")) r = r * factor();
    return r;
  }

  RingElem factor() {
    const Token& t = peek();
    if (t.kind == Token::Int) {
      next();
      return RingElem::scalar(tag_, t.value);
    }
    if (accept("(")) {
      RingElem inner = expr();
      if (!accept(")")) fail("missing ')'");
      const std::int64_t e = maybe_exponent();
      if (e < 0) fail("negative power of a parenthesized expression");
      RingElem r = RingElem::scalar(tag_, 1);
      for (std::int64_t i = 0; i < e; ++i) r = r * inner;
      return r;
    }
    if (accept("[")) {
      if (tag_.kind != RingKind::GroupRingG) fail("bracketed words only exist in R[G]");
      GroupWord w = word_until(true);
      accept("]");
      return RingElem::word(tag_, w);
    }
    if (t.kind != Token::Ident) fail("expected a factor");
    const std::string id = next().text;
    const std::int64_t e = maybe_exponent();
    if (id == "t" || id == "t'" || id == "tp") {
      const bool primed = id != "t";
      if (!is_twisted(tag_.kind) || is_primed(tag_.kind) != primed)
        fail("'" + id + "' does not exist in " + to_string(tag_.kind));
      return RingElem::t_power(tag_, e);
    }
    if (id == "T1" || id == "T2") {
      if (tag_.kind != RingKind::GroupRingG) fail("letters only exist in R[G]");
      GroupWord w;
      G_.append(w, RawToken::t(id == "T1" ? 1 : 2, static_cast<int>(e)));
      return RingElem::word(tag_, w);
    }
    const FElem f = group_elem(id, e);
    return RingElem::element(tag_, f);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingTag tag_;
  const Amalgam& G_;
};

std::string monomial_text(const Monomial& m, const RingTag& tag) {
  std::vector<std::string> parts;
  if (m.power != 0) {
    const std::string t = is_primed(tag.kind) ? "t'" : "t";
    parts.push_back(m.power == 1 ? t : t + "^" + std::to_string(m.power));
  }
  if (!m.word.letters.empty()) {
    std::string w = "[";
    for (std::size_t i = 0; i < m.word.letters.size(); ++i)
      w += (i ? " T" : "T") + std::to_string(m.word.letters[i]);
    parts.push_back(w + "]");
  }
  const std::string f = print_felem(m.word.tail, tag.amalgam->F());
  if (f != "1") parts.push_back(f);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

}  // namespace

RingElem parse_ring_literal(const std::string& text, const RingTag& tag) {
  Parser p(text, tag);
  return p.parse_all();
}

std::string print_felem(const FElem& f, const BaseGroup& F) {
  std::vector<std::string> parts;
  if (f.idx != 0) parts.push_back("f" + std::to_string(f.idx));
  for (int k = 0; k < F.free_rank(); ++k) {
    const auto e = f.z[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    parts.push_back("z" + std::to_string(k) + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

std::string print_ring_literal(const RingElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool neg = c < 0;
    const std::int64_t a = neg ? -c : c;
    const std::string mono = monomial_text(m, x.tag());
    std::string body;
    if (mono.empty()) body = std::to_string(a);
    else if (a == 1) body = mono;
    else body = std::to_string(a) + "*" + mono;
    if (first) out = (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

GroupWord parse_group_word(const std::string& text, const Amalgam& G) {
  RingTag tag{RingKind::GroupRingG, nullptr, {}};
  // The parser needs the amalgam only through the reference.
  std::shared_ptr<const Amalgam> alias(std::shared_ptr<const Amalgam>{}, &G);
  tag.amalgam = alias;
  Parser p(text, tag);
  GroupWord w = p.word_until(false);
  return w;
}

std::string print_group_word(const GroupWord& w, const BaseGroup& F) {
  std::string out;
  for (std::uint8_t l : w.letters) out += (out.empty() ? "T" : " T") + std::to_string(l);
  const std::string f = print_felem(w.tail, F);
  if (f != "1" || out.empty()) out += (out.empty() ? "" : " ") + f;
  return out;
}

}  // namespace semisplit
