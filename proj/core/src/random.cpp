#include "semisplit/random.hpp"

namespace semisplit {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream) : engine_(splitmix(splitmix(seed) ^ fnv1a(stream))) {}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

FElem random_felem(Rng& rng, const BaseGroup& F, int lattice_radius) {
  FElem f;
  f.idx = static_cast<int>(rng.uniform(0, F.finite_order() - 1));
  for (int k = 0; k < F.free_rank(); ++k) f.z[static_cast<std::size_t>(k)] = rng.uniform(-lattice_radius, lattice_radius);
  return f;
}

std::vector<RawToken> random_tokens(Rng& rng, const Amalgam& G, int max_tokens) {
  std::vector<RawToken> toks;
  const auto n = rng.uniform(0, max_tokens);
  for (std::int64_t i = 0; i < n; ++i) {
    if (rng.chance(2, 3))
      toks.push_back(RawToken::t(static_cast<int>(rng.uniform(1, 2)), rng.chance(3, 4) ? 1 : -1));
    else
      toks.push_back(RawToken::elem(random_felem(rng, G.F())));
  }
  return toks;
}

GroupWord random_word(Rng& rng, const Amalgam& G, int max_tokens) {
  const auto toks = random_tokens(rng, G, max_tokens);
  return G.normal_form(toks);
}

RingElem random_ring_elem(Rng& rng, const RingTag& tag, int max_terms, int max_power, int c) {
  const Amalgam& G = *tag.amalgam;
  RingElem r(tag);
  const auto n = rng.uniform(0, max_terms);
  for (std::int64_t i = 0; i < n; ++i) {
    Monomial m;
    switch (tag.kind) {
      case RingKind::GroupRingF: break;
      case RingKind::PolyPlus:
      case RingKind::PolyPlusPrime: m.power = rng.uniform(0, max_power); break;
      case RingKind::PolyMinus:
      case RingKind::PolyMinusPrime: m.power = -rng.uniform(0, max_power); break;
      case RingKind::Laurent:
      case RingKind::LaurentPrime: m.power = rng.uniform(-max_power, max_power); break;
      case RingKind::GroupRingG: break;
    }
    if (tag.kind == RingKind::GroupRingG)
      m.word = random_word(rng, G, 2 * max_power + 1);
    else
      m.word.tail = random_felem(rng, G.F());
    std::int64_t coeff = 0;
    while (coeff == 0) coeff = rng.uniform(-c, c);
    r.add_term(m, coeff);
  }
  return r;
}

RingMatrix random_matrix(Rng& rng, const RingTag& tag, std::size_t rows, std::size_t cols, int density,
                         int max_terms) {
  RingMatrix m(tag, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.chance(density, 4)) m.at(i, j) = random_ring_elem(rng, tag, max_terms, 1, 2);
  return m;
}

}  // namespace semisplit

namespace semisplit {

InvertiblePair random_invertible(Rng& rng, const RingTag& tag, std::size_t n, int steps) {
  const RingTag base = tag.with_kind(RingKind::GroupRingF);
  const BaseGroup& F = base.amalgam->F();
  InvertiblePair p{RingMatrix::identity(base, n), RingMatrix::identity(base, n)};
  if (n == 0) return p;
  for (int s = 0; s < steps; ++s) {
    RingMatrix E = RingMatrix::identity(base, n), Einv = RingMatrix::identity(base, n);
    if (n > 1 && rng.chance(2, 3)) {
      auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
      if (j >= i) ++j;
      RingElem lambda = random_ring_elem(rng, base, 2, 0, 2);
      E.at(i, j) = lambda;
      Einv.at(i, j) = -lambda;
    } else {
      auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      FElem g = random_felem(rng, F);
      std::int64_t sign = rng.chance(1, 2) ? 1 : -1;
      E.at(k, k) = RingElem::element(base, g, sign);
      Einv.at(k, k) = RingElem::element(base, F.inv(g), sign);
    }
    p.U = p.U * E;
    p.inverse = Einv * p.inverse;
  }
  return p;
}

NilB random_nilB(Rng& rng, const RingTag& tag, Twist twist, std::size_t max_rank) {
  const RingTag base = tag.with_kind(RingKind::GroupRingF);
  auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
  RingMatrix C(base, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(3, 4)) C.at(i, j) = random_ring_elem(rng, base, 2, 0, 2);
  InvertiblePair V = random_invertible(rng, base, n);
  const GroupAut& tw = twist_aut(*base.amalgam, twist);
  return {twist, V.U.twisted(tw) * C * V.inverse};
}

NilA random_nilA(Rng& rng, const RingTag& tag, Order order, std::size_t max_rank) {
  const RingTag base = tag.with_kind(RingKind::GroupRingF);
  auto zero_piece = [&](std::size_t n1, std::size_t n2) {
    return NilA{order, RingMatrix::zero(base, n1, n2), RingMatrix::zero(base, n2, n1)};
  };
  NilA x;
  const auto kind = rng.uniform(0, 3);
  if (kind <= 1) {
    Twist tw = order == Order::B1B2 ? Twist::Alpha : Twist::AlphaPrime;
    NilB y = random_nilB(rng, base, tw, max_rank);
    x = order == Order::B1B2 ? functor_i(y) : functor_iprime(y);
  } else {
    auto n1 = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
    auto n2 = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
    x = zero_piece(n1, n2);
    if (kind == 2)
      x.M1 = random_matrix(rng, base, n1, n2);
    else
      x.M2 = random_matrix(rng, base, n2, n1);
  }
  x = direct_sum(x, zero_piece(0, static_cast<std::size_t>(rng.uniform(0, 1))));
  x = direct_sum(x, zero_piece(static_cast<std::size_t>(rng.uniform(0, 1)), 0));
  InvertiblePair U1 = random_invertible(rng, base, x.n1());
  InvertiblePair U2 = random_invertible(rng, base, x.n2());
  return transport(x, U1.U, U1.inverse, U2.U, U2.inverse);
}

}  // namespace semisplit
