#include "semisplit/kwitness.hpp"

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"

namespace semisplit {

namespace {

RingTag kind_tag(const RingMatrix& m, RingKind k) { return m.tag().with_kind(k); }

std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

/// P M P^-1 with (P M P^-1)[i][k] = M[perm i][perm k].
RingMatrix conjugate(const RingMatrix& m, const std::vector<std::size_t>& perm) {
  return RingMatrix::permutation(m.tag(), perm) * m * RingMatrix::permutation(m.tag(), inverse_perm(perm));
}

/// Block swap taking an (n2 + n1)-indexed matrix to the (n1 + n2) order.
std::vector<std::size_t> swap_perm(std::size_t n1, std::size_t n2) {
  std::vector<std::size_t> p(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) p[i] = n2 + i;
  for (std::size_t j = 0; j < n2; ++j) p[n1 + j] = j;
  return p;
}

void require_equal(const RingMatrix& a, const RingMatrix& b, const std::string& what) {
  if (!(a == b)) throw IdentityFails(what + "\nlhs:\n" + a.to_string() + "\nrhs:\n" + b.to_string());
}

int certified_degree(const NilB& y, int kmax) {
  try {
    return require_nilpotent(y, kmax);
  } catch (const NotNilpotentWithinBound& e) {
    throw NotCertifiedNilpotent(e.what());
  }
}

void certify(const NilA& x, int kmax) {
  try {
    require_nilpotent(x, kmax);
  } catch (const NotNilpotentWithinBound& e) {
    throw NotCertifiedNilpotent(e.what());
  }
}

RingMatrix to_laurent(const RingMatrix& m) {
  switch (m.tag().kind) {
    case RingKind::PolyPlus:
    case RingKind::PolyMinus: return m.retag(RingKind::Laurent);
    case RingKind::PolyPlusPrime:
    case RingKind::PolyMinusPrime: return m.retag(RingKind::LaurentPrime);
    default: return m;
  }
}

/// Top rows absorb X times the bottom rows, then the left columns absorb the bottom columns times -Y.
void t_side_ops(std::vector<ElementaryOp>& ops, const RingMatrix& X, const RingMatrix& Y, std::size_t off) {
  const std::size_t a = X.rows(), b = X.cols();
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (!X.at(i, j).is_zero()) ops.push_back({ElementaryOp::Kind::Row, off + a + j, off + i, -X.at(i, j)});
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j)
      if (!Y.at(i, j).is_zero()) ops.push_back({ElementaryOp::Kind::Column, off + a + i, off + j, -Y.at(i, j)});
}

/// Bottom rows absorb -Y times the top rows, then the right columns absorb the top columns times -X.
void tprime_side_ops(std::vector<ElementaryOp>& ops, const RingMatrix& X, const RingMatrix& Y, std::size_t off) {
  const std::size_t a = X.rows(), b = X.cols();
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < a; ++j)
      if (!Y.at(i, j).is_zero()) ops.push_back({ElementaryOp::Kind::Row, off + j, off + a + i, -Y.at(i, j)});
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (!X.at(i, j).is_zero()) ops.push_back({ElementaryOp::Kind::Column, off + i, off + a + j, -X.at(i, j)});
}

}  // namespace

K1Witness K1Witness::create(RingMatrix A, RingMatrix inv) {
  if (!A.is_square() || !inv.is_square() || A.rows() != inv.rows()) throw NonSquare("K1 witness");
  require_same_tag(A.tag(), inv.tag(), "K1 witness");
  if (!(A * inv).is_identity() || !(inv * A).is_identity())
    throw NotInvertible("certificate is not a two-sided inverse of\n" + A.to_string());
  return K1Witness(std::move(A), std::move(inv));
}

RingMatrix apply_ops(const RingMatrix& m, const std::vector<ElementaryOp>& ops) {
  RingMatrix r = m;
  for (const ElementaryOp& op : ops) {
    const std::size_t bound = op.kind == ElementaryOp::Kind::Row ? r.rows() : r.cols();
    if (op.src == op.dst || op.src >= bound || op.dst >= bound)
      throw ShapeMismatch("elementary operation indices out of range");
    require_same_tag(op.lambda.tag(), r.tag(), "elementary operation");
    if (op.kind == ElementaryOp::Kind::Row) {
      for (std::size_t c = 0; c < r.cols(); ++c) r.at(op.dst, c) += op.lambda * r.at(op.src, c);
    } else {
      for (std::size_t c = 0; c < r.rows(); ++c) r.at(c, op.dst) += r.at(c, op.src) * op.lambda;
    }
  }
  return r;
}

nlohmann::json ElementaryCertificate::to_json() const {
  nlohmann::json ops_json = nlohmann::json::array();
  for (const ElementaryOp& op : ops)
    ops_json.push_back({{"op", op.kind == ElementaryOp::Kind::Row ? "row" : "col"},
                        {"src", op.src},
                        {"dst", op.dst},
                        {"lambda", print_ring_literal(op.lambda)}});
  return {{"schema", "semisplit-certificate/1"},
          {"label", label},
          {"fixture", source.tag().amalgam->name()},
          {"coeff", source.tag().coeff.name()},
          {"ring", to_string(source.tag().kind)},
          {"rows", source.rows()},
          {"cols", source.cols()},
          {"source", source.to_literals()},
          {"target", target.to_literals()},
          {"ops", std::move(ops_json)}};
}

ElementaryCertificate ElementaryCertificate::from_json(const nlohmann::json& j, const RingTag& base) {
  try {
    if (j.at("schema") != "semisplit-certificate/1") throw ParseError("unknown certificate schema");
    const RingTag tag = base.with_kind(parse_ring_kind(j.at("ring").get<std::string>()));
    auto read = [&](const nlohmann::json& rows) {
      std::vector<std::vector<std::string>> lits = rows.get<std::vector<std::vector<std::string>>>();
      return RingMatrix::from_literals(tag, lits);
    };
    ElementaryCertificate c;
    c.label = j.value("label", "");
    c.source = read(j.at("source"));
    c.target = read(j.at("target"));
    if (c.source.rows() != j.at("rows").get<std::size_t>() || c.source.cols() != j.at("cols").get<std::size_t>())
      throw ShapeMismatch("certificate source does not match its declared size");
    for (const auto& op : j.at("ops")) {
      std::string kind = op.at("op").get<std::string>();
      if (kind != "row" && kind != "col") throw ParseError("operation must be row or col");
      c.ops.push_back({kind == "row" ? ElementaryOp::Kind::Row : ElementaryOp::Kind::Column,
                       op.at("src").get<std::size_t>(), op.at("dst").get<std::size_t>(),
                       parse_ring_literal(op.at("lambda").get<std::string>(), tag)});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

K1Witness sigma_B(const NilB& y, int kmax) {
  const int d = certified_degree(y, kmax);
  const RingTag T = kind_tag(y.M, twist_ring(y.twist));
  const RingElem t = RingElem::t_power(T, twist_exponent(y.twist));
  const RingMatrix tM = y.M.map(T, [&](const RingElem& e) { return t * embed(e, Inclusion::FromF, T.kind); });
  const RingMatrix I = RingMatrix::identity(T, y.rank());
  RingMatrix inv = I, power = I;
  for (int k = 1; k < d; ++k) {
    power = power * tM;
    inv = inv + power;
  }
  return K1Witness::create(I - tM, inv);
}

K1Witness sigma_B_combined(const NilB& plus, const NilB& minus, int kmax) {
  const bool primed = plus.twist == Twist::AlphaPrime;
  if (!((plus.twist == Twist::Alpha && minus.twist == Twist::AlphaInv) ||
        (primed && minus.twist == Twist::AlphaPrimeInv)))
    throw TwistMismatch("combined sigma_B needs twists (alpha, alpha^-1) or (alpha', alpha'^-1)");
  K1Witness a = sigma_B(plus, kmax), b = sigma_B(minus, kmax);
  return K1Witness::create(RingMatrix::block_diag(to_laurent(a.matrix()), to_laurent(b.matrix())),
                           RingMatrix::block_diag(to_laurent(a.inverse()), to_laurent(b.inverse())));
}

RingMatrix letter_times(int letter, const RingMatrix& m) {
  const RingTag G = kind_tag(m, RingKind::GroupRingG);
  const RingElem T = RingElem::word(G, G.amalgam->letter(letter));
  return m.map(G, [&](const RingElem& e) { return T * embed(e, Inclusion::FromF, RingKind::GroupRingG); });
}

RingMatrix theta_image(const RingMatrix& m) {
  const RingMatrix l = to_laurent(m);
  const RingTag G = kind_tag(m, RingKind::GroupRingG);
  switch (l.tag().kind) {
    case RingKind::GroupRingF:
      return l.map(G, [](const RingElem& e) { return embed(e, Inclusion::FromF, RingKind::GroupRingG); });
    case RingKind::Laurent: return l.map(G, [](const RingElem& e) { return embed(e, Inclusion::Theta); });
    case RingKind::LaurentPrime: return l.map(G, [](const RingElem& e) { return embed(e, Inclusion::ThetaPrime); });
    case RingKind::GroupRingG: return l;
    default: break;
  }
  throw InvalidInclusionPair("theta_image: unsupported ring " + to_string(m.tag().kind));
}

K1Witness induce_theta(const K1Witness& w) {
  return K1Witness::create(theta_image(w.matrix()), theta_image(w.inverse()));
}

RingMatrix sigma_A_matrix(const NilA& x) {
  const RingMatrix X = letter_times(x.first_letter(), x.M1);
  const RingMatrix Y = letter_times(x.second_letter(), x.M2);
  const RingTag& G = X.tag();
  return RingMatrix::blocks(RingMatrix::identity(G, x.n1()), X, Y, RingMatrix::identity(G, x.n2()));
}

K1Witness sigma_A(const NilA& x, int kmax) {
  certify(x, kmax);
  const RingMatrix X = letter_times(x.first_letter(), x.M1);
  const RingMatrix Y = letter_times(x.second_letter(), x.M2);
  const RingTag& G = X.tag();
  const std::size_t n1 = x.n1(), n2 = x.n2();
  const RingMatrix I1 = RingMatrix::identity(G, n1), I2 = RingMatrix::identity(G, n2);
  const RingMatrix W = sigma_A_matrix(x);
  // W^-1 = R diag(D^-1, I) L for the t-side elimination L W R = diag(D, I).
  const RingMatrix Dinv = theta_image(sigma_B(composite(x), kmax).inverse());
  const RingMatrix L = RingMatrix::blocks(I1, -X, RingMatrix::zero(G, n2, n1), I2);
  const RingMatrix R = RingMatrix::blocks(I1, RingMatrix::zero(G, n1, n2), -Y, I2);
  return K1Witness::create(W, R * RingMatrix::block_diag(Dinv, I2) * L);
}

DiagonalReport diagonalize_sigmaA(const NilA& x, EliminationSide side, bool naive) {
  const K1Witness W = sigma_A(x);
  const RingMatrix X = letter_times(x.first_letter(), x.M1);
  const RingMatrix Y = letter_times(x.second_letter(), x.M2);
  const RingTag& G = W.tag();
  const std::size_t n1 = x.n1(), n2 = x.n2();
  // Column-operation entries; the naive variant puts the coefficient before the letter.
  auto naive_entries = [&](int letter, const RingMatrix& m) {
    const RingElem T = RingElem::word(G, G.amalgam->letter(letter));
    return m.map(G, [&](const RingElem& e) { return embed(e, Inclusion::FromF, RingKind::GroupRingG) * T; });
  };

  DiagonalReport rep;
  rep.side = side;
  rep.certificate.source = W.matrix();
  if (side == EliminationSide::T) {
    rep.certificate.label = naive ? "sigmaA t-side (naive)" : "sigmaA t-side";
    t_side_ops(rep.certificate.ops, X, naive ? naive_entries(x.second_letter(), x.M2) : Y, 0);
    rep.expected = RingMatrix::block_diag(theta_image(sigma_B(composite(x)).matrix()), RingMatrix::identity(G, n2));
  } else {
    rep.certificate.label = naive ? "sigmaA t'-side (naive)" : "sigmaA t'-side";
    tprime_side_ops(rep.certificate.ops, naive ? naive_entries(x.first_letter(), x.M1) : X, Y, 0);
    rep.expected =
        RingMatrix::block_diag(RingMatrix::identity(G, n1), theta_image(sigma_B(composite_prime(x)).matrix()));
  }
  const RingMatrix out = rep.certificate.replay();
  rep.certificate.target = out;
  rep.D = side == EliminationSide::T ? out.block(0, 0, n1, n1) : out.block(n1, n1, n2, n2);
  rep.residual = out - rep.expected;
  rep.ok = rep.residual.is_zero();
  return rep;
}

std::vector<DiagonalReport> verify_sigmaA_diagonalization(const NilA& x) {
  std::vector<DiagonalReport> out;
  for (EliminationSide s : {EliminationSide::T, EliminationSide::TPrime}) {
    out.push_back(diagonalize_sigmaA(x, s));
    if (!out.back().ok)
      throw DiagonalizationFailed(out.back().certificate.label + " residual:\n" + out.back().residual.to_string());
  }
  return out;
}

void verify_sigmaA_swap(const NilA& x) {
  const RingMatrix a = sigma_A(x).matrix();
  const RingMatrix b = sigma_A(tauA(x)).matrix();
  require_equal(a, conjugate(b, swap_perm(x.n1(), x.n2())), "sigma_A(x) vs block-swapped sigma_A'(tau_A x)");
}

ElementaryCertificate verify_induction_key(const NilB& y) {
  if (y.twist != Twist::Alpha) throw TwistMismatch("induction key expects twist alpha");
  DiagonalReport rep = diagonalize_sigmaA(functor_i(y), EliminationSide::T);
  const RingMatrix rhs = induce_theta(K1Witness::create(to_laurent(sigma_B(y).matrix()),
                                                        to_laurent(sigma_B(y).inverse())))
                             .matrix();
  require_equal(rep.certificate.target, RingMatrix::block_diag(rhs, RingMatrix::identity(rhs.tag(), y.rank())),
                "sigma_A(i y) eliminated vs diag(theta psi+ sigma_B(y), I)");
  rep.certificate.label = "induction key";
  return rep.certificate;
}

ElementaryCertificate verify_induction_second_branch(const NilB& y) {
  if (y.twist != Twist::AlphaInv) throw TwistMismatch("second induction branch expects twist alpha^-1");
  const NilA x = tauA(functor_iprime(scale_nil(y, Scaling::BetaPlus)));
  DiagonalReport rep = diagonalize_sigmaA(x, EliminationSide::TPrime);
  const RingMatrix rhs = theta_image(sigma_B(y).matrix());
  require_equal(rep.certificate.target, RingMatrix::block_diag(RingMatrix::identity(rhs.tag(), y.rank()), rhs),
                "sigma_A(tau_A^-1 i' beta_u+ y) eliminated vs diag(I, theta psi- sigma_B(y))");
  rep.certificate.label = "induction second branch";
  return rep.certificate;
}

void verify_scaling_witness(const NilB& y, Scaling s) {
  const K1Witness w = sigma_B(y);
  const NilB z = scale_nil(y, s);
  const K1Witness wz = sigma_B(z);
  const RingTag target = kind_tag(y.M, twist_ring(z.twist));
  auto beta = [](const RingElem& e) { return beta_u(e); };
  require_equal(w.matrix().map(target, beta), wz.matrix(), "beta_u o sigma_B vs sigma_B o scale_nil");
  require_equal(w.inverse().map(target, beta), wz.inverse(), "beta_u on inverse certificates");
}

void verify_scaling_combined(const NilB& plus, const NilB& minus) {
  const K1Witness w = sigma_B_combined(plus, minus);
  const K1Witness wp =
      sigma_B_combined(scale_nil(minus, Scaling::BetaPlus), scale_nil(plus, Scaling::BetaMinus));
  const RingTag target = kind_tag(plus.M, RingKind::LaurentPrime);
  const RingMatrix lhs = w.matrix().map(target, [](const RingElem& e) { return beta_u(e); });
  require_equal(lhs, conjugate(wp.matrix(), swap_perm(plus.rank(), minus.rank())),
                "beta_u(sigma_B combined) vs block-swapped primed combined");
}

RingMatrix transfer_theta(const RingMatrix& W) {
  if (W.tag().kind != RingKind::GroupRingG) throw TagMismatch("transfer acts on R[G] matrices");
  if (!W.is_square()) throw NonSquare("transfer_theta");
  const Amalgam& G = *W.tag().amalgam;
  const RingTag L = kind_tag(W, RingKind::Laurent);
  const RingElem T1 = RingElem::word(W.tag(), G.letter(1));
  const GroupWord T1inv = G.inverse(G.letter(1));
  auto split = [&](const RingElem& r) {
    RingElem even(W.tag()), odd(W.tag());
    for (const auto& [m, c] : r.terms()) {
      if (m.word.letters.size() % 2 == 0) {
        even.add_term(m, c);
      } else {
        GroupWord w = G.mul(m.word, T1inv);
        if (w.letters.size() % 2 != 0) throw DecompositionError("odd word times t1^-1 stayed odd");
        odd.add_term(Monomial{0, w}, c);
      }
    }
    return std::pair{restrict_to_bar(even), restrict_to_bar(odd)};
  };
  const std::size_t N = W.rows();
  RingMatrix out(L, 2 * N, 2 * N);
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j) {
      auto [w0, w1] = split(W.at(k, j));
      auto [v0, v1] = split(T1 * W.at(k, j));
      out.at(k, j) = w0;
      out.at(k, N + j) = w1;
      out.at(N + k, j) = v0;
      out.at(N + k, N + j) = v1;
    }
  return out;
}

K1Witness transfer_theta(const K1Witness& w) {
  return K1Witness::create(transfer_theta(w.matrix()), transfer_theta(w.inverse()));
}

std::vector<std::size_t> transfer_order(std::size_t n1, std::size_t n2) {
  const std::size_t N = n1 + n2;
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < n1; ++i) p.push_back(i);
  for (std::size_t i = 0; i < n2; ++i) p.push_back(N + n1 + i);
  for (std::size_t i = 0; i < n2; ++i) p.push_back(n1 + i);
  for (std::size_t i = 0; i < n1; ++i) p.push_back(N + i);
  return p;
}

TransferReport verify_transfer_diagonalization(const NilA& x) {
  if (x.order != Order::B1B2) throw TwistMismatch("transfer diagonalization expects Nil(R[F]; B1, B2)");
  const std::size_t n1 = x.n1(), n2 = x.n2(), N = n1 + n2;
  TransferReport rep;
  rep.transferred = conjugate(transfer_theta(sigma_A(x).matrix()), transfer_order(n1, n2));
  const RingMatrix& T = rep.transferred;
  const RingTag& L = T.tag();
  if (!T.block(0, N, N, N).is_zero() || !T.block(N, 0, N, N).is_zero())
    throw DiagonalizationFailed("transferred sigma_A is not block diagonal:\n" + T.to_string());
  for (std::size_t off : {std::size_t{0}, N}) {
    const std::size_t a = off == 0 ? n1 : n2, b = N - a;
    if (!T.block(off, off, a, a).is_identity() || !T.block(off + a, off + a, b, b).is_identity())
      throw DiagonalizationFailed("transferred sigma_A blocks lack identity diagonals:\n" + T.to_string());
    t_side_ops(rep.certificate.ops, T.block(off, off + a, a, b), T.block(off + a, off, b, a), off);
  }
  rep.certificate.label = "transfer";
  rep.certificate.source = T;
  rep.certificate.target = rep.certificate.replay();
  const RingMatrix& out = rep.certificate.target;
  rep.D1 = out.block(0, 0, n1, n1);
  rep.D2 = out.block(N, N, n2, n2);
  const RingMatrix expected = RingMatrix::block_diag(
      RingMatrix::block_diag(rep.D1, RingMatrix::identity(L, n2)),
      RingMatrix::block_diag(rep.D2, RingMatrix::identity(L, n1)));
  if (!(out == expected)) throw DiagonalizationFailed("transfer elimination residual:\n" + (out - expected).to_string());
  require_equal(rep.D1, to_laurent(sigma_B(functor_j(x)).matrix()), "transfer block 1 vs psi+ sigma_B(j x)");
  require_equal(theta_image(rep.D2), theta_image(sigma_B(functor_jprime(x)).matrix()),
                "theta(transfer block 2) vs theta' psi'+ sigma_B(j' x)");
  return rep;
}

void verify_transfer_additivity(const RingMatrix& A, const RingMatrix& B) {
  const std::size_t na = A.rows(), nb = B.rows();
  const RingMatrix lhs = transfer_theta(RingMatrix::block_diag(A, B));
  const RingMatrix rhs = RingMatrix::block_diag(transfer_theta(A), transfer_theta(B));
  std::vector<std::size_t> p;
  for (std::size_t k = 0; k < na; ++k) p.push_back(k);
  for (std::size_t k = 0; k < nb; ++k) p.push_back(2 * na + k);
  for (std::size_t k = 0; k < na; ++k) p.push_back(na + k);
  for (std::size_t k = 0; k < nb; ++k) p.push_back(2 * na + nb + k);
  require_equal(lhs, conjugate(rhs, p), "transfer of a block sum vs interleaved block sum of transfers");
}

}  // namespace semisplit
