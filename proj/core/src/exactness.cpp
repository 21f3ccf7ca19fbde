#include "semisplit/exactness.hpp"

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"

namespace semisplit {

namespace {

const BaseGroup& finite_base(const RingTag& tag) {
  const BaseGroup& F = tag.amalgam->F();
  if (!F.is_finite())
    throw UnsupportedCoefficients("exactness checks need a finite F (free rank " + std::to_string(F.free_rank()) + ")");
  if (tag.kind != RingKind::GroupRingF) throw TagMismatch("exactness checks act on R[F] matrices");
  return F;
}

bool equivariant(const lattice::IntMatrix& rep, std::size_t n, std::size_t m, const BaseGroup& F) {
  const auto N = static_cast<std::size_t>(F.finite_order());
  for (int g = 1; g < F.finite_order(); ++g)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t h = 0; h < N; ++h) {
        const auto& src = rep[k * N + h];
        const auto& dst = rep[k * N + static_cast<std::size_t>(F.table(g, static_cast<int>(h)))];
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t x = 0; x < N; ++x)
            if (src[j * N + x] != dst[j * N + static_cast<std::size_t>(F.table(g, static_cast<int>(x)))])
              return false;
      }
  return true;
}

}  // namespace

lattice::IntMatrix regular_representation(const RingMatrix& U) {
  const BaseGroup& F = finite_base(U.tag());
  const auto N = static_cast<std::size_t>(F.finite_order());
  lattice::IntMatrix rep(U.rows() * N, lattice::IntVector(U.cols() * N, 0));
  for (std::size_t k = 0; k < U.rows(); ++k)
    for (std::size_t j = 0; j < U.cols(); ++j)
      for (const auto& [mono, c] : U.at(k, j).terms())
        for (std::size_t g = 0; g < N; ++g) {
          auto gh = static_cast<std::size_t>(F.table(static_cast<int>(g), mono.word.tail.idx));
          rep[k * N + g][j * N + gh] += c;
        }
  return rep;
}

std::vector<std::string> witness_literals(const lattice::IntVector& v, const RingTag& tag) {
  const BaseGroup& F = finite_base(tag);
  const auto N = static_cast<std::size_t>(F.finite_order());
  std::vector<std::string> out;
  for (std::size_t k = 0; k * N < v.size(); ++k) {
    RingElem e(tag);
    for (std::size_t g = 0; g < N; ++g)
      if (v[k * N + g] != 0) e += RingElem::element(tag, FElem{static_cast<int>(g), {}}, v[k * N + g]);
    out.push_back(print_ring_literal(e));
  }
  return out;
}

std::vector<ShortSequence> proof_sequences(const ProofObjects& p) {
  ShortSequence first{direct_sum(p.x, p.a), direct_sum(p.x1, p.a), p.a1,
                      block_morphism(p.f, zero_morphism(p.x, p.a), p.g, identity_morphism(p.a)),
                      stack_morphism(p.g1, p.h)};
  ShortSequence second{p.a, p.x1, p.x2, p.g, p.f1};
  return {first, second};
}

ExactnessReport check_exact(const ShortSequence& s) { return check_exact(s.L, s.M, s.R, s.in, s.out); }

bool ExactnessReport::exact() const { return first_failure() == nullptr; }

const ExactnessVerdict* ExactnessReport::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.ok) return &v;
  return nullptr;
}

nlohmann::json ExactnessReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json j{{"component", v.component}, {"position", v.position}, {"ok", v.ok}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!v.witness.empty()) j["witness"] = v.witness;
    arr.push_back(std::move(j));
  }
  return {{"exact", exact()}, {"verdicts", std::move(arr)}};
}

ExactnessReport check_exact(const NilA& L, const NilA& M, const NilA& R, const NilAMorphism& in,
                            const NilAMorphism& out) {
  const RingTag& tag = M.M1.tag();
  const BaseGroup& F = finite_base(tag);
  const auto N = static_cast<std::size_t>(F.finite_order());
  const std::int64_t mod = tag.coeff.modulus;

  ExactnessReport rep;
  rep.verdicts.push_back({"both", "morphism", "", is_morphism(in, L, M) && is_morphism(out, M, R), {}});

  auto component = [&](const std::string& name, const RingMatrix& A, const RingMatrix& B) {
    const std::size_t a = A.rows() * N, b = A.cols() * N, c = B.cols() * N;
    const auto RA = regular_representation(A);
    const auto RB = regular_representation(B);
    auto push = [&](const char* pos, const char* detail, const std::optional<lattice::IntVector>& w,
                    std::size_t width) {
      ExactnessVerdict v{name, pos, detail, !w.has_value(), {}};
      if (w) {
        lattice::IntVector padded = *w;
        padded.resize(width, 0);
        v.witness = witness_literals(padded, tag);
      }
      rep.verdicts.push_back(std::move(v));
    };
    rep.verdicts.push_back(
        {name, "equivariance", "", equivariant(RA, A.rows(), A.cols(), F) && equivariant(RB, B.rows(), B.cols(), F), {}});
    // The composite witness is reported as the offending image vector in the middle term.
    std::optional<lattice::IntVector> leak;
    if (auto e = lattice::composite_witness(RA, RB, b, c, mod))
      for (std::size_t i = 0; i < e->size(); ++i)
        if ((*e)[i] != 0) leak = RA[i];
    push("middle", "image not inside kernel", leak, b);
    push("left", "kernel", lattice::injectivity_witness(RA, a, b, mod), a);
    push("middle", "kernel not inside image", lattice::middle_witness(RA, RB, a, b, c, mod), b);
    push("right", "cokernel", lattice::surjectivity_witness(RB, b, c, mod), c);
  };
  component("P1", in.U1, out.U1);
  component("P2", in.U2, out.U2);
  return rep;
}

void require_exact(const NilA& L, const NilA& M, const NilA& R, const NilAMorphism& in, const NilAMorphism& out) {
  ExactnessReport rep = check_exact(L, M, R, in, out);
  if (const auto* f = rep.first_failure()) {
    std::string w;
    for (const auto& s : f->witness) w += (w.empty() ? "" : ", ") + s;
    throw NotExactAt(f->position + " (" + f->component + ", " + f->detail + ") witness [" + w + "]");
  }
}

}  // namespace semisplit
