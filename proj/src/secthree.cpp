#include "hinv/secthree.hpp"

#include <map>

namespace hinv {

std::string kind_name(FormKind k) { return k == FormKind::orthogonal ? "orthogonal" : "symplectic"; }

std::vector<GroupElem> Gamma::flattened() const {
  std::vector<GroupElem> out = self_dual;
  out.insert(out.end(), dual_first.begin(), dual_first.end());
  out.insert(out.end(), dual_second.begin(), dual_second.end());
  return out;
}

DivisionData trivial_division(const FinAbGroup& G) {
  DivisionData d;
  const FinAbGroup T = d.shape.group();
  d.psi0.shape = d.shape;
  d.psi0.tau = GroupMap::identity(T);
  d.psi0.mode = Mode::anti;
  d.embed = GroupMap(T, G, {});
  return d;
}

// ---------------------------------------------------------------- grading

CycMatrix GradedMatrixAlgebra::cell(size_t idx) const {
  const size_t N = D.T.cardinality();
  const size_t t = idx % N, ij = idx / N, i = ij / k(), j = ij % k();
  CycMatrix out(dim(), dim(), D.M);
  out.set_block(i, j, D.basis[t]);
  // set_block writes the whole block; the other blocks stay zero.
  return out;
}

std::set<GroupElem> GradedMatrixAlgebra::support() const { return {cell_degree.begin(), cell_degree.end()}; }

GradedMatrixAlgebra build_grading(const FinAbGroup& G, const RealizedAlgebra& D, const GroupMap& embed,
                                  const std::vector<GroupElem>& gamma) {
  if (gamma.empty()) throw Error("gamma must be nonempty");
  if (!(embed.source() == D.T) || !(embed.target() == G)) throw Error("embedding failure: wrong groups");
  // injectivity of the support embedding
  std::set<GroupElem> images;
  for (const GroupElem& t : D.T.elements()) images.insert(embed.apply(t));
  if (images.size() != D.T.cardinality() || !embed.is_well_defined()) throw Error("embedding failure: not injective");
  for (const GroupElem& g : gamma)
    if (!G.contains(g)) throw Error("gamma entry outside G");

  GradedMatrixAlgebra A{G, D, embed, gamma, {}};
  const size_t k = gamma.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      for (const GroupElem& t : D.T.elements()) A.cell_degree.push_back(G.sub(G.add(gamma[i], embed.apply(t)), gamma[j]));
  return A;
}

// ---------------------------------------------------------------- datum

std::optional<std::string> datum_problem(const InvolutionDatum& dat) {
  const FinAbGroup& G = dat.G;
  if (!(dat.tau.source() == G) || !(dat.tau.target() == G)) return "tau does not act on G";
  if (!is_automorphism(G, dat.tau)) return "tau is not an automorphism of G";
  if (!(dat.tau.compose(dat.tau) == GroupMap::identity(G))) return "tau is not an involution";
  if (!G.contains(dat.g0)) return "g0 outside G";
  if (!(dat.tau.apply(dat.g0) == dat.g0)) return "tau(g0) != g0";

  const DivisionData& div = dat.division;
  const FinAbGroup T = div.shape.group();
  if (!(div.psi0.shape == div.shape) || !(div.psi0.tau.source() == T)) return "psi0 does not act on D";
  if (!(div.embed.source() == T) || !(div.embed.target() == G)) return "embedding has the wrong groups";
  if (!div.embed.is_well_defined()) return "embedding is not a homomorphism";
  {
    std::set<GroupElem> images;
    for (const GroupElem& t : T.elements()) images.insert(div.embed.apply(t));
    if (images.size() != T.cardinality()) return "embedding is not injective";
  }
  if (div.psi0.mode != Mode::anti || !check_homogeneous_map(div.psi0)) return "psi0 is not a homogeneous anti-automorphism";
  if (!check_involution(div.psi0)) return "psi0 is not an involution";
  for (size_t c = 0; c < T.rank(); ++c) {
    const GroupElem tc = T.generator(c);
    if (!(div.embed.apply(div.psi0.tau.apply(tc)) == dat.tau.apply(div.embed.apply(tc))))
      return "psi0 degree law fails";
  }

  const Gamma& gm = dat.gamma;
  if (gm.size() == 0) return "gamma is empty";
  if (gm.dual_first.size() != gm.dual_second.size()) return "dual pairs are unbalanced";
  for (const GroupElem& g : gm.flattened())
    if (!G.contains(g)) return "gamma entry outside G";
  if (dat.kind == FormKind::symplectic && !gm.self_dual.empty()) return "symplectic datum with m > 0";
  if (dat.t_seq.size() != gm.self_dual.size()) return "t_seq length differs from m";

  const GroupElem tg0 = dat.tau.apply(dat.g0);
  for (size_t i = 0; i < gm.self_dual.size(); ++i) {
    const GroupElem& ti = dat.t_seq[i];
    if (!T.contains(ti)) return "t_" + std::to_string(i + 1) + " outside T";
    const GroupElem& gi = gm.self_dual[i];
    if (!(div.embed.apply(ti) == G.add(G.add(tg0, dat.tau.apply(gi)), gi)))
      return "t_" + std::to_string(i + 1) + " != tau(g0) + tau(g_i) + g_i";
    if (!(div.psi0.tau.apply(ti) == ti) || !lambda_extend(div.psi0, ti).is_one())
      return "psi0 does not fix X_{t_" + std::to_string(i + 1) + "}";
  }
  for (size_t j = 0; j < gm.dual_first.size(); ++j) {
    const GroupElem want = G.sub(G.neg(dat.tau.apply(gm.dual_first[j])), dat.g0);
    if (!(gm.dual_second[j] == want)) return "g''_" + std::to_string(j + 1) + " != -tau(g'_j) - g0";
  }
  return std::nullopt;
}

bool validate_datum(const InvolutionDatum& dat) { return !datum_problem(dat).has_value(); }

RealizedDivision realize_division(const DivisionData& div) {
  const int64_t M = minimal_ambient(div.psi0);
  RealizedDivision out{realize_division_algebra(div.shape, M), {}};
  out.psi0 = realize_hom_map(out.D, div.psi0);
  return out;
}

RealizedDivision scalar_division(int64_t M) {
  const DivisionData div = trivial_division(FinAbGroup(std::vector<int64_t>{}));
  RealizedDivision out{realize_division_algebra(div.shape, M), {}};
  out.psi0 = realize_hom_map(out.D, div.psi0);
  return out;
}

CycMatrix build_Phi(const InvolutionDatum& dat, const RealizedAlgebra& D) {
  if (auto p = datum_problem(dat)) throw Error("invalid datum: " + *p);
  const size_t m = dat.gamma.self_dual.size(), pairs = dat.gamma.dual_first.size();
  const size_t k = m + 2 * pairs, d = D.dim;
  CycMatrix Phi(k * d, k * d, D.M);
  for (size_t i = 0; i < m; ++i) Phi.set_block(i, i, D.X(dat.t_seq[i]));
  const CycMatrix X0 = D.X(D.T.zero());
  for (size_t j = 0; j < pairs; ++j) {
    Phi.set_block(m + j, m + pairs + j, X0);
    Phi.set_block(m + pairs + j, m + j, dat.kind == FormKind::orthogonal ? X0 : -X0);
  }
  return Phi;
}

// ---------------------------------------------------------------- psi

BlockInvolution::BlockInvolution(CycMatrix Phi, const RealizedDivision& div) : Phi_(std::move(Phi)), div_(div) {
  auto inv = Phi_.inverse();
  if (!inv) throw Error("singular Phi");
  Phi_inv_ = std::move(*inv);
}

CycMatrix BlockInvolution::star(const CycMatrix& X) const {
  const size_t d = div_.D.dim, k = X.rows() / d;
  CycMatrix out(X.rows(), X.cols(), X.ambient());
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      const CycMatrix b = X.block(j, i, d);
      if (!b.is_zero()) out.set_block(i, j, div_.psi0.apply(div_.D, b));
    }
  return out;
}

CycMatrix BlockInvolution::operator()(const CycMatrix& X) const { return Phi_inv_ * star(X) * Phi_; }

BlockInvolution psi_from_phi(const CycMatrix& Phi, const RealizedDivision& div) { return BlockInvolution(Phi, div); }

bool verify_psi(const BlockInvolution& psi, const GradedMatrixAlgebra& A, const GroupMap& tau) {
  const size_t N = A.D.T.cardinality(), k = A.k(), d = A.D.dim;
  const auto Telems = A.D.T.elements();
  std::vector<CycMatrix> img;
  img.reserve(A.cells());
  for (size_t c = 0; c < A.cells(); ++c) img.push_back(psi(A.cell(c)));

  for (size_t c = 0; c < A.cells(); ++c) {
    // involutive
    if (!(psi(img[c]) == A.cell(c))) return false;
    // homogeneous of degree tau(deg)
    if (img[c].is_zero()) return false;
    const GroupElem want = tau.apply(A.cell_degree[c]);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        const CycMatrix b = img[c].block(i, j, d);
        if (b.is_zero()) continue;
        for (size_t t = 0; t < N; ++t)
          if (!A.D.coefficient(b, Telems[t]).is_zero() && !(A.cell_degree[(i * k + j) * N + t] == want)) return false;
      }
  }
  // anti-multiplicative: (e_ij X_t)(e_jl X_u) = c e_il X_{t+u}, zero otherwise
  for (size_t p = 0; p < A.cells(); ++p)
    for (size_t q = 0; q < A.cells(); ++q) {
      const size_t tp = p % N, ip = (p / N) / k, jp = (p / N) % k;
      const size_t tq = q % N, iq = (q / N) / k, jq = (q / N) % k;
      const CycMatrix rhs = img[q] * img[p];
      if (jp != iq) {
        if (!rhs.is_zero()) return false;
        continue;
      }
      const GroupElem w = A.D.T.add(Telems[tp], Telems[tq]);
      const CycMatrix prod = A.D.basis[tp] * A.D.basis[tq];
      const CycNum c = A.D.coefficient(prod, w);
      if (!(A.D.X(w).scaled(c) == prod)) return false;
      const size_t r = (ip * k + jq) * N + A.D.T.index(w);
      if (!(img[r].scaled(c) == rhs)) return false;
    }
  // components of equal dimension
  std::map<GroupElem, size_t> dims;
  for (const GroupElem& g : A.cell_degree) ++dims[g];
  for (const auto& [g, n] : dims) {
    auto it = dims.find(tau.apply(g));
    if (it == dims.end() || it->second != n) return false;
  }
  return true;
}

int form_epsilon(const CycMatrix& Phi, const RealizedDivision& div) {
  const BlockInvolution probe(CycMatrix::identity(Phi.rows(), Phi.ambient()), div);
  const CycMatrix s = probe.star(Phi);
  if (s == Phi) return 1;
  if (s == -Phi) return -1;
  throw Error("form is not \xC2\xB1symmetric under psi0");
}

Sec3Outcome run_datum(const InvolutionDatum& dat) {
  Sec3Outcome out;
  if (auto p = datum_problem(dat)) {
    out.problem = *p;
    return out;
  }
  out.valid = true;
  const RealizedDivision div = realize_division(dat.division);
  const GradedMatrixAlgebra A = build_grading(dat.G, div.D, dat.division.embed, dat.gamma.flattened());
  const CycMatrix Phi = build_Phi(dat, div.D);
  const BlockInvolution psi = psi_from_phi(Phi, div);
  out.psi_ok = verify_psi(psi, A, dat.tau);
  out.epsilon = form_epsilon(Phi, div);
  return out;
}

}  // namespace hinv
