#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hinv/abgroup.hpp"
#include "hinv/homog.hpp"
#include "hinv/realize.hpp"

namespace hinv {

enum class FormKind { orthogonal, symplectic };
std::string kind_name(FormKind k);

/// Degrees of a homogeneous D-basis of V: m self-dual vectors, then the
/// first and second halves of the dual pairs.
struct Gamma {
  std::vector<GroupElem> self_dual;
  std::vector<GroupElem> dual_first;
  std::vector<GroupElem> dual_second;

  size_t size() const { return self_dual.size() + dual_first.size() + dual_second.size(); }
  std::vector<GroupElem> flattened() const;
};

/// The graded-division algebra D with its involution psi0 and the embedding
/// of its support into G. An empty shape means D = F.
struct DivisionData {
  SymplecticShape shape;
  HomMapData psi0;
  GroupMap embed;
};

DivisionData trivial_division(const FinAbGroup& G);

/// Grading of M_k(D) by deg(e_ij (x) X_t) = g_i + embed(t) - g_j.
struct GradedMatrixAlgebra {
  FinAbGroup G;
  RealizedAlgebra D;
  GroupMap embed;
  std::vector<GroupElem> gamma;
  std::vector<GroupElem> cell_degree;  // index (i * k + j) * |T| + t

  size_t k() const { return gamma.size(); }
  size_t cells() const { return cell_degree.size(); }
  size_t dim() const { return k() * D.dim; }
  CycMatrix cell(size_t idx) const;
  std::set<GroupElem> support() const;
};

GradedMatrixAlgebra build_grading(const FinAbGroup& G, const RealizedAlgebra& D, const GroupMap& embed,
                                  const std::vector<GroupElem>& gamma);

struct InvolutionDatum {
  FinAbGroup G;
  GroupMap tau;
  GroupElem g0;
  DivisionData division;
  Gamma gamma;
  /// Elements of T, one per self-dual vector.
  std::vector<GroupElem> t_seq;
  FormKind kind = FormKind::orthogonal;
};

/// Reason for the first failed condition, or nullopt when the datum is valid.
std::optional<std::string> datum_problem(const InvolutionDatum& dat);
bool validate_datum(const InvolutionDatum& dat);

/// The realized D and psi0 for a datum.
struct RealizedDivision {
  RealizedAlgebra D;
  RealizedMap psi0;
};
RealizedDivision realize_division(const DivisionData& div);
/// D = F over Q(zeta_M), psi0 the identity.
RealizedDivision scalar_division(int64_t M);

CycMatrix build_Phi(const InvolutionDatum& dat, const RealizedAlgebra& D);

/// X -> Phi^{-1} X* Phi, X* the block transpose with psi0 applied to blocks.
class BlockInvolution {
 public:
  BlockInvolution(CycMatrix Phi, const RealizedDivision& div);
  CycMatrix star(const CycMatrix& X) const;
  CycMatrix operator()(const CycMatrix& X) const;
  const CycMatrix& Phi() const { return Phi_; }

 private:
  CycMatrix Phi_, Phi_inv_;
  RealizedDivision div_;
};

BlockInvolution psi_from_phi(const CycMatrix& Phi, const RealizedDivision& div);

/// Involutive, anti-multiplicative on all cell pairs, and psi(R_g) = R_{tau g}.
bool verify_psi(const BlockInvolution& psi, const GradedMatrixAlgebra& A, const GroupMap& tau);

/// +1 when Phi* = Phi, -1 when Phi* = -Phi; throws otherwise.
int form_epsilon(const CycMatrix& Phi, const RealizedDivision& div);

struct Sec3Outcome {
  bool valid = false;
  std::string problem;
  bool psi_ok = false;
  int epsilon = 0;
};

/// validate, build Phi and psi, verify, compute epsilon.
Sec3Outcome run_datum(const InvolutionDatum& dat);

}  // namespace hinv
