#pragma once

#include <optional>
#include <vector>

#include "hinv/abgroup.hpp"
#include "hinv/cocycle.hpp"

namespace hinv {

enum class Mode { anti, automorphism };

/// psi(X_c) = lambda_c X_{tau(c)} on the generators of F^sigma T, with sigma
/// the standard cocycle of `shape`.
struct HomMapData {
  SymplecticShape shape;
  GroupMap tau;
  std::vector<RootOfUnity> lambda;
  Mode mode = Mode::anti;

  const FinAbGroup& group() const { return tau.source(); }
  /// lcm of the shape's default ambient order and the lambda orders.
  int64_t ambient() const;
  std::string to_string() const;
};

/// Builds (tau, lambda_a, lambda_b) on Z_n^2 from a row-major 2x2 tau
/// (column convention) and lambda exponents in mu_M.
HomMapData pauli_map(int64_t n, const std::vector<int64_t>& tau_rows, int64_t M, int64_t la, int64_t lb,
                     Mode mode = Mode::anti);

/// Witness for an isomorphism (phi absent) or an equivalence. chi holds
/// exponents in mu_M over T.index order.
struct WitnessData {
  std::optional<GroupMap> phi;
  int64_t M = 1;
  std::vector<int64_t> chi;

  RootOfUnity chi_at(const FinAbGroup& T, const GroupElem& g) const { return RootOfUnity(M, chi[T.index(g)]); }
};

struct Decision {
  bool holds = false;
  std::optional<WitnessData> witness;
};

/// P_{c,d} mod p^N for a p-group shape; c, d are generator indices.
int64_t compute_P(const SymplecticShape& shape, const GroupMap& tau, size_t c, size_t d);

/// The P_{c,d} congruences for the given mode (determinant test on Z_n^2,
/// componentwise through split_by_primes for mixed primes).
bool congruences_hold(const SymplecticShape& shape, const GroupMap& tau, Mode mode);
/// beta(tau c, tau d) = beta(c, d)^(-1) (anti) or beta(c, d) (automorphism)
/// for all generator pairs, evaluated directly.
bool beta_condition_holds(const SymplecticShape& shape, const GroupMap& tau, Mode mode);
/// lambda_c^l = sigma(tau c, tau c)^(-l(l-1)/2) for every generator c of order l.
bool power_conditions_hold(const HomMapData& m);

bool check_homogeneous_map(const HomMapData& m);

/// lambda_g with psi(X_g) = lambda_g X_{tau(g)}, in mu_{m.ambient()}.
RootOfUnity lambda_extend(const HomMapData& m, const GroupElem& g);

/// Throws "not a homogeneous anti-automorphism" on invalid input.
bool check_involution(const HomMapData& m);

/// tau = tau' and chi(tau c) lambda'_c = chi(c) lambda_c for a character chi.
Decision are_isomorphic(const HomMapData& m, const HomMapData& mp);
bool verify_isomorphism_witness(const HomMapData& m, const HomMapData& mp, const WitnessData& w);

/// Per-shape data reused across equivalence queries: the admissible phi and
/// for each a base solution chi0 of delta(chi) = sigma(phi., phi.) / sigma.
class EquivalenceContext {
 public:
  struct Candidate {
    GroupMap phi;
    std::vector<int64_t> chi0;
  };

  EquivalenceContext(const SymplecticShape& shape, int64_t M);

  const SymplecticShape& shape() const { return shape_; }
  const FinAbGroup& group() const { return T_; }
  int64_t ambient() const { return M_; }
  const std::vector<Candidate>& candidates() const { return cands_; }

 private:
  SymplecticShape shape_;
  FinAbGroup T_;
  int64_t M_;
  std::vector<Candidate> cands_;
};

Decision are_equivalent(const HomMapData& m, const HomMapData& mp);
Decision are_equivalent(const EquivalenceContext& ctx, const HomMapData& m, const HomMapData& mp);
bool verify_equivalence_witness(const HomMapData& m, const HomMapData& mp, const WitnessData& w);

/// w1 : m1 ~ m2 and w2 : m2 ~ m3 give m1 ~ m3.
WitnessData compose_equivalence(const FinAbGroup& T, const WitnessData& w1, const WitnessData& w2);
WitnessData invert_equivalence(const FinAbGroup& T, const WitnessData& w);
WitnessData compose_isomorphism(const WitnessData& w1, const WitnessData& w2);
WitnessData invert_isomorphism(const WitnessData& w);
/// The equivalence (phi = id) induced by an isomorphism witness.
WitnessData isomorphism_as_equivalence(const FinAbGroup& T, const WitnessData& w);

enum class Variant { preserving, inverting };

/// A valid anti-automorphism with tau = id (preserving) or tau = -id
/// (inverting), if one exists with lambda in mu_M.
std::optional<HomMapData> find_fixed_or_inverting(const SymplecticShape& shape, Variant v, int64_t M = 0);
bool exists_fixed_or_inverting(const SymplecticShape& shape, Variant v, int64_t M = 0);

}  // namespace hinv
