#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hinv/homog.hpp"
#include "hinv/orbits.hpp"

namespace hinv {

inline constexpr int64_t kDefaultClassifyCap = 12;

/// (theta, lambda_a, lambda_b) with lambda exponents in mu_M.
struct PauliTriple {
  size_t orbit = 0;
  int64_t la = 0, lb = 0;

  friend bool operator==(const PauliTriple&, const PauliTriple&) = default;
  friend auto operator<=>(const PauliTriple&, const PauliTriple&) = default;
};

struct InvolutionRecord {
  PauliTriple triple;
  HomMapData data;
  size_t iso_class = 0;    // index into OrbitSummary::iso_reps of its orbit
  size_t equiv_class = 0;  // index into ClassificationReport::equiv_reps
  int epsilon = 0;         // +1 orthogonal, -1 symplectic
  WitnessData iso_witness;    // this ~ its isomorphism representative
  WitnessData equiv_witness;  // this ~ its equivalence representative
};

struct OrbitSummary {
  ModMatrix2 theta;
  size_t involutions = 0;
  std::vector<size_t> iso_reps;  // indices into ClassificationReport::records
};

/// Known classification for Z_n^2, lambda exponents in mu_M.
struct ExpectedClassification {
  std::vector<PauliTriple> equiv_reps;
  std::vector<size_t> iso_counts;  // per orbit
  std::vector<std::vector<PauliTriple>> iso_reps;
  std::vector<std::pair<PauliTriple, PauliTriple>> equivalent_pairs;
};

/// Classification through the prime-power parts of n (n not a prime power).
struct CrtCheck {
  std::vector<int64_t> components;       // prime powers q with n = prod q
  size_t predicted_equivalence = 1;      // product of component counts
  std::vector<size_t> predicted_iso;     // per orbit of n
  bool restrictions_ok = false;          // every involution restricts to valid component data
  bool reassembly_ok = false;            // crt_reassemble(split_by_primes(tau)) == tau
};

struct ClassificationReport {
  int64_t n = 0, M = 0;
  std::vector<InvolutionRecord> records;  // lexicographic in (orbit, la, lb)
  std::vector<OrbitSummary> orbits;
  std::vector<size_t> equiv_reps;  // indices into records
  std::optional<CrtCheck> crt;
  ExpectedClassification expected;
  bool match = false;

  size_t equivalence_classes() const { return equiv_reps.size(); }
  std::optional<size_t> find(const PauliTriple& t) const;
};

ExpectedClassification expected_classification(int64_t n);

/// All theta-homogeneous involutions for theta in O_n, grouped into isomorphism
/// classes per orbit and equivalence classes overall.
ClassificationReport classify_pauli(int64_t n, int64_t cap = kDefaultClassifyCap);

/// +1 / -1 from the realized form matrix of a Pauli involution.
int involution_kind(const HomMapData& m);

/// Restriction of a Z_n^2 involution to each prime component satisfies the
/// power, commutation and involution conditions there.
bool restriction_conditions_hold(const HomMapData& m);

std::string triple_to_string(const PauliTriple& t, int64_t M, int64_t n);

}  // namespace hinv
