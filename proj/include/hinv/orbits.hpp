#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hinv/abgroup.hpp"

namespace hinv {

/// 2x2 matrix over Z_n, row-major.
struct ModMatrix2 {
  int64_t n = 1;
  std::array<int64_t, 4> e{0, 0, 0, 0};

  static ModMatrix2 make(int64_t n, int64_t a, int64_t b, int64_t c, int64_t d);
  static ModMatrix2 identity(int64_t n) { return make(n, 1, 0, 0, 1); }

  int64_t det() const;
  int64_t trace() const;
  /// Inverse of an SL_2 (or unit-determinant) matrix.
  ModMatrix2 inverse() const;
  ModMatrix2 operator*(const ModMatrix2& o) const;
  /// Reduction to a divisor of n.
  ModMatrix2 reduce(int64_t m) const;
  /// As a map of Z_n^2 (columns are generator images).
  GroupMap to_group_map() const;
  static ModMatrix2 from_group_map(const GroupMap& g);

  friend bool operator==(const ModMatrix2&, const ModMatrix2&) = default;
  friend auto operator<=>(const ModMatrix2&, const ModMatrix2&) = default;
  std::string to_string() const;
};

/// theta1; theta2 when n is even; theta3 = [[1,2],[n/2,-1]] when 4 | n.
std::vector<ModMatrix2> canonical_forms(int64_t n);
/// "theta1", "theta2", "theta3".
std::string canonical_label(size_t index);

struct OrbitResult {
  ModMatrix2 theta;
  ModMatrix2 P;
  size_t index = 0;
  /// Matrices visited by the search.
  size_t visited = 0;
};

/// BFS over conjugation by the two elementary transvections until a
/// canonical form is reached; P^{-1} A P = theta and det P = 1.
OrbitResult orbit_reduce(const ModMatrix2& A);
bool certify(const ModMatrix2& A, const OrbitResult& r);

bool verify_pairwise_nonconjugate(int64_t n);

struct TableCheck {
  std::string row;
  ModMatrix2 tau;
  ModMatrix2 P;
  ModMatrix2 target;
  bool ok = false;
};

/// Every conjugator-table row applicable at n = 2^i, then the second-case
/// closed forms for (q1, q2) in {0,1}^2.
std::vector<TableCheck> conjugator_table_checks(int i);
bool verify_conjugator_table(int64_t n);

/// theta1 ~ [[0,1],[1,0]] ~ [[1,2],[0,-1]] in SL_2(Z_q), q odd; checked
/// with certified witnesses.
bool verify_odd_similarities(int64_t q);

struct LocusScan {
  int64_t n = 0;
  size_t locus_size = 0;
  size_t certified = 0;
  std::set<size_t> forms_reached;
  bool ok() const { return locus_size == certified; }
};

/// orbit_reduce on every matrix mod n with det -1 and trace 0.
LocusScan scan_locus(int64_t n);

}  // namespace hinv
