#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hinv/cyclotomic.hpp"

namespace hinv {

/// Residue vector of an element of a finite abelian group, one entry per
/// cyclic factor.
struct GroupElem {
  std::vector<int64_t> residues;

  size_t size() const { return residues.size(); }
  int64_t operator[](size_t j) const { return residues[j]; }
  int64_t& operator[](size_t j) { return residues[j]; }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;

  std::string to_string() const;
};

/// Z_{l_1} x ... x Z_{l_k}, written additively.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int64_t> orders);

  /// Parses descriptors like "Z4^2" or "Z2^2xZ3^2". "1" or "" gives the
  /// trivial group.
  static FinAbGroup parse(std::string_view descriptor);
  std::string descriptor() const;

  size_t rank() const { return orders_.size(); }
  const std::vector<int64_t>& orders() const { return orders_; }
  int64_t order(size_t j) const { return orders_[j]; }
  size_t cardinality() const { return card_; }
  /// True when every factor has the same order (T = Z_n^k).
  bool is_homogeneous() const;
  /// Exponent of the group (lcm of the factor orders).
  int64_t exponent() const;

  GroupElem zero() const;
  GroupElem generator(size_t j) const;
  GroupElem make(std::vector<int64_t> raw) const;
  bool contains(const GroupElem& g) const;

  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem scale(int64_t k, const GroupElem& a) const;

  /// Mixed-radix index, first coordinate most significant.
  size_t index(const GroupElem& g) const;
  GroupElem element(size_t idx) const;
  std::vector<GroupElem> elements() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<int64_t> orders_;
  size_t card_ = 1;
};

int64_t element_order(const FinAbGroup& T, const GroupElem& g);

/// Homomorphism between finite abelian groups given on generators:
/// column j holds the coordinates of the image of generator j.
class GroupMap {
 public:
  GroupMap() = default;
  /// `columns[j]` is the image of source generator j; entries are reduced
  /// modulo the target orders.
  GroupMap(FinAbGroup source, FinAbGroup target, std::vector<std::vector<int64_t>> columns);
  /// Builds from a row-major matrix (rows = target coordinates).
  static GroupMap from_rows(FinAbGroup source, FinAbGroup target, const std::vector<int64_t>& row_major);
  static GroupMap identity(const FinAbGroup& T);
  static GroupMap negation(const FinAbGroup& T);

  const FinAbGroup& source() const { return src_; }
  const FinAbGroup& target() const { return dst_; }
  int64_t entry(size_t row, size_t col) const { return cols_[col][row]; }
  const std::vector<std::vector<int64_t>>& columns() const { return cols_; }
  std::vector<int64_t> row_major() const;
  bool is_square() const { return src_ == dst_; }

  GroupElem apply(const GroupElem& g) const;
  GroupElem image_of_generator(size_t j) const;
  /// this o other (apply other first).
  GroupMap compose(const GroupMap& other) const;
  /// Images of generators have order dividing the generator orders.
  bool is_well_defined() const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.cols_ == b.cols_;
  }
  friend auto operator<=>(const GroupMap& a, const GroupMap& b) { return a.row_major() <=> b.row_major(); }

  std::string to_string() const;

 private:
  FinAbGroup src_, dst_;
  std::vector<std::vector<int64_t>> cols_;
};

/// Determinant of the integer matrix of a square map, reduced mod m.
int64_t det_mod(const GroupMap& A, int64_t m);
int64_t trace_mod(const GroupMap& A, int64_t m);

bool is_automorphism(const FinAbGroup& T, const GroupMap& A);
/// Inverse of an automorphism (brute force over the group).
GroupMap inverse_automorphism(const GroupMap& A);

struct AutFilter {
  std::optional<int64_t> det;    // mod n, homogeneous T only
  std::optional<int64_t> trace;  // mod n, homogeneous T only
};

inline constexpr size_t kDefaultEnumerationCap = 4096;

/// Every automorphism passing the filter, sorted by row-major entries.
std::vector<GroupMap> enumerate_automorphisms(const FinAbGroup& T, const AutFilter& filter = {},
                                              size_t cap = kDefaultEnumerationCap);

/// A character, given by its values on the generators.
struct Character {
  std::vector<RootOfUnity> on_generators;

  RootOfUnity operator()(const GroupElem& g) const;
  /// Value written in mu_M; M must be a multiple of every generator value order.
  int64_t exp_in(const GroupElem& g, int64_t M) const;
};

/// All |T| characters, lexicographic in the exponent of each generator value.
std::vector<Character> characters(const FinAbGroup& T);

/// One p-primary part of T together with the restricted map.
struct PrimeComponent {
  int64_t prime = 0;
  FinAbGroup group;
  GroupMap map;
  /// Which coordinates of T contribute to this component.
  std::vector<size_t> coordinates;
};

std::vector<PrimeComponent> split_by_primes(const FinAbGroup& T, const GroupMap& tau);
/// Inverse of split_by_primes: CRT reassembly of the component maps.
GroupMap crt_reassemble(const FinAbGroup& T, const std::vector<PrimeComponent>& parts);
/// Embedding of the p-part of T: component coordinates -> element of T.
GroupElem embed_component(const FinAbGroup& T, const PrimeComponent& part, const GroupElem& x);

std::vector<std::pair<int64_t, int>> factorize(int64_t n);

}  // namespace hinv
