#pragma once

#include <optional>
#include <vector>

#include "hinv/abgroup.hpp"
#include "hinv/cyclotomic.hpp"

namespace hinv {

/// T = Z_{l_1}^2 x ... x Z_{l_r}^2 with coordinates ordered a_1, b_1, a_2, b_2, ...
struct SymplecticShape {
  std::vector<int64_t> pair_orders;

  static SymplecticShape pauli(int64_t n) { return SymplecticShape{{n}}; }
  /// Reads the pairing off a group whose orders come in equal consecutive pairs.
  static SymplecticShape from_group(const FinAbGroup& T);

  size_t pairs() const { return pair_orders.size(); }
  FinAbGroup group() const;
  /// lcm of the pair orders.
  int64_t exponent() const;
  /// 2 L^2 for L = exponent(); every scalar the deciders produce lives here.
  int64_t default_ambient() const;
  /// Matrix size of the realized algebra, sqrt|T|.
  int64_t dimension() const;

  friend bool operator==(const SymplecticShape&, const SymplecticShape&) = default;
};

/// prod_k eps_k^(-j_k i'_k) for u = (i_1, j_1, ...), v = (i'_1, j'_1, ...),
/// with eps_k = zeta_{l_k}. Written in mu_L, L the shape exponent.
RootOfUnity standard_sigma(const SymplecticShape& shape, const GroupElem& u, const GroupElem& v);

/// A 2-cocycle with values in mu_M, either the standard one or an explicit table.
class FactorSet {
 public:
  static FactorSet standard(const SymplecticShape& shape, int64_t M = 0);
  /// Row-major |T| x |T| table of exponents in mu_M.
  static FactorSet table(FinAbGroup T, int64_t M, std::vector<int64_t> exps);

  const FinAbGroup& group() const { return T_; }
  int64_t ambient() const { return M_; }
  bool is_standard() const { return shape_.has_value(); }
  const std::optional<SymplecticShape>& shape() const { return shape_; }

  /// Exponent of sigma(u, v) in mu_M.
  int64_t exp(const GroupElem& u, const GroupElem& v) const;
  RootOfUnity operator()(const GroupElem& u, const GroupElem& v) const { return RootOfUnity(M_, exp(u, v)); }

  /// Table form over T.index order.
  std::vector<int64_t> table_exps() const;
  /// Copy as a table with the (u, v) entry multiplied by r.
  FactorSet perturbed(const GroupElem& u, const GroupElem& v, const RootOfUnity& r) const;

 private:
  FinAbGroup T_;
  int64_t M_ = 1;
  std::optional<SymplecticShape> shape_;
  std::vector<int64_t> table_;
};

/// Alternating bicharacter stored as a table of exponents in mu_M.
class Bicharacter {
 public:
  Bicharacter(FinAbGroup T, int64_t M, std::vector<int64_t> exps);
  static Bicharacter of(const FactorSet& sigma);
  static Bicharacter trivial(const FinAbGroup& T);

  const FinAbGroup& group() const { return T_; }
  int64_t ambient() const { return M_; }
  RootOfUnity operator()(const GroupElem& u, const GroupElem& v) const;
  int64_t exp(const GroupElem& u, const GroupElem& v) const { return table_[T_.index(u) * T_.cardinality() + T_.index(v)]; }

  bool is_bimultiplicative() const;
  bool is_alternating() const;

 private:
  FinAbGroup T_;
  int64_t M_;
  std::vector<int64_t> table_;
};

/// sigma(u, v) / sigma(v, u).
RootOfUnity bicharacter_beta(const FactorSet& sigma, const GroupElem& u, const GroupElem& v);

/// Exhaustive check of sigma(u,v) sigma(u+v,w) = sigma(u,v+w) sigma(v,w).
bool is_cocycle(const FactorSet& sigma);

/// delta(lambda)(u, v) = lambda(u) lambda(v) / lambda(u+v); lambda given as
/// exponents in mu_M over T.index order.
FactorSet coboundary(const FinAbGroup& T, int64_t M, const std::vector<int64_t>& lambda_exps);

/// c X_g, a scalar multiple of a basis element of the twisted group algebra.
struct Term {
  GroupElem g;
  RootOfUnity c;
};

/// (c1 X_u)(c2 X_v) = c1 c2 sigma(u, v) X_{u+v}.
Term twisted_product(const FactorSet& sigma, const Term& x, const Term& y);

/// No t != 0 with beta(u, t) = 1 for every u.
bool is_nondegenerate(const Bicharacter& beta);

}  // namespace hinv
