#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hinv/cocycle.hpp"
#include "hinv/cyclotomic.hpp"
#include "hinv/homog.hpp"

namespace hinv {

/// Dense matrix over Q(zeta_M). Products skip zero entries, which keeps the
/// monomial matrices of the realizations cheap.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(size_t rows, size_t cols, int64_t M);
  static CycMatrix identity(size_t n, int64_t M);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int64_t ambient() const { return M_; }

  const CycNum& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  CycNum& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator-() const;
  CycMatrix scaled(const CycNum& c) const;
  CycMatrix transpose() const;
  CycMatrix kron(const CycMatrix& o) const;
  CycMatrix block(size_t bi, size_t bj, size_t d) const;
  void set_block(size_t bi, size_t bj, const CycMatrix& b);
  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<CycMatrix> inverse() const;
  bool is_zero() const;
  /// Exactly one nonzero entry in every row and every column.
  bool is_monomial() const;

  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  int64_t M_ = 1;
  std::vector<CycNum> a_;
};

/// zeta_M^(M exp / order); r need only have multiplicative order dividing M.
CycNum embed_reduced(int64_t M, const RootOfUnity& r);

/// X = diag(eps^{l-1}, ..., eps, 1) and the cyclic shift Y, over Q(zeta_M).
std::pair<CycMatrix, CycMatrix> pauli_generators(int64_t l, const RootOfUnity& eps, int64_t M);

/// F^sigma T as matrices: X_g = prod X_{a_k}^{alpha_k} X_{b_k}^{beta_k}.
struct RealizedAlgebra {
  SymplecticShape shape;
  FinAbGroup T;
  int64_t M = 1;
  size_t dim = 1;
  FactorSet sigma;
  std::vector<CycMatrix> basis;
  /// X_i X_j = product[i |T| + j] X_{i+j}, checked entrywise; empty unless
  /// requested at construction.
  std::vector<CycNum> product;

  const CycMatrix& X(const GroupElem& g) const { return basis[T.index(g)]; }
  /// Coefficient of X_t in A, tr(X_t^{-1} A) / dim.
  CycNum coefficient(const CycMatrix& A, const GroupElem& t) const;
  std::vector<CycNum> decompose(const CycMatrix& A) const;
  /// (t, c) with A = c X_t, if A is homogeneous and nonzero.
  std::optional<std::pair<GroupElem, CycNum>> as_homogeneous(const CycMatrix& A) const;
};

/// M = 0 picks the shape exponent.
/// `products` fills the product table, worth it when many maps are verified.
RealizedAlgebra realize_division_algebra(const SymplecticShape& shape, int64_t M = 0, bool products = false);

/// Linear map given on the X-basis.
struct RealizedMap {
  GroupMap tau;
  Mode mode = Mode::anti;
  std::vector<RootOfUnity> coeffs;
  std::vector<CycMatrix> images;

  CycMatrix apply(const RealizedAlgebra& R, const CycMatrix& A) const;
};

/// lcm of the shape exponent and the lambda orders: every lambda_g lives there.
int64_t minimal_ambient(const HomMapData& m);

/// X_g -> lambda_g X_{tau g}. With `checked`, rejects data failing
/// check_homogeneous_map; unchecked realization is for the soundness oracle.
RealizedMap realize_hom_map(const RealizedAlgebra& R, const HomMapData& m, bool checked = true);

/// (Anti-)multiplicativity on all basis pairs and psi(A_g) = A_{tau g}.
bool verify_map_properties(const RealizedAlgebra& R, const RealizedMap& f, const GroupMap& tau, Mode mode);
/// f(f(X_g)) = X_g for every g.
bool realized_square_is_identity(const RealizedAlgebra& R, const RealizedMap& f);

/// Phi with Phi f(X_c) = X_c^t Phi on the generators, i.e. f(X) = Phi^{-1} X^t Phi.
CycMatrix find_form_matrix(const RealizedAlgebra& R, const RealizedMap& f);

}  // namespace hinv
