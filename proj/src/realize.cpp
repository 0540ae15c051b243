#include "hinv/realize.hpp"

#include <deque>
#include <sstream>

namespace hinv {

CycMatrix::CycMatrix(size_t rows, size_t cols, int64_t M) : rows_(rows), cols_(cols), M_(M), a_(rows * cols, CycNum(M)) {}

CycMatrix CycMatrix::identity(size_t n, int64_t M) {
  CycMatrix I(n, n, M);
  for (size_t i = 0; i < n; ++i) I.at(i, i) = CycNum::from_int(M, 1);
  return I;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  if (M_ != o.M_) throw Error("order mismatch");
  CycMatrix out(rows_, o.cols_, M_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const CycNum& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const CycNum& y = o(k, j);
        if (y.is_zero()) continue;
        out.at(i, j) += x * y;
      }
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
  CycMatrix out = *this;
  for (auto& x : out.a_)
    if (!x.is_zero()) x *= c;
  return out;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(cols_, rows_, M_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix out(rows_ * o.rows_, cols_ * o.cols_, M_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const CycNum& x = (*this)(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < o.rows_; ++k)
        for (size_t l = 0; l < o.cols_; ++l)
          if (!o(k, l).is_zero()) out.at(i * o.rows_ + k, j * o.cols_ + l) = x * o(k, l);
    }
  return out;
}

CycMatrix CycMatrix::block(size_t bi, size_t bj, size_t d) const {
  CycMatrix out(d, d, M_);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) out.at(i, j) = (*this)(bi * d + i, bj * d + j);
  return out;
}

void CycMatrix::set_block(size_t bi, size_t bj, const CycMatrix& b) {
  const size_t d = b.rows();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) at(bi * d + i, bj * d + j) = b(i, j);
}

std::optional<CycMatrix> CycMatrix::inverse() const {
  if (rows_ != cols_) throw Error("matrix dimension mismatch");
  const size_t n = rows_;
  CycMatrix a = *this, inv = identity(n, M_);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const CycNum p = a(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      if (!a(col, j).is_zero()) a.at(col, j) *= p;
      if (!inv(col, j).is_zero()) inv.at(col, j) *= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CycNum f = a(r, col);
      for (size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a.at(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv.at(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycMatrix::is_monomial() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_count(cols_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    int row_count = 0;
    for (size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.M_ == b.M_ && a.a_ == b.a_;
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

CycNum embed_reduced(int64_t M, const RootOfUnity& r) {
  const __int128 num = static_cast<__int128>(r.exp()) * M;
  if (num % r.order() != 0) throw Error("incompatible orders");
  return CycNum::zeta_power(M, static_cast<int64_t>(num / r.order()));
}

std::pair<CycMatrix, CycMatrix> pauli_generators(int64_t l, const RootOfUnity& eps, int64_t M) {
  if (l < 1) throw Error("pauli size must be positive");
  if (eps.multiplicative_order() != l) throw Error("eps must have order l");
  const size_t d = static_cast<size_t>(l);
  CycMatrix X(d, d, M), Y(d, d, M);
  for (size_t k = 0; k < d; ++k) {
    X.at(k, k) = embed_reduced(M, eps.pow(l - 1 - static_cast<int64_t>(k)));
    Y.at(k, (k + 1) % d) = CycNum::from_int(M, 1);
  }
  return {X, Y};
}

// ---------------------------------------------------------------- algebra

CycNum RealizedAlgebra::coefficient(const CycMatrix& A, const GroupElem& t) const {
  const GroupElem mt = T.neg(t);
  const CycMatrix& Xm = X(mt);
  // X_t^{-1} = sigma(t, -t)^{-1} X_{-t}
  CycNum tr(M);
  for (size_t i = 0; i < dim; ++i)
    for (size_t k = 0; k < dim; ++k) {
      if (Xm(i, k).is_zero() || A(k, i).is_zero()) continue;
      tr += Xm(i, k) * A(k, i);
    }
  if (tr.is_zero()) return tr;
  const CycNum scale = embed_reduced(M, sigma(t, mt)) * CycNum::from_int(M, static_cast<long>(dim));
  return tr / scale;
}

std::vector<CycNum> RealizedAlgebra::decompose(const CycMatrix& A) const {
  std::vector<CycNum> out;
  out.reserve(T.cardinality());
  for (const GroupElem& t : T.elements()) out.push_back(coefficient(A, t));
  return out;
}

std::optional<std::pair<GroupElem, CycNum>> RealizedAlgebra::as_homogeneous(const CycMatrix& A) const {
  std::optional<std::pair<GroupElem, CycNum>> found;
  for (const GroupElem& t : T.elements()) {
    CycNum c = coefficient(A, t);
    if (c.is_zero()) continue;
    if (found) return std::nullopt;
    found.emplace(t, c);
  }
  if (!found || !(X(found->first).scaled(found->second) == A)) return std::nullopt;
  return found;
}

RealizedAlgebra realize_division_algebra(const SymplecticShape& shape, int64_t M, bool products) {
  RealizedAlgebra R;
  R.shape = shape;
  R.T = shape.group();
  R.M = M == 0 ? shape.exponent() : M;
  if (R.M % shape.exponent() != 0) throw Error("incompatible orders");
  R.sigma = FactorSet::standard(shape, R.M);
  R.dim = static_cast<size_t>(shape.dimension());

  std::vector<std::pair<CycMatrix, CycMatrix>> gens;
  for (int64_t l : shape.pair_orders) gens.push_back(pauli_generators(l, RootOfUnity(l, 1), R.M));

  for (const GroupElem& g : R.T.elements()) {
    CycMatrix acc = CycMatrix::identity(1, R.M);
    for (size_t k = 0; k < shape.pairs(); ++k) {
      const size_t d = static_cast<size_t>(shape.pair_orders[k]);
      CycMatrix f = CycMatrix::identity(d, R.M);
      for (int64_t s = 0; s < g[2 * k]; ++s) f = f * gens[k].first;
      for (int64_t s = 0; s < g[2 * k + 1]; ++s) f = f * gens[k].second;
      acc = acc.kron(f);
    }
    R.basis.push_back(std::move(acc));
  }
  if (!products) return R;
  const auto elems = R.T.elements();
  R.product.reserve(elems.size() * elems.size());
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      const GroupElem w = R.T.add(elems[i], elems[j]);
      const CycMatrix prod = R.basis[i] * R.basis[j];
      const CycNum c = R.coefficient(prod, w);
      if (!(R.X(w).scaled(c) == prod)) throw Error("basis product is not homogeneous");
      R.product.push_back(c);
    }
  return R;
}

// ---------------------------------------------------------------- maps

CycMatrix RealizedMap::apply(const RealizedAlgebra& R, const CycMatrix& A) const {
  CycMatrix out(R.dim, R.dim, R.M);
  const auto coeffs_of_A = R.decompose(A);
  for (size_t i = 0; i < coeffs_of_A.size(); ++i)
    if (!coeffs_of_A[i].is_zero()) out = out + images[i].scaled(coeffs_of_A[i]);
  return out;
}

int64_t minimal_ambient(const HomMapData& m) {
  int64_t M = m.shape.exponent();
  for (const auto& l : m.lambda) M = lcm64(M, l.multiplicative_order());
  return M;
}

RealizedMap realize_hom_map(const RealizedAlgebra& R, const HomMapData& m, bool checked) {
  if (!(m.shape == R.shape)) throw Error("shape mismatch");
  if (checked && !check_homogeneous_map(m)) throw Error("not a homogeneous map");
  RealizedMap f;
  f.tau = m.tau;
  f.mode = m.mode;
  for (const GroupElem& g : R.T.elements()) {
    RootOfUnity lg = lambda_extend(m, g);
    f.images.push_back(R.X(m.tau.apply(g)).scaled(embed_reduced(R.M, lg)));
    f.coeffs.push_back(lg);
  }
  return f;
}

bool verify_map_properties(const RealizedAlgebra& R, const RealizedMap& f, const GroupMap& tau, Mode mode) {
  const FinAbGroup& T = R.T;
  if (!is_automorphism(T, tau)) return false;
  const auto elems = T.elements();
  // (b) components: f(X_g) is a nonzero multiple of X_{tau g}.
  for (size_t i = 0; i < elems.size(); ++i) {
    const GroupElem tg = tau.apply(elems[i]);
    const CycNum c = R.coefficient(f.images[i], tg);
    if (c.is_zero() || !(R.X(tg).scaled(c) == f.images[i])) return false;
  }
  // (a) f(X_u X_v) against the products of the images.
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      const GroupElem w = T.add(elems[i], elems[j]);
      CycNum c(R.M);
      if (!R.product.empty()) {
        c = R.product[i * elems.size() + j];
      } else {
        const CycMatrix prod = R.basis[i] * R.basis[j];
        c = R.coefficient(prod, w);
        if (!(R.X(w).scaled(c) == prod)) return false;
      }
      const CycMatrix lhs = f.images[T.index(w)].scaled(c);
      const CycMatrix rhs = mode == Mode::anti ? f.images[j] * f.images[i] : f.images[i] * f.images[j];
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool realized_square_is_identity(const RealizedAlgebra& R, const RealizedMap& f) {
  for (size_t i = 0; i < R.basis.size(); ++i)
    if (!(f.apply(R, f.images[i]) == R.basis[i])) return false;
  return true;
}

CycMatrix find_form_matrix(const RealizedAlgebra& R, const RealizedMap& f) {
  const size_t d = R.dim;
  const int64_t M = R.M;
  // Unknowns Phi_{ij}, index i * d + j. With monomial matrices every entry of
  // Phi B = X^t Phi reads  Phi_{i,r(j)} B_{r(j),j} = X_{k(i),i} Phi_{k(i),j}.
  struct Edge {
    size_t u, v;
    CycNum ratio;  // Phi_v = ratio * Phi_u
  };
  std::vector<std::vector<Edge>> adj(d * d);
  std::vector<char> forced_zero(d * d, 0);
  for (size_t c = 0; c < R.T.rank(); ++c) {
    const size_t gi = R.T.index(R.T.generator(c));
    const CycMatrix& B = f.images[gi];
    const CycMatrix Xt = R.basis[gi].transpose();
    if (!B.is_monomial() || !Xt.is_monomial()) throw Error("form matrix needs monomial images");
    std::vector<size_t> rB(d), kX(d);
    for (size_t j = 0; j < d; ++j)
      for (size_t r = 0; r < d; ++r)
        if (!B(r, j).is_zero()) rB[j] = r;
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k)
        if (!Xt(i, k).is_zero()) kX[i] = k;
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        const size_t u = i * d + rB[j], v = kX[i] * d + j;
        const CycNum b = B(rB[j], j), x = Xt(i, kX[i]);
        if (u == v) {
          if (!(b == x)) forced_zero[u] = 1;
          continue;
        }
        adj[u].push_back(Edge{u, v, b / x});
        adj[v].push_back(Edge{v, u, x / b});
      }
  }
  // Propagate a value through each connected component; a component whose
  // cycles disagree must vanish.
  std::vector<std::optional<CycNum>> val(d * d);
  std::vector<int> comp(d * d, -1);
  std::vector<char> comp_ok;
  for (size_t s = 0; s < d * d; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(comp_ok.size());
    comp_ok.push_back(1);
    std::deque<size_t> q{s};
    comp[s] = id;
    val[s] = CycNum::from_int(M, 1);
    while (!q.empty()) {
      const size_t u = q.front();
      q.pop_front();
      if (forced_zero[u]) comp_ok[id] = 0;
      for (const Edge& e : adj[u]) {
        const CycNum want = *val[u] * e.ratio;
        if (comp[e.v] < 0) {
          comp[e.v] = id;
          val[e.v] = want;
          q.push_back(e.v);
        } else if (!(*val[e.v] == want)) {
          comp_ok[id] = 0;
        }
      }
    }
  }
  int chosen = -1;
  for (size_t id = 0; id < comp_ok.size(); ++id)
    if (comp_ok[id]) {
      if (chosen >= 0) throw Error("form matrix is not unique");
      chosen = static_cast<int>(id);
    }
  if (chosen < 0) throw Error("no form matrix");
  CycMatrix Phi(d, d, M);
  for (size_t u = 0; u < d * d; ++u)
    if (comp[u] == chosen) Phi.at(u / d, u % d) = *val[u];
  return Phi;
}

}  // namespace hinv
