#include "hinv/cocycle.hpp"

namespace hinv {

SymplecticShape SymplecticShape::from_group(const FinAbGroup& T) {
  if (T.rank() % 2 != 0) throw Error("shape mismatch: odd number of generators");
  SymplecticShape s;
  for (size_t k = 0; k < T.rank(); k += 2) {
    if (T.order(k) != T.order(k + 1)) throw Error("shape mismatch: generators do not pair up");
    s.pair_orders.push_back(T.order(k));
  }
  return s;
}

FinAbGroup SymplecticShape::group() const {
  std::vector<int64_t> orders;
  for (int64_t l : pair_orders) {
    orders.push_back(l);
    orders.push_back(l);
  }
  return FinAbGroup(orders);
}

int64_t SymplecticShape::exponent() const {
  int64_t L = 1;
  for (int64_t l : pair_orders) L = lcm64(L, l);
  return L;
}

int64_t SymplecticShape::default_ambient() const {
  int64_t L = exponent();
  return 2 * L * L;
}

int64_t SymplecticShape::dimension() const {
  int64_t d = 1;
  for (int64_t l : pair_orders) d *= l;
  return d;
}

namespace {

void check_shape(const SymplecticShape& shape, const GroupElem& g) {
  if (g.size() != 2 * shape.pairs()) throw Error("shape mismatch");
}

// Exponent of the standard cocycle in mu_M (M a multiple of every pair order).
int64_t standard_exp(const SymplecticShape& shape, int64_t M, const GroupElem& u, const GroupElem& v) {
  int64_t e = 0;
  for (size_t k = 0; k < shape.pairs(); ++k) {
    const int64_t l = shape.pair_orders[k];
    int64_t jk = u[2 * k + 1] % l, ik = v[2 * k] % l;
    e -= (jk * ik % l) * (M / l);
  }
  return mod64(e, M);
}

}  // namespace

RootOfUnity standard_sigma(const SymplecticShape& shape, const GroupElem& u, const GroupElem& v) {
  check_shape(shape, u);
  check_shape(shape, v);
  const int64_t L = shape.exponent();
  return RootOfUnity(L, standard_exp(shape, L, u, v));
}

// ---------------------------------------------------------------- FactorSet

FactorSet FactorSet::standard(const SymplecticShape& shape, int64_t M) {
  FactorSet s;
  s.T_ = shape.group();
  s.M_ = M == 0 ? shape.default_ambient() : M;
  if (s.M_ % shape.exponent() != 0) throw Error("incompatible orders");
  s.shape_ = shape;
  return s;
}

FactorSet FactorSet::table(FinAbGroup T, int64_t M, std::vector<int64_t> exps) {
  if (exps.size() != T.cardinality() * T.cardinality()) throw Error("factor-set table has the wrong size");
  FactorSet s;
  s.T_ = std::move(T);
  s.M_ = M;
  for (auto& e : exps) e = mod64(e, M);
  s.table_ = std::move(exps);
  return s;
}

int64_t FactorSet::exp(const GroupElem& u, const GroupElem& v) const {
  if (shape_) return standard_exp(*shape_, M_, u, v);
  return table_[T_.index(u) * T_.cardinality() + T_.index(v)];
}

std::vector<int64_t> FactorSet::table_exps() const {
  if (!shape_) return table_;
  const size_t N = T_.cardinality();
  std::vector<int64_t> out(N * N);
  const auto elems = T_.elements();
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) out[i * N + j] = exp(elems[i], elems[j]);
  return out;
}

FactorSet FactorSet::perturbed(const GroupElem& u, const GroupElem& v, const RootOfUnity& r) const {
  const int64_t M = lcm64(M_, r.order());
  std::vector<int64_t> t = table_exps();
  for (auto& e : t) e *= M / M_;
  t[T_.index(u) * T_.cardinality() + T_.index(v)] += r.lift(M).exp();
  return table(T_, M, std::move(t));
}

// ---------------------------------------------------------------- Bicharacter

Bicharacter::Bicharacter(FinAbGroup T, int64_t M, std::vector<int64_t> exps)
    : T_(std::move(T)), M_(M), table_(std::move(exps)) {
  if (table_.size() != T_.cardinality() * T_.cardinality()) throw Error("bicharacter table has the wrong size");
  for (auto& e : table_) e = mod64(e, M_);
}

Bicharacter Bicharacter::of(const FactorSet& sigma) {
  const FinAbGroup& T = sigma.group();
  const size_t N = T.cardinality();
  const auto elems = T.elements();
  std::vector<int64_t> t(N * N);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) t[i * N + j] = sigma.exp(elems[i], elems[j]) - sigma.exp(elems[j], elems[i]);
  return Bicharacter(T, sigma.ambient(), std::move(t));
}

Bicharacter Bicharacter::trivial(const FinAbGroup& T) {
  return Bicharacter(T, 1, std::vector<int64_t>(T.cardinality() * T.cardinality(), 0));
}

RootOfUnity Bicharacter::operator()(const GroupElem& u, const GroupElem& v) const { return RootOfUnity(M_, exp(u, v)); }

bool Bicharacter::is_bimultiplicative() const {
  const auto elems = T_.elements();
  for (const auto& u : elems)
    for (const auto& v : elems)
      for (const auto& w : elems) {
        if (exp(T_.add(u, v), w) != mod64(exp(u, w) + exp(v, w), M_)) return false;
        if (exp(u, T_.add(v, w)) != mod64(exp(u, v) + exp(u, w), M_)) return false;
      }
  return true;
}

bool Bicharacter::is_alternating() const {
  for (const auto& u : T_.elements())
    if (exp(u, u) != 0) return false;
  return true;
}

RootOfUnity bicharacter_beta(const FactorSet& sigma, const GroupElem& u, const GroupElem& v) {
  return RootOfUnity(sigma.ambient(), sigma.exp(u, v) - sigma.exp(v, u));
}

bool is_cocycle(const FactorSet& sigma) {
  const FinAbGroup& T = sigma.group();
  const int64_t M = sigma.ambient();
  const auto elems = T.elements();
  for (const auto& u : elems)
    for (const auto& v : elems) {
      const GroupElem uv = T.add(u, v);
      const int64_t suv = sigma.exp(u, v);
      for (const auto& w : elems) {
        int64_t lhs = suv + sigma.exp(uv, w);
        int64_t rhs = sigma.exp(u, T.add(v, w)) + sigma.exp(v, w);
        if (mod64(lhs - rhs, M) != 0) return false;
      }
    }
  return true;
}

FactorSet coboundary(const FinAbGroup& T, int64_t M, const std::vector<int64_t>& lambda_exps) {
  const size_t N = T.cardinality();
  if (lambda_exps.size() != N) throw Error("lambda must be given on every element of T");
  const auto elems = T.elements();
  std::vector<int64_t> t(N * N);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j)
      t[i * N + j] = lambda_exps[i] + lambda_exps[j] - lambda_exps[T.index(T.add(elems[i], elems[j]))];
  return FactorSet::table(T, M, std::move(t));
}

Term twisted_product(const FactorSet& sigma, const Term& x, const Term& y) {
  return Term{sigma.group().add(x.g, y.g), x.c * y.c * sigma(x.g, y.g)};
}

bool is_nondegenerate(const Bicharacter& beta) {
  const FinAbGroup& T = beta.group();
  const auto elems = T.elements();
  for (const auto& t : elems) {
    if (t == T.zero()) continue;
    bool radical = true;
    for (const auto& u : elems)
      if (beta.exp(u, t) != 0) {
        radical = false;
        break;
      }
    if (radical) return false;
  }
  return true;
}

}  // namespace hinv
