#include "hinv/homog.hpp"

#include <algorithm>
#include <sstream>

namespace hinv {

int64_t HomMapData::ambient() const {
  int64_t M = shape.default_ambient();
  for (const auto& l : lambda) M = lcm64(M, l.order());
  return M;
}

std::string HomMapData::to_string() const {
  std::ostringstream os;
  os << "(" << tau.to_string();
  for (const auto& l : lambda) os << "," << l.to_string();
  os << (mode == Mode::anti ? ")" : ")[auto]");
  return os.str();
}

HomMapData pauli_map(int64_t n, const std::vector<int64_t>& tau_rows, int64_t M, int64_t la, int64_t lb, Mode mode) {
  HomMapData m;
  m.shape = SymplecticShape::pauli(n);
  const FinAbGroup T = m.shape.group();
  m.tau = GroupMap::from_rows(T, T, tau_rows);
  m.lambda = {RootOfUnity(M, la), RootOfUnity(M, lb)};
  m.mode = mode;
  return m;
}

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// p with every nontrivial pair order a power of p, or 0 when no such prime.
int64_t common_prime(const SymplecticShape& shape) {
  int64_t p = 0;
  for (int64_t l : shape.pair_orders) {
    if (l == 1) continue;
    auto f = factorize(l);
    if (f.size() != 1) return 0;
    if (p != 0 && f[0].first != p) return 0;
    p = f[0].first;
  }
  return p;
}

int exponent_of(int64_t q, int64_t p) {
  int i = 0;
  while (q > 1) {
    q /= p;
    ++i;
  }
  return i;
}

// Weighted P_{c,d} for a p-group with pair orders p^{i_k}: the weight w_k
// rescales beta(a_k, b_k) = eps_k^{w_k}.
int64_t weighted_P(int64_t p, int N, const std::vector<int>& iexp, const std::vector<int64_t>& w, const GroupMap& tau,
                   size_t c, size_t d) {
  const int64_t pN = ipow(p, N);
  int64_t P = 0;
  for (size_t k = 0; k < iexp.size(); ++k) {
    const int64_t q = ipow(p, iexp[k]);
    const int64_t mc = tau.entry(2 * k, c) % q, md = tau.entry(2 * k, d) % q;
    const int64_t nc = tau.entry(2 * k + 1, c) % q, nd = tau.entry(2 * k + 1, d) % q;
    const int64_t det = mod64(mc * nd - md * nc, q);
    P = mod64(P + ipow(p, N - iexp[k]) * (det * w[k] % q), pN);
  }
  return P;
}

bool weighted_congruences(int64_t p, const std::vector<int>& iexp, const std::vector<int64_t>& w, const GroupMap& tau,
                          Mode mode) {
  int N = 0;
  for (int i : iexp) N = std::max(N, i);
  const int64_t pN = ipow(p, N);
  const int64_t s = mode == Mode::anti ? -1 : 1;
  const size_t gens = 2 * iexp.size();
  for (size_t c = 0; c < gens; ++c)
    for (size_t d = 0; d < gens; ++d) {
      int64_t target = 0;
      const size_t k = c / 2;
      if (d / 2 == k && c != d) {
        const int64_t base = ipow(p, N - iexp[k]) * w[k];
        target = (c % 2 == 0) ? s * base : -s * base;
      }
      if (weighted_P(p, N, iexp, w, tau, c, d) != mod64(target, pN)) return false;
    }
  return true;
}

}  // namespace

int64_t compute_P(const SymplecticShape& shape, const GroupMap& tau, size_t c, size_t d) {
  const int64_t p = common_prime(shape);
  if (p == 0) throw Error("T is not a p-group of the required shape");
  std::vector<int> iexp;
  for (int64_t l : shape.pair_orders) iexp.push_back(exponent_of(l, p));
  int N = 0;
  for (int i : iexp) N = std::max(N, i);
  return weighted_P(p, N, iexp, std::vector<int64_t>(iexp.size(), 1), tau, c, d);
}

bool congruences_hold(const SymplecticShape& shape, const GroupMap& tau, Mode mode) {
  const FinAbGroup T = shape.group();
  if (!(tau.source() == T) || !(tau.target() == T)) throw Error("shape mismatch");
  if (!is_automorphism(T, tau)) return false;
  if (shape.pairs() == 0) return true;
  if (shape.pairs() == 1) {
    const int64_t n = shape.pair_orders[0];
    return det_mod(tau, n) == mod64(mode == Mode::anti ? -1 : 1, n);
  }
  if (const int64_t p = common_prime(shape); p != 0) {
    std::vector<int> iexp;
    for (int64_t l : shape.pair_orders) iexp.push_back(exponent_of(l, p));
    return weighted_congruences(p, iexp, std::vector<int64_t>(iexp.size(), 1), tau, mode);
  }
  // Mixed primes: one p-group problem per prime component.
  for (const PrimeComponent& part : split_by_primes(T, tau)) {
    std::vector<int> iexp;
    std::vector<int64_t> w;
    for (size_t kk = 0; kk < part.coordinates.size(); kk += 2) {
      const int64_t q = part.group.order(kk);
      const int64_t l = T.order(part.coordinates[kk]);
      iexp.push_back(exponent_of(q, part.prime));
      w.push_back(q == 1 ? 0 : inverse_mod((l / q) % q, q));
    }
    if (!weighted_congruences(part.prime, iexp, w, part.map, mode)) return false;
  }
  return true;
}

bool beta_condition_holds(const SymplecticShape& shape, const GroupMap& tau, Mode mode) {
  const FinAbGroup T = shape.group();
  const FactorSet sigma = FactorSet::standard(shape, shape.exponent());
  auto beta = [&](const GroupElem& u, const GroupElem& v) { return mod64(sigma.exp(u, v) - sigma.exp(v, u), sigma.ambient()); };
  for (size_t c = 0; c < T.rank(); ++c)
    for (size_t d = 0; d < T.rank(); ++d) {
      const int64_t lhs = beta(tau.image_of_generator(c), tau.image_of_generator(d));
      const int64_t b = beta(T.generator(c), T.generator(d));
      const int64_t rhs = mode == Mode::anti ? mod64(-b, sigma.ambient()) : b;
      if (lhs != rhs) return false;
    }
  return true;
}

bool power_conditions_hold(const HomMapData& m) {
  const int64_t M = m.ambient();
  const FactorSet sigma = FactorSet::standard(m.shape, M);
  const FinAbGroup& T = m.group();
  for (size_t c = 0; c < T.rank(); ++c) {
    const int64_t l = T.order(c);
    const GroupElem tc = m.tau.image_of_generator(c);
    const int64_t lam = m.lambda[c].lift(M).exp();
    const __int128 tri = static_cast<__int128>(l) * (l - 1) / 2;
    const int64_t lhs = mod64(static_cast<int64_t>((static_cast<__int128>(l) * lam + tri % M * sigma.exp(tc, tc)) % M), M);
    if (lhs != 0) return false;
  }
  return true;
}

bool check_homogeneous_map(const HomMapData& m) {
  const FinAbGroup T = m.shape.group();
  if (!(m.tau.source() == T) || !(m.tau.target() == T)) throw Error("shape mismatch");
  if (m.lambda.size() != T.rank()) throw Error("lambda must be given on every generator");
  if (!congruences_hold(m.shape, m.tau, m.mode)) return false;
  return power_conditions_hold(m);
}

RootOfUnity lambda_extend(const HomMapData& m, const GroupElem& g) {
  const int64_t M = m.ambient();
  const FactorSet sigma = FactorSet::standard(m.shape, M);
  const FinAbGroup& T = m.group();
  // psi(X_c^k) for each factor of the ordered product X_g.
  std::vector<Term> blocks;
  for (size_t c = 0; c < T.rank(); ++c) {
    Term gen{m.tau.image_of_generator(c), m.lambda[c].lift(M)};
    Term acc{T.zero(), RootOfUnity::one(M)};
    for (int64_t k = 0; k < g[c]; ++k) acc = twisted_product(sigma, acc, gen);
    blocks.push_back(std::move(acc));
  }
  Term out{T.zero(), RootOfUnity::one(M)};
  if (m.mode == Mode::anti) {
    for (size_t c = blocks.size(); c-- > 0;) out = twisted_product(sigma, out, blocks[c]);
  } else {
    for (const Term& b : blocks) out = twisted_product(sigma, out, b);
  }
  return out.c.lift(M);
}

bool check_involution(const HomMapData& m) {
  if (m.mode != Mode::anti || !check_homogeneous_map(m)) throw Error("not a homogeneous anti-automorphism");
  const FinAbGroup& T = m.group();
  if (!(m.tau.compose(m.tau) == GroupMap::identity(T))) return false;
  for (size_t c = 0; c < T.rank(); ++c) {
    if (!(m.lambda[c] * lambda_extend(m, m.tau.image_of_generator(c))).is_one()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- isomorphism

Decision are_isomorphic(const HomMapData& m, const HomMapData& mp) {
  if (!(m.shape == mp.shape)) throw Error("shape mismatch");
  Decision out;
  if (!(m.tau == mp.tau)) return out;
  const FinAbGroup& T = m.group();
  const int64_t M = lcm64(m.ambient(), mp.ambient());
  for (const Character& chi : characters(T)) {
    bool ok = true;
    for (size_t c = 0; c < T.rank() && ok; ++c) {
      const int64_t lhs = chi.exp_in(m.tau.image_of_generator(c), M) + mp.lambda[c].lift(M).exp();
      const int64_t rhs = chi.exp_in(T.generator(c), M) + m.lambda[c].lift(M).exp();
      ok = mod64(lhs - rhs, M) == 0;
    }
    if (!ok) continue;
    WitnessData w;
    w.M = M;
    for (const GroupElem& g : T.elements()) w.chi.push_back(chi.exp_in(g, M));
    out.holds = true;
    out.witness = std::move(w);
    return out;
  }
  return out;
}

bool verify_isomorphism_witness(const HomMapData& m, const HomMapData& mp, const WitnessData& w) {
  const FinAbGroup& T = m.group();
  if (w.phi || !(m.tau == mp.tau) || w.chi.size() != T.cardinality()) return false;
  const int64_t M = lcm64(w.M, lcm64(m.ambient(), mp.ambient()));
  auto chi = [&](const GroupElem& g) { return w.chi_at(T, g).lift(M).exp(); };
  const auto elems = T.elements();
  for (const auto& g : elems)
    for (const auto& h : elems)
      if (mod64(chi(T.add(g, h)) - chi(g) - chi(h), M) != 0) return false;
  for (size_t c = 0; c < T.rank(); ++c) {
    const int64_t lhs = chi(m.tau.image_of_generator(c)) + mp.lambda[c].lift(M).exp();
    const int64_t rhs = chi(T.generator(c)) + m.lambda[c].lift(M).exp();
    if (mod64(lhs - rhs, M) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- equivalence

EquivalenceContext::EquivalenceContext(const SymplecticShape& shape, int64_t M)
    : shape_(shape), T_(shape.group()), M_(M) {
  const FactorSet sigma = FactorSet::standard(shape, M);
  const size_t N = T_.cardinality();
  const auto elems = T_.elements();
  std::vector<size_t> add(N * N);
  std::vector<int64_t> sig(N * N);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      add[i * N + j] = T_.index(T_.add(elems[i], elems[j]));
      sig[i * N + j] = sigma.exp(elems[i], elems[j]);
    }
  AutFilter filter;
  if (shape.pairs() == 1) filter.det = 1;
  for (GroupMap& phi : enumerate_automorphisms(T_, filter)) {
    if (!congruences_hold(shape, phi, Mode::automorphism)) continue;
    std::vector<size_t> img(N);
    for (size_t i = 0; i < N; ++i) img[i] = T_.index(phi.apply(elems[i]));
    auto rho = [&](size_t i, size_t j) { return sig[img[i] * N + img[j]] - sig[i * N + j]; };

    // Generator values: chi(e_j)^{l_j} times the wraparound product must be 1.
    std::vector<int64_t> x(T_.rank());
    bool solvable = true;
    for (size_t j = 0; j < T_.rank() && solvable; ++j) {
      const size_t ej = T_.index(T_.generator(j));
      int64_t wrap = 0;
      GroupElem k = T_.generator(j);
      for (int64_t s = 1; s < T_.order(j); ++s) {
        wrap += rho(T_.index(k), ej);
        k = T_.add(k, T_.generator(j));
      }
      auto sol = solve_linear_mod(T_.order(j), -wrap, M_);
      if (!sol) solvable = false;
      else x[j] = *sol;
    }
    if (!solvable) continue;

    std::vector<int64_t> chi(N, 0);
    for (size_t i = 1; i < N; ++i) {
      const GroupElem& g = elems[i];
      size_t j = g.size();
      while (g[j - 1] == 0) --j;
      --j;
      const size_t h = T_.index(T_.sub(g, T_.generator(j)));
      chi[i] = mod64(chi[h] + x[j] + rho(h, T_.index(T_.generator(j))), M_);
    }
    bool ok = true;
    for (size_t i = 0; i < N && ok; ++i)
      for (size_t j = 0; j < N && ok; ++j) ok = mod64(chi[add[i * N + j]] - chi[i] - chi[j] - rho(i, j), M_) == 0;
    if (!ok) continue;
    cands_.push_back(Candidate{std::move(phi), std::move(chi)});
  }
}

Decision are_equivalent(const HomMapData& m, const HomMapData& mp) {
  const EquivalenceContext ctx(m.shape, lcm64(m.ambient(), mp.ambient()));
  return are_equivalent(ctx, m, mp);
}

Decision are_equivalent(const EquivalenceContext& ctx, const HomMapData& m, const HomMapData& mp) {
  if (!(m.shape == ctx.shape()) || !(mp.shape == ctx.shape())) throw Error("shape mismatch");
  const int64_t M = ctx.ambient();
  if (M % m.ambient() != 0 || M % mp.ambient() != 0) throw Error("incompatible orders");
  const FinAbGroup& T = ctx.group();
  const auto chars = characters(T);
  Decision out;
  for (const auto& cand : ctx.candidates()) {
    if (!(cand.phi.compose(m.tau) == mp.tau.compose(cand.phi))) continue;
    // kappa(c) - kappa(tau c) must equal r_c for each generator c.
    std::vector<int64_t> r(T.rank());
    for (size_t c = 0; c < T.rank(); ++c) {
      const GroupElem tc = m.tau.image_of_generator(c);
      const int64_t lp = lambda_extend(mp, cand.phi.image_of_generator(c)).lift(M).exp();
      r[c] = mod64(m.lambda[c].lift(M).exp() - lp - cand.chi0[T.index(T.generator(c))] + cand.chi0[T.index(tc)], M);
    }
    for (const Character& kappa : chars) {
      bool ok = true;
      for (size_t c = 0; c < T.rank() && ok; ++c) {
        const int64_t d = kappa.exp_in(T.generator(c), M) - kappa.exp_in(m.tau.image_of_generator(c), M);
        ok = mod64(d - r[c], M) == 0;
      }
      if (!ok) continue;
      WitnessData w;
      w.phi = cand.phi;
      w.M = M;
      w.chi = cand.chi0;
      const auto elems = T.elements();
      for (size_t i = 0; i < elems.size(); ++i) w.chi[i] = mod64(w.chi[i] + kappa.exp_in(elems[i], M), M);
      out.holds = true;
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

bool verify_equivalence_witness(const HomMapData& m, const HomMapData& mp, const WitnessData& w) {
  const FinAbGroup& T = m.group();
  if (!w.phi || w.chi.size() != T.cardinality()) return false;
  const GroupMap& phi = *w.phi;
  if (!is_automorphism(T, phi)) return false;
  if (!(phi.compose(m.tau) == mp.tau.compose(phi))) return false;
  const int64_t M = lcm64(w.M, lcm64(m.ambient(), mp.ambient()));
  const FactorSet sigma = FactorSet::standard(m.shape, M);
  auto chi = [&](const GroupElem& g) { return w.chi_at(T, g).lift(M).exp(); };
  const auto elems = T.elements();
  for (const auto& g : elems)
    for (const auto& h : elems) {
      const int64_t lhs = chi(T.add(g, h)) - chi(g) - chi(h);
      const int64_t rhs = sigma.exp(phi.apply(g), phi.apply(h)) - sigma.exp(g, h);
      if (mod64(lhs - rhs, M) != 0) return false;
    }
  for (size_t c = 0; c < T.rank(); ++c) {
    const GroupElem gc = T.generator(c);
    const int64_t rhs = chi(gc) - chi(m.tau.apply(gc)) + lambda_extend(mp, phi.apply(gc)).lift(M).exp();
    if (mod64(m.lambda[c].lift(M).exp() - rhs, M) != 0) return false;
  }
  return true;
}

WitnessData compose_equivalence(const FinAbGroup& T, const WitnessData& w1, const WitnessData& w2) {
  if (!w1.phi || !w2.phi) throw Error("equivalence witness needs phi");
  WitnessData w;
  w.M = lcm64(w1.M, w2.M);
  w.phi = w2.phi->compose(*w1.phi);
  for (const GroupElem& g : T.elements())
    w.chi.push_back(mod64(w1.chi_at(T, g).lift(w.M).exp() + w2.chi_at(T, w1.phi->apply(g)).lift(w.M).exp(), w.M));
  return w;
}

WitnessData invert_equivalence(const FinAbGroup& T, const WitnessData& w) {
  if (!w.phi) throw Error("equivalence witness needs phi");
  WitnessData out;
  out.M = w.M;
  out.phi = inverse_automorphism(*w.phi);
  for (const GroupElem& h : T.elements()) out.chi.push_back(mod64(-w.chi_at(T, out.phi->apply(h)).exp(), w.M));
  return out;
}

WitnessData compose_isomorphism(const WitnessData& w1, const WitnessData& w2) {
  WitnessData w;
  w.M = lcm64(w1.M, w2.M);
  for (size_t i = 0; i < w1.chi.size(); ++i)
    w.chi.push_back(mod64(w1.chi[i] * (w.M / w1.M) + w2.chi[i] * (w.M / w2.M), w.M));
  return w;
}

WitnessData invert_isomorphism(const WitnessData& w) {
  WitnessData out = w;
  for (auto& e : out.chi) e = mod64(-e, w.M);
  return out;
}

WitnessData isomorphism_as_equivalence(const FinAbGroup& T, const WitnessData& w) {
  WitnessData out = invert_isomorphism(w);
  out.phi = GroupMap::identity(T);
  return out;
}

// ---------------------------------------------------------------- existence

std::optional<HomMapData> find_fixed_or_inverting(const SymplecticShape& shape, Variant v, int64_t M) {
  if (M == 0) M = shape.default_ambient();
  const FinAbGroup T = shape.group();
  HomMapData m;
  m.shape = shape;
  m.tau = v == Variant::preserving ? GroupMap::identity(T) : GroupMap::negation(T);
  m.mode = Mode::anti;
  if (!congruences_hold(shape, m.tau, Mode::anti)) return std::nullopt;
  // The power conditions are separate for each generator.
  const FactorSet sigma = FactorSet::standard(shape, M);
  for (size_t c = 0; c < T.rank(); ++c) {
    const int64_t l = T.order(c);
    const GroupElem tc = m.tau.image_of_generator(c);
    const int64_t rhs = -mod64((l * (l - 1) / 2) % M * sigma.exp(tc, tc), M);
    auto x = solve_linear_mod(l, rhs, M);
    if (!x) return std::nullopt;
    m.lambda.emplace_back(M, *x);
  }
  if (!check_homogeneous_map(m)) return std::nullopt;
  return m;
}

bool exists_fixed_or_inverting(const SymplecticShape& shape, Variant v, int64_t M) {
  return find_fixed_or_inverting(shape, v, M).has_value();
}

}  // namespace hinv
