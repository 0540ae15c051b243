#include "hinv/classify.hpp"

#include <map>
#include <set>

#include "hinv/realize.hpp"
#include "hinv/secthree.hpp"

namespace hinv {

namespace {

std::vector<int64_t> rows_of(const ModMatrix2& t) { return {t.e[0], t.e[1], t.e[2], t.e[3]}; }

bool is_prime_power(int64_t n) { return factorize(n).size() == 1; }

// Exponents e in mu_M solving  l e + (l(l-1)/2) s = 0  (mod M), s the exponent
// of sigma(tau c, tau c).
std::vector<int64_t> power_solutions(int64_t l, int64_t s, int64_t M) {
  std::vector<int64_t> out;
  const int64_t rhs = mod64(-(l * (l - 1) / 2) * s, M);
  for (int64_t e = 0; e < M; ++e)
    if (mod64(l * e, M) == rhs) out.push_back(e);
  return out;
}

}  // namespace

std::optional<size_t> ClassificationReport::find(const PauliTriple& t) const {
  for (size_t i = 0; i < records.size(); ++i)
    if (records[i].triple == t) return i;
  return std::nullopt;
}

ExpectedClassification expected_classification(int64_t n) {
  const int64_t M = 2 * n * n, eps = M / n, minus = M / 2;
  ExpectedClassification ex;
  ex.equiv_reps.push_back({0, 0, 0});
  if (n % 4 == 0) ex.equiv_reps.push_back({0, 0, eps});
  if (n % 2 == 0) {
    ex.equiv_reps.push_back({0, minus, eps});
    ex.equiv_reps.push_back({1, 0, 0});
  }
  if (n % 4 == 0) ex.equiv_reps.push_back({2, M / 4, eps});

  if (n % 2 == 1) {
    ex.iso_counts = {1};
    ex.iso_reps = {{{0, 0, 0}}};
    return ex;
  }
  ex.iso_counts = {4, 1};
  ex.iso_reps = {{{0, 0, 0}, {0, 0, eps}, {0, minus, 0}, {0, minus, eps}}, {{1, 0, 0}}};
  if (n % 4 == 0) {
    ex.iso_counts.push_back(1);
    ex.iso_reps.push_back({{2, M / 4, eps}});
  }
  ex.equivalent_pairs.push_back({{0, minus, 0}, {0, 0, 0}});
  if (n % 4 == 2) ex.equivalent_pairs.push_back({{0, 0, eps}, {0, 0, 0}});
  return ex;
}

int involution_kind(const HomMapData& m) {
  const RealizedAlgebra R = realize_division_algebra(m.shape, minimal_ambient(m));
  const RealizedMap f = realize_hom_map(R, m);
  const CycMatrix Phi = find_form_matrix(R, f);
  return form_epsilon(Phi, scalar_division(R.M));
}

bool restriction_conditions_hold(const HomMapData& m) {
  const FinAbGroup& T = m.group();
  const int64_t M = m.ambient();
  const FactorSet sigma = FactorSet::standard(m.shape, M);
  const Bicharacter beta = Bicharacter::of(sigma);
  auto chain = [&](const GroupElem& h, int64_t l) {
    // exponent of c_h with X_h^l = c_h X_{l h}
    int64_t acc = 0;
    for (int64_t k = 1; k < l; ++k) acc += sigma.exp(h, T.scale(k, h));
    return mod64(acc, M);
  };
  for (const PrimeComponent& part : split_by_primes(T, m.tau)) {
    std::vector<GroupElem> gens;
    for (size_t c = 0; c < part.group.rank(); ++c) gens.push_back(embed_component(T, part, part.group.generator(c)));
    for (size_t c = 0; c < gens.size(); ++c) {
      const GroupElem& e = gens[c];
      const GroupElem h = m.tau.apply(e);
      if (!(embed_component(T, part, part.map.apply(part.group.generator(c))) == h)) return false;
      const int64_t l = element_order(T, e);
      const RootOfUnity lam = lambda_extend(m, e);
      if (mod64(l * lam.lift(M).exp() + chain(h, l) - chain(e, l), M) != 0) return false;
      if (!(lam * lambda_extend(m, h)).is_one()) return false;
      for (const GroupElem& d : gens)
        if (mod64(beta.exp(h, m.tau.apply(d)) + beta.exp(e, d), M) != 0) return false;
    }
  }
  return true;
}

ClassificationReport classify_pauli(int64_t n, int64_t cap) {
  if (n < 2) throw Error("n must be at least 2");
  if (n > cap) throw Error("cap exceeded: n = " + std::to_string(n) + " > " + std::to_string(cap));
  ClassificationReport rep;
  rep.n = n;
  rep.M = 2 * n * n;
  rep.expected = expected_classification(n);
  const SymplecticShape shape = SymplecticShape::pauli(n);
  const FinAbGroup T = shape.group();
  const FactorSet sigma = FactorSet::standard(shape, rep.M);
  const auto forms = canonical_forms(n);

  for (size_t k = 0; k < forms.size(); ++k) {
    rep.orbits.push_back(OrbitSummary{forms[k], 0, {}});
    const GroupMap tau = forms[k].to_group_map();
    const GroupElem ta = tau.apply(T.generator(0)), tb = tau.apply(T.generator(1));
    for (int64_t la : power_solutions(n, sigma.exp(ta, ta), rep.M))
      for (int64_t lb : power_solutions(n, sigma.exp(tb, tb), rep.M)) {
        HomMapData m = pauli_map(n, rows_of(forms[k]), rep.M, la, lb);
        if (!check_homogeneous_map(m) || !check_involution(m)) continue;
        InvolutionRecord r;
        r.triple = {k, la, lb};
        r.data = std::move(m);
        rep.records.push_back(std::move(r));
        ++rep.orbits[k].involutions;
      }
  }

  // Greedy class assignment. The known normal forms seed the classes
  // when present so they become the representatives; counts do not depend on
  // the seeding order.
  std::vector<size_t> order;
  std::set<size_t> seeded;
  auto seed = [&](const PauliTriple& t) {
    if (auto i = rep.find(t); i && seeded.insert(*i).second) order.push_back(*i);
  };
  for (const auto& t : rep.expected.equiv_reps) seed(t);
  for (const auto& list : rep.expected.iso_reps)
    for (const auto& t : list) seed(t);
  for (size_t i = 0; i < rep.records.size(); ++i)
    if (!seeded.count(i)) order.push_back(i);

  for (size_t i : order) {
    InvolutionRecord& r = rep.records[i];
    OrbitSummary& orb = rep.orbits[r.triple.orbit];
    bool placed = false;
    for (size_t c = 0; c < orb.iso_reps.size() && !placed; ++c) {
      Decision d = are_isomorphic(r.data, rep.records[orb.iso_reps[c]].data);
      if (d.holds) {
        r.iso_class = c;
        r.iso_witness = *d.witness;
        placed = true;
      }
    }
    if (!placed) {
      r.iso_class = orb.iso_reps.size();
      orb.iso_reps.push_back(i);
      r.iso_witness = *are_isomorphic(r.data, r.data).witness;
    }
  }

  const EquivalenceContext ctx(shape, rep.M);
  for (size_t i : order) {
    InvolutionRecord& r = rep.records[i];
    bool placed = false;
    for (size_t c = 0; c < rep.equiv_reps.size() && !placed; ++c) {
      Decision d = are_equivalent(ctx, r.data, rep.records[rep.equiv_reps[c]].data);
      if (d.holds) {
        r.equiv_class = c;
        r.equiv_witness = *d.witness;
        placed = true;
      }
    }
    if (!placed) {
      r.equiv_class = rep.equiv_reps.size();
      rep.equiv_reps.push_back(i);
      r.equiv_witness = *are_equivalent(ctx, r.data, r.data).witness;
    }
  }

  for (InvolutionRecord& r : rep.records) r.epsilon = involution_kind(r.data);

  if (!is_prime_power(n)) {
    CrtCheck crt;
    std::vector<ClassificationReport> parts;
    for (auto [p, e] : factorize(n)) {
      int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      crt.components.push_back(q);
      parts.push_back(classify_pauli(q, cap));
      crt.predicted_equivalence *= parts.back().equivalence_classes();
    }
    for (const ModMatrix2& theta : forms) {
      size_t count = 1;
      for (size_t j = 0; j < parts.size(); ++j)
        count *= parts[j].orbits[orbit_reduce(theta.reduce(crt.components[j])).index].iso_reps.size();
      crt.predicted_iso.push_back(count);
    }
    crt.restrictions_ok = true;
    for (const InvolutionRecord& r : rep.records)
      if (!restriction_conditions_hold(r.data)) crt.restrictions_ok = false;
    crt.reassembly_ok = true;
    for (const ModMatrix2& theta : forms) {
      const GroupMap tau = theta.to_group_map();
      if (!(crt_reassemble(T, split_by_primes(T, tau)) == tau)) crt.reassembly_ok = false;
    }
    rep.crt = std::move(crt);
  }

  // Compare with the known classification.
  const ExpectedClassification& ex = rep.expected;
  bool ok = rep.equiv_reps.size() == ex.equiv_reps.size() && rep.orbits.size() == ex.iso_counts.size();
  std::set<size_t> eq_hit;
  for (const auto& t : ex.equiv_reps) {
    auto i = rep.find(t);
    ok = ok && i && eq_hit.insert(rep.records[*i].equiv_class).second;
  }
  for (size_t k = 0; ok && k < rep.orbits.size(); ++k) {
    ok = rep.orbits[k].iso_reps.size() == ex.iso_counts[k];
    std::set<size_t> iso_hit;
    for (const auto& t : ex.iso_reps[k]) {
      auto i = rep.find(t);
      ok = ok && i && iso_hit.insert(rep.records[*i].iso_class).second;
    }
  }
  for (const auto& [a, b] : ex.equivalent_pairs) {
    auto i = rep.find(a), j = rep.find(b);
    ok = ok && i && j && rep.records[*i].equiv_class == rep.records[*j].equiv_class;
  }
  if (rep.crt) {
    const CrtCheck& c = *rep.crt;
    ok = ok && c.restrictions_ok && c.reassembly_ok && c.predicted_equivalence == rep.equiv_reps.size();
    for (size_t k = 0; ok && k < rep.orbits.size(); ++k) ok = c.predicted_iso[k] == rep.orbits[k].iso_reps.size();
  }
  rep.match = ok;
  return rep;
}

std::string triple_to_string(const PauliTriple& t, int64_t M, int64_t n) {
  auto lam = [&](int64_t e) -> std::string {
    const int64_t step = M / n;
    if (e % step != 0) return "zeta" + std::to_string(M) + "^" + std::to_string(e);
    const int64_t k = e / step;
    if (k == 0) return "1";
    if (2 * k == n) return "-1";
    if (k == 1) return "eps";
    return "eps^" + std::to_string(k);
  };
  return "(" + canonical_label(t.orbit) + "," + lam(t.la) + "," + lam(t.lb) + ")";
}

}  // namespace hinv
