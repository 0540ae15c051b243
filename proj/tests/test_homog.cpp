#include <random>

#include "doctest.h"
#include "hinv/homog.hpp"

using namespace hinv;

namespace {

// All (tau, lambda) involutions on Z_n^2 with lambda in mu_{2n^2}; tau runs over
// the whole det -1, trace 0 locus when `full`, else over the diagonal-free
// canonical matrices only.
std::vector<HomMapData> involutions(int64_t n, bool full) {
  const int64_t M = 2 * n * n;
  std::vector<std::vector<int64_t>> taus;
  if (full) {
    for (int64_t a = 0; a < n; ++a)
      for (int64_t b = 0; b < n; ++b)
        for (int64_t c = 0; c < n; ++c) {
          const int64_t d = mod64(-a, n);
          if (mod64(a * d - b * c, n) == mod64(-1, n)) taus.push_back({a, b, c, d});
        }
  } else {
    taus.push_back({1, 0, 0, -1});
    if (n % 2 == 0) taus.push_back({0, 1, 1, 0});
    if (n % 4 == 0) taus.push_back({1, 2, n / 2, -1});
  }
  std::vector<HomMapData> out;
  for (const auto& t : taus)
    for (int64_t la = 0; la < M; la += 1)
      for (int64_t lb = 0; lb < M; lb += 1) {
        const HomMapData m = pauli_map(n, t, M, la, lb);
        if (!power_conditions_hold(m)) continue;
        if (check_homogeneous_map(m) && check_involution(m)) out.push_back(m);
      }
  return out;
}

HomMapData theta1(int64_t n, int64_t la, int64_t lb) { return pauli_map(n, {1, 0, 0, -1}, 2 * n * n, la, lb); }

}  // namespace

TEST_SUITE("homog") {
  TEST_CASE("compute_P examples") {
    const GroupMap swap2 = GroupMap::from_rows(FinAbGroup({2, 2}), FinAbGroup({2, 2}), {0, 1, 1, 0});
    CHECK(compute_P(SymplecticShape::pauli(2), swap2, 0, 1) == 1);
    const GroupMap swap4 = GroupMap::from_rows(FinAbGroup({4, 4}), FinAbGroup({4, 4}), {0, 1, 1, 0});
    CHECK(compute_P(SymplecticShape::pauli(4), swap4, 0, 1) == 3);
    const SymplecticShape mixed{{4, 2}};
    const GroupMap id = GroupMap::identity(mixed.group());
    CHECK(compute_P(mixed, id, 0, 1) == 1);  // p^{n-i} with i = n
    CHECK(compute_P(mixed, id, 2, 3) == 2);  // p^{n-i} with i = 1
    CHECK(compute_P(mixed, id, 0, 2) == 0);
    CHECK_THROWS_AS(compute_P(SymplecticShape::pauli(6), GroupMap::identity(FinAbGroup({6, 6})), 0, 1), Error);
  }

  TEST_CASE("check_homogeneous_map examples") {
    CHECK(check_homogeneous_map(pauli_map(2, {1, 0, 1, 1}, 4, 1, 0)));
    for (int64_t n = 2; n <= 8; ++n) CHECK(check_homogeneous_map(theta1(n, 0, 0)));
    CHECK_FALSE(check_homogeneous_map(pauli_map(3, {1, 0, 0, 1}, 18, 0, 0)));
    // automorphism mode accepts the identity
    CHECK(check_homogeneous_map(pauli_map(3, {1, 0, 0, 1}, 18, 0, 0, Mode::automorphism)));
  }

  TEST_CASE("lambda_extend examples") {
    for (int64_t n : {2, 3, 4, 5}) {
      const HomMapData m = theta1(n, 0, 0);
      const FinAbGroup& T = m.group();
      for (const GroupElem& g : T.elements()) CHECK(lambda_extend(m, g) == RootOfUnity(n, g[0] * g[1]));
      CHECK(lambda_extend(m, T.zero()).is_one());
    }
    const HomMapData ex = pauli_map(2, {1, 0, 1, 1}, 4, 1, 0);
    CHECK(lambda_extend(ex, ex.group().make({1, 1})) == RootOfUnity(4, 3));
  }

  TEST_CASE("check_involution examples") {
    for (int64_t n : {2, 3, 4}) CHECK(check_involution(theta1(n, 0, 0)));
    for (int64_t n : {2, 4, 6}) {
      const int64_t M = 2 * n * n;
      for (int64_t k = 0; k < n; ++k) {
        const int64_t e = k * (M / n);
        CHECK(check_involution(pauli_map(n, {0, 1, 1, 0}, M, e, mod64(-e, M))));
        if (mod64(2 * e, M) != 0) CHECK_FALSE(check_involution(pauli_map(n, {0, 1, 1, 0}, M, e, e)));
      }
    }
    CHECK_THROWS_WITH_AS(check_involution(pauli_map(3, {1, 0, 0, 1}, 18, 0, 0)), "not a homogeneous anti-automorphism",
                         Error);
  }

  TEST_CASE("isomorphism examples") {
    for (int64_t n : {2, 4, 6}) {
      const int64_t eps = 2 * n;  // M / n with M = 2n^2
      CHECK_FALSE(are_isomorphic(theta1(n, 0, 0), theta1(n, 0, eps)).holds);
      const auto d = are_isomorphic(theta1(n, 0, 0), theta1(n, 0, 0));
      CHECK(d.holds);
      for (int64_t x : d.witness->chi) CHECK(x == 0);
      const int64_t M = 2 * n * n;
      for (int64_t k = 0; k < n; ++k)
        for (int64_t j = 0; j < n; ++j) {
          const int64_t e = k * eps, f = j * eps;
          const auto r = are_isomorphic(pauli_map(n, {0, 1, 1, 0}, M, e, mod64(-e, M)),
                                        pauli_map(n, {0, 1, 1, 0}, M, f, mod64(-f, M)));
          CHECK(r.holds);
        }
    }
    CHECK(are_isomorphic(theta1(3, 0, 0), theta1(3, 0, 6)).holds);
  }

  TEST_CASE("equivalence examples") {
    for (int64_t n : {4, 8}) {
      const int64_t M = 2 * n * n, eps = M / n;
      const auto d = are_equivalent(theta1(n, M / 2, 0), theta1(n, 0, 0));
      CHECK(d.holds);
      CHECK(verify_equivalence_witness(theta1(n, M / 2, 0), theta1(n, 0, 0), *d.witness));
      CHECK_FALSE(are_equivalent(theta1(n, 0, eps), theta1(n, 0, 0)).holds);
      CHECK_FALSE(are_equivalent(theta1(n, M / 2, eps), theta1(n, 0, 0)).holds);
    }
  }

  TEST_CASE("n = 2: three of the four theta1 classes are equivalent, (-1, eps) is not") {
    const HomMapData p11 = theta1(2, 0, 0), m11 = theta1(2, 4, 0), p1e = theta1(2, 0, 4), m1e = theta1(2, 4, 4);
    CHECK(are_equivalent(m11, p11).holds);
    CHECK(are_equivalent(p1e, p11).holds);
    CHECK(are_equivalent(m11, p1e).holds);
    CHECK_FALSE(are_equivalent(m1e, p11).holds);
    CHECK_FALSE(are_equivalent(m1e, p1e).holds);
  }

  TEST_CASE("fixed or inverting maps exist only on elementary 2-groups") {
    for (Variant v : {Variant::preserving, Variant::inverting}) {
      CHECK(exists_fixed_or_inverting(SymplecticShape::pauli(2), v));
      CHECK(exists_fixed_or_inverting(SymplecticShape{{2, 2}}, v));
      CHECK_FALSE(exists_fixed_or_inverting(SymplecticShape::pauli(3), v));
      CHECK_FALSE(exists_fixed_or_inverting(SymplecticShape::pauli(4), v));
      CHECK_FALSE(exists_fixed_or_inverting(SymplecticShape{{4, 2}}, v));
    }
    const auto w = find_fixed_or_inverting(SymplecticShape::pauli(2), Variant::preserving);
    REQUIRE(w.has_value());
    CHECK(check_homogeneous_map(*w));
    CHECK(w->tau == GroupMap::identity(w->group()));
  }

  TEST_CASE("property: the congruence test agrees with the direct commutation test") {
    std::mt19937 rng(17);
    const std::vector<SymplecticShape> shapes{SymplecticShape::pauli(6), SymplecticShape::pauli(12), SymplecticShape{{2, 2}},
                                              SymplecticShape{{4, 2}}, SymplecticShape{{6, 3}}};
    for (const auto& s : shapes) {
      const FinAbGroup T = s.group();
      const size_t r = T.rank();
      int tested = 0, accepted = 0;
      for (int attempt = 0; attempt < 4000 && tested < 150; ++attempt) {
        std::vector<std::vector<int64_t>> cols(r, std::vector<int64_t>(r));
        for (size_t j = 0; j < r; ++j)
          for (size_t i = 0; i < r; ++i) cols[j][i] = std::uniform_int_distribution<int64_t>(0, T.order(i) - 1)(rng);
        GroupMap tau(T, T, cols);
        if (!tau.is_well_defined() || !is_automorphism(T, tau)) continue;
        ++tested;
        for (Mode mode : {Mode::anti, Mode::automorphism}) {
          const bool c = congruences_hold(s, tau, mode);
          CHECK(c == beta_condition_holds(s, tau, mode));
          accepted += c;
        }
      }
      CHECK(tested > 0);
    }
  }

  TEST_CASE("property: iso and equivalence are equivalence relations with composable witnesses") {
    for (int64_t n : {2, 3, 4}) {
      CAPTURE(n);
      const auto inv = involutions(n, n <= 3);
      const EquivalenceContext ctx(SymplecticShape::pauli(n), 2 * n * n);
      const FinAbGroup T = SymplecticShape::pauli(n).group();
      const size_t N = inv.size();
      std::vector<std::vector<std::optional<WitnessData>>> eq(N, std::vector<std::optional<WitnessData>>(N));
      std::vector<std::vector<std::optional<WitnessData>>> iso(N, std::vector<std::optional<WitnessData>>(N));
      for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
          const Decision e = are_equivalent(ctx, inv[i], inv[j]);
          if (e.holds) {
            CHECK(verify_equivalence_witness(inv[i], inv[j], *e.witness));
            eq[i][j] = e.witness;
          }
          const Decision s = are_isomorphic(inv[i], inv[j]);
          if (s.holds) {
            CHECK(verify_isomorphism_witness(inv[i], inv[j], *s.witness));
            iso[i][j] = s.witness;
            // isomorphic implies equivalent
            CHECK(e.holds);
            CHECK(verify_equivalence_witness(inv[i], inv[j], isomorphism_as_equivalence(T, *s.witness)));
          }
        }
      for (size_t i = 0; i < N; ++i) {
        CHECK(eq[i][i].has_value());
        CHECK(iso[i][i].has_value());
        for (size_t j = 0; j < N; ++j) {
          CHECK(eq[i][j].has_value() == eq[j][i].has_value());
          CHECK(iso[i][j].has_value() == iso[j][i].has_value());
          if (eq[i][j]) CHECK(verify_equivalence_witness(inv[j], inv[i], invert_equivalence(T, *eq[i][j])));
          if (iso[i][j]) CHECK(verify_isomorphism_witness(inv[j], inv[i], invert_isomorphism(*iso[i][j])));
          for (size_t k = 0; k < N; ++k) {
            if (eq[i][j] && eq[j][k]) {
              CHECK(eq[i][k].has_value());
              CHECK(verify_equivalence_witness(inv[i], inv[k], compose_equivalence(T, *eq[i][j], *eq[j][k])));
            }
            if (iso[i][j] && iso[j][k]) {
              CHECK(iso[i][k].has_value());
              CHECK(verify_isomorphism_witness(inv[i], inv[k], compose_isomorphism(*iso[i][j], *iso[j][k])));
            }
          }
        }
      }
    }
  }
}
