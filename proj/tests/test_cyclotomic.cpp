#include <random>

#include "doctest.h"
#include "hinv/cyclotomic.hpp"

using namespace hinv;

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic polynomial; returns {quotient, remainder}.
std::pair<ZPoly, ZPoly> zdivmod(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {ZPoly{0}, a};
  ZPoly q(a.size() - db, 0);
  for (size_t k = a.size(); k-- > db;) {
    const mpz_class c = a[k];
    q[k - db] = c;
    for (size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(db);
  return {q, a};
}

int mobius(int64_t n) {
  int mu = 1;
  for (int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

// Phi_M = prod_{d | M} (x^d - 1)^{mu(M/d)}
ZPoly mobius_cyclotomic(int64_t M) {
  ZPoly num{1}, den{1};
  for (int64_t d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    ZPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(M / d);
    if (mu == 1) num = zmul(num, f);
    if (mu == -1) den = zmul(den, f);
  }
  auto [q, r] = zdivmod(num, den);
  for (auto& c : r) REQUIRE(c == 0);
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

// Product in Q[x]/(x^M - 1), an oracle independent of the reduction modulo Phi_M.
std::vector<mpq_class> group_ring_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int64_t M) {
  std::vector<mpq_class> out(M, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[(i + j) % M] += a[i] * b[j];
  return out;
}

std::vector<mpq_class> random_poly(std::mt19937& rng, int64_t len) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c(len);
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return c;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials of small order") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
  }

  TEST_CASE("cyclotomic_poly agrees with the Mobius product and divides x^M - 1") {
    for (int64_t M = 1; M <= 64; ++M) {
      CAPTURE(M);
      const ZPoly phi = cyclotomic_poly(M);
      CHECK(phi == mobius_cyclotomic(M));
      CHECK(static_cast<int64_t>(phi.size()) - 1 == euler_phi(M));
      ZPoly xm(M + 1, 0);
      xm[0] = -1;
      xm[M] = 1;
      auto [q, r] = zdivmod(xm, phi);
      bool zero = true;
      for (auto& c : r) zero = zero && c == 0;
      CHECK(zero);
    }
  }

  TEST_CASE("field operations on examples") {
    const CycNum z4 = CycNum::zeta_power(4, 1);
    CHECK(cyc_arith(CycOp::mul, z4, &z4) == CycNum::from_int(4, -1));
    for (int64_t M : {1, 2, 3, 5, 8, 12}) CHECK(cyc_arith(CycOp::inv, CycNum::zeta_power(M, 1)) == CycNum::zeta_power(M, M - 1));
    const CycNum one_plus = CycNum::from_int(3, 1) + CycNum::zeta_power(3, 1);
    CHECK(one_plus.inverse() == -CycNum::zeta_power(3, 1));
    CHECK((one_plus * -CycNum::zeta_power(3, 1)).is_one());
    CHECK(cyc_arith(CycOp::neg, z4) == CycNum::zeta_power(4, 3));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(CycNum(5).inverse(), "division by zero", Error);
    const CycNum a = CycNum::from_int(4, 1), b = CycNum::from_int(8, 1);
    CHECK_THROWS_WITH_AS(a + b, "order mismatch", Error);
    CHECK_THROWS_WITH_AS(embed_root(6, RootOfUnity(4, 1)), "incompatible orders", Error);
  }

  TEST_CASE("embed_root examples") {
    CHECK(embed_root(5, RootOfUnity(5, 0)).is_one());
    CHECK(embed_root(2, RootOfUnity(2, 1)) == CycNum::from_int(2, -1));
    CHECK(embed_root(4, RootOfUnity(4, 2)) == CycNum::from_int(4, -1));
    CHECK(embed_root(12, RootOfUnity(4, 1)) == CycNum::zeta_power(12, 3));
  }

  TEST_CASE("root of unity arithmetic") {
    CHECK(RootOfUnity(4, 1) == RootOfUnity(8, 2));
    CHECK((RootOfUnity(4, 1) * RootOfUnity(6, 1)) == RootOfUnity(12, 5));
    CHECK(RootOfUnity(6, 2).multiplicative_order() == 3);
    CHECK(RootOfUnity(8, 3).pow(8).is_one());
    CHECK((RootOfUnity(5, 2) / RootOfUnity(5, 2)).is_one());
  }

  TEST_CASE("property: embed_root is multiplicative and has order dividing M") {
    std::mt19937 rng(11);
    for (int64_t M : {1, 2, 3, 4, 6, 8, 9, 12, 18, 32}) {
      std::uniform_int_distribution<int64_t> e(0, M - 1);
      for (int trial = 0; trial < 20; ++trial) {
        const RootOfUnity r(M, e(rng)), s(M, e(rng));
        CHECK(embed_root(M, r * s) == embed_root(M, r) * embed_root(M, s));
      }
      const CycNum z = embed_root(M, RootOfUnity(M, 1));
      CycNum acc = CycNum::from_int(M, 1);
      for (int64_t k = 0; k < M; ++k) acc = acc * z;
      CHECK(acc.is_one());
    }
  }

  TEST_CASE("property: mul/inv roundtrip and agreement with the group ring") {
    std::mt19937 rng(2024);
    for (int64_t M : {3, 4, 5, 7, 8, 9, 12, 15, 16, 24}) {
      for (int trial = 0; trial < 15; ++trial) {
        CAPTURE(M);
        const auto pa = random_poly(rng, M), pb = random_poly(rng, M);
        const CycNum a(M, pa), b(M, pb);
        CHECK(a * b == CycNum(M, group_ring_mul(pa, pb, M)));
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
          CHECK((a * a.inverse()).is_one());
          CHECK((a * b) / a == b);
        }
      }
    }
  }

  TEST_CASE("modular helpers") {
    CHECK(mod64(-1, 5) == 4);
    CHECK(inverse_mod(3, 8) == 3);
    CHECK_THROWS_AS(inverse_mod(2, 8), Error);
    CHECK(solve_linear_mod(4, 2, 6) == std::optional<int64_t>(2));
    CHECK_FALSE(solve_linear_mod(4, 1, 6).has_value());
    CHECK(euler_phi(72) == 24);
  }
}
