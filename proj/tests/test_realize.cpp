#include "doctest.h"
#include "hinv/realize.hpp"

using namespace hinv;

namespace {

CycNum C(int64_t M, int64_t v) { return CycNum::from_int(M, v); }

CycMatrix mat(int64_t M, std::vector<std::vector<int64_t>> rows) {
  CycMatrix out(rows.size(), rows[0].size(), M);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) out.at(i, j) = C(M, rows[i][j]);
  return out;
}

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("pauli_generators") {
    auto [X, Y] = pauli_generators(2, RootOfUnity(2, 1), 2);
    CHECK(X == mat(2, {{-1, 0}, {0, 1}}));
    CHECK(Y == mat(2, {{0, 1}, {1, 0}}));
    auto [X1, Y1] = pauli_generators(1, RootOfUnity(1, 0), 1);
    CHECK(X1 == CycMatrix::identity(1, 1));
    CHECK(Y1 == CycMatrix::identity(1, 1));
    auto [X3, Y3] = pauli_generators(3, RootOfUnity(3, 1), 3);
    CHECK(X3 * Y3 == (Y3 * X3).scaled(CycNum::zeta_power(3, 1)));
    CHECK_THROWS_AS(pauli_generators(3, RootOfUnity(6, 1), 6), Error);
  }

  TEST_CASE("realized bases") {
    const RealizedAlgebra R2 = realize_division_algebra(SymplecticShape::pauli(2));
    CHECK(R2.X(R2.T.make({1, 1})) == mat(R2.M, {{0, -1}, {1, 0}}));
    CHECK(R2.X(R2.T.zero()) == CycMatrix::identity(2, R2.M));
    const RealizedAlgebra R3 = realize_division_algebra(SymplecticShape::pauli(3));
    const CycMatrix& a = R3.X(R3.T.make({1, 0}));
    const CycMatrix& b = R3.X(R3.T.make({0, 1}));
    CHECK(a * b == (b * a).scaled(CycNum::zeta_power(R3.M, R3.M / 3)));
  }

  TEST_CASE("property: X_u X_v = sigma(u,v) X_{u+v}") {
    for (const SymplecticShape& s : {SymplecticShape::pauli(2), SymplecticShape::pauli(3), SymplecticShape::pauli(4),
                                     SymplecticShape{{2, 2}}, SymplecticShape{{4, 2}}}) {
      const RealizedAlgebra R = realize_division_algebra(s, 0, true);
      CHECK(R.product.size() == R.T.cardinality() * R.T.cardinality());
      for (const GroupElem& u : R.T.elements())
        for (const GroupElem& v : R.T.elements())
          CHECK(R.X(u) * R.X(v) == R.X(R.T.add(u, v)).scaled(CycNum::zeta_power(R.M, R.sigma.exp(u, v))));
      // presentation: X_c^l = 1 on generators
      for (size_t c = 0; c < R.T.rank(); ++c) {
        CycMatrix p = CycMatrix::identity(R.dim, R.M);
        for (int64_t k = 0; k < R.T.order(c); ++k) p = p * R.X(R.T.generator(c));
        CHECK(p == CycMatrix::identity(R.dim, R.M));
      }
    }
  }

  TEST_CASE("realized maps") {
    const HomMapData ex = pauli_map(2, {1, 0, 1, 1}, 4, 1, 0);
    const RealizedAlgebra R = realize_division_algebra(ex.shape, minimal_ambient(ex));
    const RealizedMap f = realize_hom_map(R, ex);
    const FinAbGroup& T = R.T;
    CHECK(f.images[T.index(T.make({1, 0}))] == R.X(T.make({1, 1})).scaled(CycNum::zeta_power(R.M, R.M / 4)));
    CHECK(f.images[T.index(T.make({0, 1}))] == R.X(T.make({0, 1})));
    CHECK(verify_map_properties(R, f, ex.tau, Mode::anti));

    // (theta1,1,1) at n = 2 is the transpose
    const HomMapData t = pauli_map(2, {1, 0, 0, -1}, 8, 0, 0);
    const RealizedAlgebra R8 = realize_division_algebra(t.shape, 8);
    const RealizedMap ft = realize_hom_map(R8, t);
    for (const GroupElem& g : R8.T.elements()) CHECK(ft.apply(R8, R8.X(g)) == R8.X(g).transpose());
    CHECK(realized_square_is_identity(R8, ft));

    const HomMapData th2 = pauli_map(2, {0, 1, 1, 0}, 8, 0, 0);
    CHECK(verify_map_properties(R8, realize_hom_map(R8, th2), th2.tau, Mode::anti));

    const HomMapData id = pauli_map(3, {1, 0, 0, 1}, 18, 0, 0, Mode::automorphism);
    const RealizedAlgebra R3 = realize_division_algebra(id.shape, 18);
    const RealizedMap fi = realize_hom_map(R3, id);
    for (const GroupElem& g : R3.T.elements()) CHECK(fi.apply(R3, R3.X(g)) == R3.X(g));
    CHECK(verify_map_properties(R3, fi, id.tau, Mode::automorphism));

    // lambda_b = zeta_18 breaks the power condition
    const HomMapData bad = pauli_map(3, {1, 0, 0, -1}, 18, 0, 1);
    CHECK_FALSE(check_homogeneous_map(bad));
    CHECK_FALSE(verify_map_properties(R3, realize_hom_map(R3, bad, false), bad.tau, Mode::anti));
    CHECK_THROWS_AS(realize_hom_map(R3, bad), Error);
  }

  TEST_CASE("form matrix reproduces the map") {
    for (int64_t n : {2, 3, 4}) {
      const HomMapData m = pauli_map(n, {1, 0, 0, -1}, 2 * n * n, 0, 0);
      const RealizedAlgebra R = realize_division_algebra(m.shape, minimal_ambient(m));
      const RealizedMap f = realize_hom_map(R, m);
      const CycMatrix Phi = find_form_matrix(R, f);
      const CycMatrix Pinv = *Phi.inverse();
      for (const GroupElem& g : R.T.elements()) CHECK(f.apply(R, R.X(g)) == Pinv * R.X(g).transpose() * Phi);
    }
  }

  TEST_CASE("matrix helpers") {
    const CycMatrix A = mat(3, {{1, 2}, {3, 4}});
    const auto inv = A.inverse();
    REQUIRE(inv.has_value());
    CHECK(A * *inv == CycMatrix::identity(2, 3));
    CHECK_FALSE(mat(3, {{1, 2}, {2, 4}}).inverse().has_value());
    CHECK(A.kron(CycMatrix::identity(2, 3)).rows() == 4);
    CHECK(mat(3, {{0, 1}, {1, 0}}).is_monomial());
    CHECK_FALSE(A.is_monomial());
  }
}
