#include <random>

#include "doctest.h"
#include "hinv/serialize.hpp"

using namespace hinv;

TEST_SUITE("serialize") {
  TEST_CASE("roots and cyclotomic numbers") {
    CHECK(to_json(RootOfUnity(8, 3)).dump() == R"({"M":8,"e":3})");
    CHECK(root_from_json(json::parse(R"({"M":8,"e":11})")) == RootOfUnity(8, 3));
    const CycNum c(6, {mpq_class(1, 2), mpq_class(-3, 4)});
    CHECK(to_json(c).dump() == R"({"M":6,"coeffs":["1/2","-3/4"]})");
    CHECK(cyc_from_json(to_json(c)) == c);
    CHECK_THROWS_AS(cyc_from_json(json::parse(R"({"M":4,"coeffs":["x"]})")), Error);
  }

  TEST_CASE("property: random cyclotomic numbers roundtrip") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int64_t M : {1, 4, 5, 8, 12, 18}) {
      for (int k = 0; k < 20; ++k) {
        std::vector<mpq_class> cs;
        for (int64_t i = 0; i < M; ++i) {
          const int den = std::abs(d(rng)) + 1;
          cs.emplace_back(d(rng), den);
          cs.back().canonicalize();
        }
        const CycNum x(M, cs);
        CHECK(cyc_from_json(json::parse(to_json(x).dump())) == x);
      }
    }
  }

  TEST_CASE("maps and homogeneous data") {
    const FinAbGroup T({2, 2});
    const GroupMap f = GroupMap::from_rows(T, T, {1, 0, 1, 1});
    CHECK(to_json(f).dump() == "[[1,1],[0,1]]");
    CHECK(map_from_json(T, T, to_json(f)) == f);
    CHECK_THROWS_AS(map_from_json(T, T, json::parse("[[1,1]]")), Error);
    CHECK_THROWS_AS(map_from_json(FinAbGroup({2}), FinAbGroup({4}), json::parse("[[1]]")), Error);

    const HomMapData m = pauli_map(4, {1, 2, 2, -1}, 32, 8, 8);
    const HomMapData back = hom_map_from_json(json::parse(to_json(m).dump()));
    CHECK(back.tau == m.tau);
    CHECK(back.lambda == m.lambda);
    CHECK(back.shape.pair_orders == m.shape.pair_orders);
    CHECK(back.mode == m.mode);
  }

  TEST_CASE("factor sets") {
    const FactorSet s = FactorSet::standard(SymplecticShape::pauli(2), 2);
    const json j = to_json(s);
    CHECK(j["group"] == "Z2^2");
    CHECK(j["table"].size() == 16);
  }

  TEST_CASE("involution data roundtrip") {
    const FinAbGroup V({2, 2});
    InvolutionDatum d{V, GroupMap::identity(V), V.make({1, 0}), DivisionData{}, Gamma{{V.zero(), V.make({0, 1})}, {}, {}},
                      {}, FormKind::orthogonal};
    d.division.shape = SymplecticShape::pauli(2);
    d.division.psi0 = pauli_map(2, {1, 0, 0, -1}, 2, 0, 0);
    d.division.embed = GroupMap::identity(V);
    d.t_seq = {V.make({1, 0}), V.make({1, 0})};
    const json j = to_json(d);
    const InvolutionDatum e = datum_from_json(json::parse(j.dump()));
    CHECK(to_json(e) == j);
    CHECK(validate_datum(e));

    json bad = j;
    bad["kind"] = "unitary";
    CHECK_THROWS_AS(datum_from_json(bad), Error);
    bad = j;
    bad.erase("g0");
    CHECK_THROWS_WITH_AS(datum_from_json(bad), "missing field \"g0\"", Error);
  }

  TEST_CASE("classification documents") {
    const ClassificationReport r = classify_pauli(2);
    const json j = result_to_json(r);
    CHECK(j["equivalence_classes"] == 3);
    CHECK(j["orbits"][0]["isomorphism_classes"] == 4);
    CHECK(j["involutions"].size() == r.records.size());
    const std::string csv = report_to_csv(r);
    CHECK(csv.rfind("orbit,lambda_a,lambda_b,iso_class,equiv_class\ntheta1,0,0,0,0\n", 0) == 0);
    CHECK(report_to_text(r).find("match: yes") != std::string::npos);
    CHECK(to_json(r.expected, 2, 8)["equivalence_classes"] == 3);
  }
}
