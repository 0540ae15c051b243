#include <random>
#include <set>

#include "doctest.h"
#include "hinv/abgroup.hpp"

using namespace hinv;

namespace {

// Brute-force bijectivity oracle.
bool bijective(const FinAbGroup& T, const GroupMap& A) {
  std::set<GroupElem> img;
  for (const GroupElem& g : T.elements()) img.insert(A.apply(g));
  return img.size() == T.cardinality();
}

GroupMap rows2(int64_t n, int64_t a, int64_t b, int64_t c, int64_t d) {
  const FinAbGroup T({n, n});
  return GroupMap::from_rows(T, T, {a, b, c, d});
}

}  // namespace

TEST_SUITE("abgroup") {
  TEST_CASE("descriptors") {
    CHECK(FinAbGroup::parse("Z4^2") == FinAbGroup({4, 4}));
    CHECK(FinAbGroup::parse("Z2^2xZ3^2") == FinAbGroup({2, 2, 3, 3}));
    CHECK(FinAbGroup::parse("Z4xZ2").cardinality() == 8);
    CHECK(FinAbGroup::parse("Z4^2xZ2^2").descriptor() == "Z4^2xZ2^2");
    CHECK_THROWS_AS(FinAbGroup::parse("Q4"), Error);
    CHECK_THROWS_AS(FinAbGroup::parse("Z0"), Error);
  }

  TEST_CASE("element orders") {
    const FinAbGroup T({4, 4});
    CHECK(element_order(T, T.make({1, 0})) == 4);
    CHECK(element_order(T, T.make({2, 2})) == 2);
    CHECK(element_order(T, T.zero()) == 1);
  }

  TEST_CASE("index and element are inverse") {
    const FinAbGroup T({4, 2, 3});
    for (size_t i = 0; i < T.cardinality(); ++i) CHECK(T.index(T.element(i)) == i);
  }

  TEST_CASE("is_automorphism examples") {
    for (int64_t n = 2; n <= 6; ++n) {
      const FinAbGroup T({n, n});
      CHECK(is_automorphism(T, GroupMap::identity(T)));
      CHECK(is_automorphism(T, rows2(n, 1, 1, 0, 1)));
      CHECK(bijective(T, rows2(n, 1, 1, 0, 1)));
    }
    CHECK_FALSE(is_automorphism(FinAbGroup({4, 4}), rows2(4, 2, 0, 0, 1)));
    const FinAbGroup W({4, 2});
    CHECK(is_automorphism(W, GroupMap::negation(W)));
  }

  TEST_CASE("automorphism counts") {
    CHECK(enumerate_automorphisms(FinAbGroup({2, 2})).size() == 6);
    CHECK(enumerate_automorphisms(FinAbGroup({3, 3})).size() == 48);
    CHECK(enumerate_automorphisms(FinAbGroup({3, 3}), AutFilter{2, 0}).size() == 12);
    CHECK_THROWS_WITH_AS(enumerate_automorphisms(FinAbGroup({65, 65})), "group too large", Error);
  }

  TEST_CASE("property: enumerated automorphisms agree with brute force and have inverses") {
    for (const FinAbGroup& T : {FinAbGroup({2, 2}), FinAbGroup({3, 3}), FinAbGroup({4, 2}), FinAbGroup({4, 4})}) {
      const auto auts = enumerate_automorphisms(T);
      const std::set<GroupMap> all(auts.begin(), auts.end());
      CHECK(all.size() == auts.size());
      // exhaustive matrix scan as oracle
      size_t count = 0;
      const size_t r = T.rank();
      std::vector<int64_t> cells(r * r, 0);
      for (;;) {
        std::vector<std::vector<int64_t>> cols(r, std::vector<int64_t>(r));
        for (size_t j = 0; j < r; ++j)
          for (size_t i = 0; i < r; ++i) cols[j][i] = cells[j * r + i];
        GroupMap A(T, T, cols);
        if (A.is_well_defined() && bijective(T, A)) {
          ++count;
          CHECK(all.count(A) == 1);
        }
        size_t k = 0;
        while (k < cells.size() && ++cells[k] == T.order(k % r)) cells[k++] = 0;
        if (k == cells.size()) break;
      }
      CHECK(count == auts.size());
      for (const GroupMap& A : auts) {
        const GroupMap B = inverse_automorphism(A);
        CHECK(all.count(B) == 1);
        CHECK(A.compose(B) == GroupMap::identity(T));
        CHECK(B.compose(A) == GroupMap::identity(T));
      }
    }
  }

  TEST_CASE("characters") {
    for (int64_t n = 2; n <= 5; ++n) CHECK(characters(FinAbGroup({n, n})).size() == static_cast<size_t>(n * n));
    const FinAbGroup V({2, 2});
    const auto chars = characters(V);
    for (const GroupElem& g : V.elements()) CHECK(chars.front()(g).is_one());
    Character chi{{RootOfUnity(2, 1), RootOfUnity(2, 0)}};
    CHECK(chi(V.make({1, 1})) == RootOfUnity(2, 1));
  }

  TEST_CASE("property: characters separate points and are multiplicative") {
    for (const FinAbGroup& T : {FinAbGroup({2, 2}), FinAbGroup({4, 2}), FinAbGroup({3, 3}), FinAbGroup({6, 6})}) {
      const auto chars = characters(T);
      for (const GroupElem& g : T.elements()) {
        if (g == T.zero()) continue;
        bool separated = false;
        for (const Character& c : chars) separated = separated || !c(g).is_one();
        CHECK(separated);
      }
      std::mt19937 rng(7);
      std::uniform_int_distribution<size_t> pick(0, T.cardinality() - 1);
      for (int trial = 0; trial < 30; ++trial) {
        const GroupElem g = T.element(pick(rng)), h = T.element(pick(rng));
        const Character& c = chars[pick(rng) % chars.size()];
        CHECK(c(T.add(g, h)) == c(g) * c(h));
      }
    }
  }

  TEST_CASE("split_by_primes") {
    const FinAbGroup T({6, 6});
    const GroupMap tau = rows2(6, 1, 5, 2, 5);
    const auto parts = split_by_primes(T, tau);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].group == FinAbGroup({2, 2}));
    CHECK(parts[1].group == FinAbGroup({3, 3}));
    CHECK(parts[0].map.row_major() == std::vector<int64_t>{1, 1, 0, 1});
    CHECK(parts[1].map.row_major() == std::vector<int64_t>{1, 2, 2, 2});
    CHECK(crt_reassemble(T, parts) == tau);

    const FinAbGroup P({4, 4});
    const auto single = split_by_primes(P, rows2(4, 1, 0, 0, 3));
    REQUIRE(single.size() == 1);
    CHECK(single[0].group == P);
  }

  TEST_CASE("property: CRT reassembly is the identity on automorphisms of Z6^2 and Z12^2") {
    std::mt19937 rng(99);
    for (int64_t n : {6, 12}) {
      const FinAbGroup T({n, n});
      std::uniform_int_distribution<int64_t> e(0, n - 1);
      int tested = 0;
      while (tested < 40) {
        const GroupMap tau = rows2(n, e(rng), e(rng), e(rng), e(rng));
        if (!is_automorphism(T, tau)) continue;
        ++tested;
        const auto parts = split_by_primes(T, tau);
        CHECK(crt_reassemble(T, parts) == tau);
        for (const auto& part : parts)
          for (size_t c = 0; c < part.group.rank(); ++c) {
            const GroupElem x = part.group.generator(c);
            CHECK(embed_component(T, part, part.map.apply(x)) == tau.apply(embed_component(T, part, x)));
          }
      }
    }
  }

  TEST_CASE("factorize") {
    CHECK(factorize(12) == std::vector<std::pair<int64_t, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(7) == std::vector<std::pair<int64_t, int>>{{7, 1}});
  }
}
