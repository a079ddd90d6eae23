#include "doctest.h"

#include "levelalg/bounds.hpp"

using namespace levelalg;

TEST_CASE("lemma 3.4 closed form") {
  CHECK(lemma34_max(5, 5, 2) == 11);
  CHECK(lemma34_max(3, 5, 2) == 9);
  for (int r = 2; r <= 6; ++r)
    for (int i = 1; i <= 4; ++i)
      CHECK(lemma34_max(r, 2 * r, i) == 2 * binomial(r - 1 + i, i));
  CHECK_THROWS_AS(lemma34_max(3, 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma34_max(3, 2, 2), std::invalid_argument);
}

TEST_CASE("lemma 3.4 brute force") {
  CHECK(lemma34_bruteforce(5, 5, 2) == 11);
  CHECK(lemma34_bruteforce(3, 4, 3) == 11);
  CHECK(lemma34_bruteforce(2, 4, 1) == 4);
}

TEST_CASE("closed form equals brute force on the full grid") {
  for (int r = 2; r <= 8; ++r)
    for (int a = r; a <= 2 * r; ++a)
      for (int i = 1; i <= 6; ++i)
        CHECK(lemma34_max(r, a, i) == lemma34_bruteforce(r, a, i));
}

TEST_CASE("a-range reports") {
  auto r3 = a_range(3);
  CHECK(r3.upper == 6);
  REQUIRE(r3.lower.has_value());
  CHECK(*r3.lower == 3);
  CHECK(r3.attainable_range->first == 3);
  CHECK(r3.attainable_range->second == 6);

  auto r7 = a_range(7);
  CHECK(r7.upper == 14);
  CHECK(*r7.lower == 7);

  auto r8 = a_range(8);
  CHECK(r8.upper == 16);
  CHECK_FALSE(r8.lower.has_value());
}

TEST_CASE("b bounds") {
  CHECK(b_bound(3, 3, 4).upper == 4);
  CHECK(b_bound(3, 3, 7).upper == 4);
  CHECK(b_bound(2, 2, 5).upper == 2);
  // the b <= C(r+1,2) + C(a-r+1,2) branch, r = 52, a = 53, e = 6
  CHECK(b_bound(52, 53, 6).upper == Int(1379));
  CHECK(b_bound(52, 53, 6).attainable_range->first == 53);
  // the dim R_{e-2} branch binds for small e
  CHECK(b_bound(3, 6, 3).upper == binomial(3, 1));
}

TEST_CASE("entry upper bounds") {
  CHECK(entry_upper(5, 5, 8, 4) == 36);
  // both slots of Example 3.11 with a = 4: positions e-3 and e-4
  CHECK(entry_upper(3, 4, 7, 3) == 11);
  CHECK(entry_upper(3, 4, 7, 4) == 10);
  CHECK(entry_upper(3, 6, 7, 2) == 12);
  // a = r is symmetric in i <-> e-i
  for (int r = 2; r <= 5; ++r)
    for (int e = 4; e <= 8; ++e)
      for (int i = 2; i <= e - 2; ++i)
        CHECK(entry_upper(r, r, e, i) == entry_upper(r, r, e, e - i));
  CHECK_THROWS_AS(entry_upper(6, 6, 8, 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_upper(7, 7, 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(entry_upper(3, 4, 7, 1), std::invalid_argument);
}

TEST_CASE("maximal h-vectors (worked examples)") {
  CHECK(max_hvector(5, 5, 8).first == HVector({1, 5, 11, 21, 36, 21, 11, 5, 2}));
  CHECK(max_hvector(3, 3, 7).first == HVector({1, 3, 4, 5, 5, 4, 3, 2}));
  CHECK(max_hvector(3, 4, 7).first == HVector({1, 3, 6, 10, 11, 7, 4, 2}));
  CHECK(max_hvector(3, 5, 7).first == HVector({1, 3, 6, 10, 14, 9, 5, 2}));
  CHECK(max_hvector(3, 6, 7).first == HVector({1, 3, 6, 10, 15, 12, 6, 2}));
}

TEST_CASE("maximal h-vectors: structural invariants") {
  for (int r = 2; r <= 5; ++r)
    for (int a = r; a <= 2 * r; ++a)
      for (int e = 4; e <= 7; ++e) {
        auto [H, recipe] = max_hvector(r, a, e);
        CHECK(is_o_sequence(H));
        CHECK(H[1] == r);
        CHECK(H[e - 1] == a);
        CHECK(H[e] == 2);
        for (int i = 2; i <= e - 2; ++i) CHECK(Int(H[e - i]) == entry_upper(r, a, e, i));
      }
}

TEST_CASE("witness realization for the Example 3.11 maxima") {
  for (int a = 3; a <= 6; ++a) {
    auto [H, recipe] = max_hvector(3, a, 7);
    InverseModule m = realize_max(3, a, 7, 5);
    CHECK(hvector_of_module(m) == H);
    SocleVector s = socle_vector(m);
    CHECK(s.is_level());
    CHECK(s.type() == 2);
  }
}

TEST_CASE("b attainability for r = 3, e = 7: whole reported ranges") {
  const int r = 3, e = 7;
  for (int a = 3; a <= 6; ++a) {
    auto rep = b_bound(r, a, e);
    long long lo = to_ll(rep.attainable_range->first);
    long long hi = to_ll(rep.attainable_range->second);
    for (long long b = lo; b <= hi; ++b) {
      WitnessRecipe recipe;
      if (a == r) {
        recipe.generators = {{r - 1, b - 1, false}, {r, 1, true}};
      } else {
        long long cap_f = to_ll(binomial(r + 1, 2));
        long long mf = std::min<long long>(r + (b - a), cap_f);
        long long mg = std::max<long long>(a - r, b - cap_f);
        recipe.generators = {{a - r, mg, false}, {r, mf, false}};
      }
      HVector expected = recipe_expected_hvector(recipe, r, e);
      REQUIRE(expected[e - 2] == b);
      REQUIRE(expected[e - 1] == a);
      InverseModule m = realize_recipe(recipe, r, e, expected, 7 * b + a);
      CHECK(hvector_of_module(m)[e - 2] == b);
      CHECK(socle_vector(m).is_level());
    }
  }
}
