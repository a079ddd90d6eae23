#include "doctest.h"

#include "levelalg/hvector.hpp"

using namespace levelalg;

TEST_CASE("first difference") {
  CHECK(first_difference({1, 2, 3}) == std::vector<long long>{1, 1, 1});
  CHECK(first_difference({1, 3, 5}) == std::vector<long long>{1, 2, 2});
  CHECK(first_difference({1, 3, 2}) == std::vector<long long>{1, 2, -1});
}

TEST_CASE("is_differentiable") {
  CHECK(is_differentiable({1, 3, 5}));
  CHECK_FALSE(is_differentiable({1, 3, 2}));
  CHECK(is_differentiable({1}));
  CHECK_FALSE(is_differentiable({1, 3, 7})); // growth violation in the difference
}

TEST_CASE("reverse acts on the full window") {
  CHECK(reverse_window({1, 3, 3, 2}) == std::vector<long long>{2, 3, 3, 1});
  CHECK(reverse_window({0, 1, 1, 1}) == std::vector<long long>{1, 1, 1, 0});
  CHECK(reverse_window({1}) == std::vector<long long>{1});
}

TEST_CASE("SI sequences") {
  CHECK(is_si_sequence(HVector({1, 3, 4, 4, 3, 1})));
  CHECK_FALSE(is_si_sequence(HVector({1, 3, 2, 3, 1})));
  CHECK(is_si_sequence(HVector({1, 1, 1, 1})));
  CHECK_FALSE(is_si_sequence(HVector({1, 3, 4, 3, 2})));
  // SI-ness is invariant under storing the reversed window (self-dual)
  CHECK(is_si_sequence(HVector({1, 3, 4, 4, 3, 1})) ==
        is_si_sequence(HVector(reverse_window({1, 3, 4, 4, 3, 1}))));
}

TEST_CASE("Gorenstein verdicts") {
  CHECK(is_gorenstein_hvector(HVector({1, 3, 4, 5, 5, 4, 3, 1})) == GorVerdict::Yes);
  CHECK(is_gorenstein_hvector(HVector({1, 3, 2, 3, 1})) == GorVerdict::No);
  CHECK(is_gorenstein_hvector(HVector({1, 3, 5, 3, 1})) == GorVerdict::Yes);
  CHECK(is_gorenstein_hvector(HVector({1, 5, 5, 1})) == GorVerdict::Unknown);
  CHECK(is_gorenstein_hvector(HVector({1, 4, 7, 7, 4, 1})) == GorVerdict::Yes);
  CHECK(is_gorenstein_hvector(HVector({1, 4, 8, 8, 4, 1})) == GorVerdict::Unknown);
  // never Yes on a non-symmetric input
  CHECK(is_gorenstein_hvector(HVector({1, 3, 4, 3, 2})) == GorVerdict::No);
  CHECK(is_gorenstein_hvector(HVector({1, 2, 2})) == GorVerdict::No);
}

TEST_CASE("codim-2 Gorenstein plus (0,1,...,1,0) closure") {
  for (int e = 2; e <= 8; ++e) {
    for (long long m = 2; m <= e / 2 + 1; ++m) {
      std::vector<long long> g(e + 1);
      for (int j = 0; j <= e; ++j)
        g[j] = std::min<long long>(m, std::min(j + 1, e - j + 1));
      std::vector<long long> v = g;
      for (int j = 1; j < e; ++j) ++v[j];
      HVector sum(v);
      CHECK((is_gorenstein_hvector(sum) == GorVerdict::Yes) == is_si_sequence(sum));
    }
  }
}

TEST_CASE("two-part decompositions contain the documented pairs") {
  auto has_pair = [](const std::vector<DecompositionPair>& pairs,
                     const std::vector<long long>& g, const std::vector<long long>& tail) {
    for (const auto& p : pairs)
      if (p.g.entries() == g && p.tail == tail) return true;
    return false;
  };

  auto p1 = two_part_decompositions(HVector({1, 3, 6, 10, 9, 7, 5, 2}));
  CHECK(has_pair(p1, {1, 3, 4, 5, 5, 4, 3, 1}, {0, 0, 2, 5, 4, 3, 2, 1}));

  auto p2 = two_part_decompositions(HVector({1, 3, 3, 3, 2}));
  CHECK(has_pair(p2, {1, 2, 2, 2, 1}, {0, 1, 1, 1, 1}));

  auto p3 = two_part_decompositions(HVector({1, 2, 2}));
  CHECK(has_pair(p3, {1, 1, 1}, {0, 1, 1}));

  CHECK_THROWS_AS(two_part_decompositions(HVector({1, 3, 3, 1})), std::invalid_argument);
}

TEST_CASE("decomposition pairs satisfy their invariants and are sorted") {
  for (const auto& h : {HVector({1, 3, 6, 10, 9, 7, 5, 2}), HVector({1, 4, 4, 4, 2}),
                        HVector({1, 3, 3, 3, 2})}) {
    auto pairs = two_part_decompositions(h);
    for (size_t k = 0; k < pairs.size(); ++k) {
      const auto& p = pairs[k];
      for (int i = 0; i <= h.socle_degree(); ++i)
        CHECK(p.g[i] + p.tail[i] == h[i]);
      CHECK(is_o_sequence_raw(reverse_window(p.tail)));
      CHECK(p.g[h.socle_degree()] == 1);
      if (k) CHECK(pairs[k - 1].g < p.g);
    }
    CHECK(!pairs.empty());
  }
}
