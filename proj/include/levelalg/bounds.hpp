// Closed-form upper bounds for the entries of a type-2 level h-vector and
// the power-sum recipes that attain them.
#ifndef LEVELALG_BOUNDS_HPP
#define LEVELALG_BOUNDS_HPP

#include "levelalg/invsys.hpp"

#include <optional>

namespace levelalg {

/// One generator built as `count` generic e-th powers supported on the
/// first `width` variables; axis_only pins the single pure power y_r^e.
struct GeneratorRecipe {
  int width = 0;
  long long count = 0;
  bool axis_only = false;
  std::string to_string() const;
};

struct WitnessRecipe {
  std::vector<GeneratorRecipe> generators;
  bool available = true;
  std::string note; // e.g. "no witness recipe in paper" for b < a cases
  std::string to_string() const;
};

struct BoundReport {
  std::string index;                     // which entry the report describes
  Int upper;
  std::optional<Int> lower;
  std::optional<std::pair<Int, Int>> attainable_range;
  WitnessRecipe recipe;
};

/// max of C(r1-1+i,i) + C(r2-1+i,i) over r1+r2 = a, 1 <= r1,r2 <= r.
Int lemma34_max(int r, int a, int i);

/// Direct maximization over every split; the oracle for lemma34_max.
Int lemma34_bruteforce(int r, int a, int i);

/// Range for the next-to-last entry a: upper 2r always, lower r when r <= 7.
BoundReport a_range(int r);

/// Bound and attainable range for the third-last entry b.
BoundReport b_bound(int r, int a, int e);

/// Per-entry maximum for h_{e-i}, 2 <= i <= e-2. The a = r case requires
/// 2 <= r <= 5 and refuses otherwise.
Int entry_upper(int r, int a, int e, int i);

/// Entrywise-maximal h-vector together with its simultaneous witness recipe.
std::pair<HVector, WitnessRecipe> max_hvector(int r, int a, int e);

/// The expected module h-vector of a two-generator power-sum recipe.
HVector recipe_expected_hvector(const WitnessRecipe& recipe, int r, int e);

/// Builds a recipe and certifies it against `expected` (h-vector plus level
/// type-2 socle); redraws up to `budget` times.
InverseModule realize_recipe(const WitnessRecipe& recipe, int r, int e,
                             const HVector& expected, unsigned long long seed,
                             int budget = 8);

/// Witness module for max_hvector(r, a, e).
InverseModule realize_max(int r, int a, int e, unsigned long long seed, int budget = 8);

} // namespace levelalg

#endif
