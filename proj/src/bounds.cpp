#include "levelalg/bounds.hpp"

#include <sstream>

namespace levelalg {

std::string GeneratorRecipe::to_string() const {
  std::ostringstream os;
  if (axis_only) {
    os << "pure power of the last variable";
  } else {
    os << count << " generic power" << (count == 1 ? "" : "s") << " in " << width
       << " variable" << (width == 1 ? "" : "s");
  }
  return os.str();
}

std::string WitnessRecipe::to_string() const {
  if (!available) return "unavailable: " + note;
  std::ostringstream os;
  for (size_t k = 0; k < generators.size(); ++k) {
    if (k) os << " | ";
    os << generators[k].to_string();
  }
  return os.str();
}

Int lemma34_max(int r, int a, int i) {
  if (i < 1 || r < 2 || a < r || a > 2 * r)
    throw std::invalid_argument("lemma34_max: need i >= 1 and 2 <= r <= a <= 2r");
  if (a == r) return binomial(r - 2 + i, i) + 1;
  return binomial(r - 1 + i, i) + binomial(a - r - 1 + i, i);
}

Int lemma34_bruteforce(int r, int a, int i) {
  if (i < 1 || r < 2 || a < r || a > 2 * r)
    throw std::invalid_argument("lemma34_bruteforce: need i >= 1 and 2 <= r <= a <= 2r");
  Int best = -1;
  for (int r1 = 1; r1 <= r; ++r1) {
    int r2 = a - r1;
    if (r2 < 1 || r2 > r) continue;
    best = std::max(best, binomial(r1 - 1 + i, i) + binomial(r2 - 1 + i, i));
  }
  return best;
}

BoundReport a_range(int r) {
  if (r < 2) throw std::invalid_argument("a_range: r >= 2 required");
  BoundReport rep;
  rep.index = "a = h_{e-1}";
  rep.upper = 2 * r;
  if (r <= 7) {
    rep.lower = Int(r);
    rep.attainable_range = std::make_pair(Int(r), Int(2 * r));
  } else {
    rep.attainable_range = std::nullopt; // lower end open for r > 7
  }
  // a = d1 + d2: one generator a sum of d1 powers, the other of d2 powers
  rep.recipe.generators = {{r, /*count*/ 0, false}, {r, 0, false}};
  rep.recipe.note = "split a = d1 + d2 and use d1- and d2-fold generic power sums";
  return rep;
}

BoundReport b_bound(int r, int a, int e) {
  if (r < 2 || a < r || a > 2 * r || e < 3)
    throw std::invalid_argument("b_bound: need 2 <= r <= a <= 2r and e >= 3");
  BoundReport rep;
  rep.index = "b = h_{e-2}";
  if (a == r) {
    rep.upper = binomial(r, 2) + 1;
    rep.attainable_range = std::make_pair(Int(r), rep.upper);
    rep.recipe.generators = {{r - 1, /*b-1 powers*/ 0, false}, {r, 1, true}};
    rep.recipe.note = "F' = (b-1)-fold power sum in r-1 variables, G' = y_r^e";
  } else {
    rep.upper = std::min(binomial(r + 1, 2) + binomial(a - r + 1, 2),
                         binomial(r + e - 3, e - 2));
    rep.attainable_range = std::make_pair(Int(a), rep.upper);
    rep.recipe.generators = {{a - r, 0, false}, {r, 0, false}};
    rep.recipe.note = "incremental power-sum schedule: grow the r-variable "
                      "summand count, then the (a-r)-variable one";
  }
  return rep;
}

Int entry_upper(int r, int a, int e, int i) {
  if (i < 2 || i > e - 2) throw std::invalid_argument("entry_upper: need 2 <= i <= e-2");
  if (a < r || a > 2 * r) throw std::invalid_argument("entry_upper: need r <= a <= 2r");
  if (a == r) {
    if (r < 2 || r > 5)
      throw std::invalid_argument("entry_upper: hypothesis not met (a = r requires 2 <= r <= 5)");
    return std::min(binomial(r - 2 + i, i) + 1, binomial(r - 2 + e - i, e - i) + 1);
  }
  if (r < 2) throw std::invalid_argument("entry_upper: r >= 2 required");
  return std::min(binomial(r - 1 + i, i) + binomial(a - r - 1 + i, i),
                  binomial(r - 1 + e - i, e - i));
}

std::pair<HVector, WitnessRecipe> max_hvector(int r, int a, int e) {
  if (e < 4) throw std::invalid_argument("max_hvector: e >= 4 required");
  std::vector<long long> H(e + 1);
  H[0] = 1;
  H[1] = r;
  H[e - 1] = a;
  H[e] = 2;
  for (int i = 2; i <= e - 2; ++i) H[e - i] = to_ll(entry_upper(r, a, e, i));
  WitnessRecipe recipe;
  const int half = e / 2;
  if (a == r) {
    long long alpha = to_ll(binomial(r - 2 + half, half));
    recipe.generators = {{r - 1, alpha, false}, {r, 1, true}};
  } else {
    long long beta = to_ll(binomial(a - r - 1 + half, half));
    long long gamma = to_ll(binomial(r - 1 + half, half));
    recipe.generators = {{a - r, beta, false}, {r, gamma, false}};
  }
  return {HVector(H), recipe};
}

HVector recipe_expected_hvector(const WitnessRecipe& recipe, int r, int e) {
  std::vector<long long> H(e + 1);
  H[0] = 1;
  for (int i = 1; i < e; ++i) {
    Int total = 0;
    for (const auto& g : recipe.generators) {
      long long m = g.axis_only ? 1 : g.count;
      int width = g.axis_only ? 1 : g.width;
      total += power_block_dim(width, m, e, i);
    }
    H[i] = to_ll(std::min(total, ring_dim(r, i)));
  }
  H[e] = static_cast<long long>(recipe.generators.size());
  return HVector(H);
}

InverseModule realize_recipe(const WitnessRecipe& recipe, int r, int e,
                             const HVector& expected, unsigned long long seed,
                             int budget) {
  if (recipe.generators.size() != 2)
    throw std::invalid_argument("realize_recipe: two generators expected");
  for (int attempt = 0; attempt <= budget; ++attempt) {
    Sampler sampler(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::vector<Form> gens;
    bool bad = false;
    for (const auto& g : recipe.generators) {
      Form f(r, e);
      if (g.axis_only) {
        Exponent exp(r, 0);
        exp[r - 1] = e;
        f.add_term(exp, 1);
      } else {
        f = power_sum_raw(r, g.width, g.count, e, sampler);
      }
      if (f.is_zero()) bad = true;
      gens.push_back(std::move(f));
    }
    if (bad) continue;
    try {
      InverseModule m(std::move(gens));
      if (hvector_of_module(m) == expected && socle_vector(m).is_level() &&
          socle_vector(m).type() == 2)
        return m;
    } catch (const std::invalid_argument&) {
      continue; // dependent draw, redraw
    }
  }
  std::ostringstream os;
  os << "realize_recipe: could not certify recipe [" << recipe.to_string()
     << "] for r=" << r << " e=" << e << " within " << budget << " redraws";
  throw GenericityFailure(os.str());
}

InverseModule realize_max(int r, int a, int e, unsigned long long seed, int budget) {
  auto [H, recipe] = max_hvector(r, a, e);
  return realize_recipe(recipe, r, e, H, seed, budget);
}

} // namespace levelalg
