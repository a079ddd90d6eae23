// Resolution-side machinery: the Hilbert-series functional equation, Diesel
// admissibility for codimension-3 Gorenstein shapes, the first-syzygy
// classification for level (1,3,...,3,2), and a Koszul-homology Betti oracle.
#ifndef LEVELALG_BETTI_HPP
#define LEVELALG_BETTI_HPP

#include "levelalg/form.hpp"
#include "levelalg/hvector.hpp"

#include <map>
#include <optional>

namespace levelalg {

struct BettiTable {
  int codim = 0;
  std::map<std::pair<int, int>, long long> entries; // (i, j) -> beta_{i,j}
  std::optional<HVector> companion;

  long long beta(int i, int j) const;
  /// Multiset of degrees in the i-th module, sorted ascending.
  std::vector<int> degree_multiset(int i) const;
  std::string to_text() const;
  static BettiTable from_text(const std::string& text);
};

struct GorensteinShape {
  std::vector<int> q; // ascending generator degrees
  std::vector<int> p; // descending second-module degrees
  int e = 0;          // socle degree
};

struct FunctionalCheck {
  bool ok;
  std::vector<Int> residual; // lhs - rhs coefficients, trimmed
};

/// H(z)(1-z)^r against 1 + sum (-1)^i beta_{i,j} z^j, both as exact
/// integer polynomials.
FunctionalCheck functional_equation_check(const HVector& h, const BettiTable& b);

/// Thrice-iterated finite difference of T padded with zeros through e+3;
/// length e+4.
std::vector<long long> third_difference(const HVector& t);

struct DieselParams {
  int k = 0;        // least degree where T is not generic
  long long mu = 0; // 2*ceil(forced/2) - 1 over the negative differences
  std::map<int, long long> forced_generators;
  bool degenerate_codim = false; // T_1 < 3
};

/// pre: T symmetric with T_e = 1.
DieselParams diesel_params(const HVector& t);

struct DieselCheck {
  bool ok;
  std::vector<std::pair<std::string, bool>> conditions;
};

/// Evaluates every admissibility condition of the codim-3 Gorenstein
/// resolution-shape characterization, plus the functional equation.
DieselCheck diesel_check(const HVector& t, const GorensteinShape& shape);

/// First-syzygy degree multisets for a level h = (1,3,...,3,2): a single
/// multiset when j = h_{floor(e/2)} > 3, the two gamma branches when j = 3.
std::vector<std::vector<int>> thm44_first_module(const HVector& h);

/// Degreewise spans of the ideal generated by `gens` up to `cap`.
std::vector<std::vector<Form>> ideal_spans_from_generators(const std::vector<Form>& gens,
                                                           int cap);

/// Graded Betti numbers via homology of the Koszul complex on R/I, exact
/// ranks throughout. `ideal` holds a basis of I_d at index d, 0..cap.
BettiTable koszul_betti(const std::vector<std::vector<Form>>& ideal, int codim, int cap);

/// The Gotzmann defining equality, evaluated exactly.
bool gotzmann_check(int codim, int d, long long dimV, long long dimR1V);

/// Socle read off the last module: s_j = beta_{r, j+r}.
SocleVector socle_from_table(const BettiTable& b);

} // namespace levelalg

#endif
