// Binomial expansions and Macaulay growth bounds.
#ifndef LEVELALG_MACAULAY_HPP
#define LEVELALG_MACAULAY_HPP

#include "levelalg/ints.hpp"

#include <string>

namespace levelalg {

/// The i-binomial expansion n = C(n_i,i) + C(n_{i-1},i-1) + ... + C(n_j,j),
/// with n_i > n_{i-1} > ... > n_j >= j >= 1.
struct BinomialExpansion {
  struct Term {
    long long top;
    long long bottom;
  };
  std::vector<Term> terms;

  Int evaluate() const;
  /// True iff tops strictly decrease, bottoms step down by exactly one from
  /// the leading index, and the last term has top >= bottom >= 1.
  bool well_formed(long long lead_index) const;
  std::string to_string() const;
};

/// Greedy unique i-binomial expansion. Requires n >= 1, i >= 1.
BinomialExpansion binomial_expand(const Int& n, long long i);

/// n^{<i>} = sum of C(n_t+1, t+1) over the expansion; 0 when n = 0.
Int macaulay_upper(const Int& n, long long i);

/// Macaulay growth test on a raw sequence: first entry 1, all entries
/// non-negative, and s[d+1] <= s[d]^{<d>} for 1 <= d <= len-2.
bool is_o_sequence_raw(const std::vector<long long>& s);

/// Brute-force growth oracle: the lexicographically first dimV exponent
/// tuples of degree d in `codim` variables, multiplied by every variable;
/// counts the degree-(d+1) monomials whose full degree-d shadow stays inside
/// the segment (the quotient growth of the segment ideal).
long long lex_growth_oracle(int codim, int d, long long dimV);

} // namespace levelalg

#endif
