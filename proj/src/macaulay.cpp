#include "levelalg/macaulay.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace levelalg {

Int BinomialExpansion::evaluate() const {
  Int total = 0;
  for (const auto& t : terms) total += binomial(t.top, t.bottom);
  return total;
}

bool BinomialExpansion::well_formed(long long lead_index) const {
  if (terms.empty()) return false;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].bottom != lead_index - static_cast<long long>(k)) return false;
    if (k > 0 && terms[k].top >= terms[k - 1].top) return false;
  }
  const auto& last = terms.back();
  return last.bottom >= 1 && last.top >= last.bottom;
}

std::string BinomialExpansion::to_string() const {
  std::ostringstream os;
  for (size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " + ";
    os << "C(" << terms[k].top << "," << terms[k].bottom << ")";
  }
  return os.str();
}

BinomialExpansion binomial_expand(const Int& n, long long i) {
  if (n < 1 || i < 1) throw std::invalid_argument("binomial_expand: need n >= 1, i >= 1");
  BinomialExpansion out;
  Int rest = n;
  long long bottom = i;
  while (rest > 0) {
    long long top;
    if (bottom == 1) {
      top = to_ll(rest); // C(top, 1) = top
    } else {
      // largest top with C(top, bottom) <= rest
      top = bottom;
      while (binomial(top + 1, bottom) <= rest) ++top;
    }
    out.terms.push_back({top, bottom});
    rest -= binomial(top, bottom);
    --bottom;
  }
  return out;
}

Int macaulay_upper(const Int& n, long long i) {
  if (i < 1) throw std::invalid_argument("macaulay_upper: need i >= 1");
  if (n < 0) throw std::invalid_argument("macaulay_upper: need n >= 0");
  if (n == 0) return 0;
  // memo for the small values the enumeration code hammers on
  static std::unordered_map<long long, Int> cache;
  const bool small = n <= 100000 && i <= 64;
  long long key = 0;
  if (small) {
    key = static_cast<long long>(n) * 64 + i;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int total = 0;
  for (const auto& t : binomial_expand(n, i).terms)
    total += binomial(t.top + 1, t.bottom + 1);
  if (small) cache.emplace(key, total);
  return total;
}

bool is_o_sequence_raw(const std::vector<long long>& s) {
  if (s.empty()) return true;
  if (s[0] != 1) return false;
  for (long long v : s)
    if (v < 0) return false;
  for (size_t d = 1; d + 1 < s.size(); ++d)
    if (Int(s[d + 1]) > macaulay_upper(Int(s[d]), static_cast<long long>(d))) return false;
  return true;
}

namespace {

// All exponent tuples of degree d in r variables, ascending lexicographic.
void tuples_rec(int r, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur.push_back(e);
    tuples_rec(r, d - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> degree_tuples(int r, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  tuples_rec(r, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

long long lex_growth_oracle(int codim, int d, long long dimV) {
  if (codim < 1 || d < 1) throw std::invalid_argument("lex_growth_oracle: need codim, d >= 1");
  Int full = ring_dim(codim, d);
  if (dimV < 0 || Int(dimV) > full)
    throw std::invalid_argument("lex_growth_oracle: dimV exceeds dim R_d");
  auto all = degree_tuples(codim, d);
  std::set<std::vector<int>> segment(all.begin(), all.begin() + dimV);
  std::set<std::vector<int>> grown;
  for (const auto& mono : segment) {
    for (int v = 0; v < codim; ++v) {
      auto up = mono;
      ++up[v];
      // keep the product only if every degree-d divisor stays in the segment
      bool survives = true;
      for (int w = 0; w < codim && survives; ++w) {
        if (up[w] == 0) continue;
        auto down = up;
        --down[w];
        if (!segment.count(down)) survives = false;
      }
      if (survives) grown.insert(up);
    }
  }
  return static_cast<long long>(grown.size());
}

} // namespace levelalg
