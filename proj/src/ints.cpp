#include "levelalg/ints.hpp"

namespace levelalg {

namespace {

// Pascal rows for the small arguments the enumeration code hammers on.
constexpr long long kPascalCap = 256;

const std::vector<std::vector<Int>>& pascal_table() {
  static const std::vector<std::vector<Int>> table = [] {
    std::vector<std::vector<Int>> t(kPascalCap + 1);
    for (long long n = 0; n <= kPascalCap; ++n) {
      t[n].resize(n + 1);
      t[n][0] = t[n][n] = 1;
      for (long long k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

} // namespace

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n <= kPascalCap) return pascal_table()[n][k];
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

Int ring_dim(int r, int d) {
  if (d < 0) return 0;
  return binomial(r - 1 + d, d);
}

long long ceil_div(long long p, long long q) {
  if (q <= 0) throw std::invalid_argument("ceil_div: q must be positive");
  long long d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

long long to_ll(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("value out of long long range");
  return static_cast<long long>(v);
}

} // namespace levelalg
