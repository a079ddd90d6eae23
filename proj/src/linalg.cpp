#include "levelalg/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace levelalg {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Scale every row to integers and strip its content.
std::vector<std::vector<Int>> integerize(const QMat& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Int den = 1;
    for (const auto& x : row)
      if (!x.is_zero()) den = lcm(den, Int(denominator(x)));
    std::vector<Int> irow(row.size());
    Int content = 0;
    for (size_t j = 0; j < row.size(); ++j) {
      irow[j] = Int(numerator(row[j])) * (den / Int(denominator(row[j])));
      content = gcd(content, irow[j]);
    }
    if (content > 1)
      for (auto& x : irow) x /= content;
    out.push_back(std::move(irow));
  }
  return out;
}

} // namespace

int rank(const QMat& m) {
  auto a = integerize(m);
  const int nr = static_cast<int>(a.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(a[0].size());
  Int prev = 1;
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!a[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        Int t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        a[i][j] = t / prev; // exact by Bareiss
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

Rref rref(const QMat& m) {
  QMat a = m;
  const int nr = static_cast<int>(a.size());
  const int nc = nr ? static_cast<int>(a[0].size()) : 0;
  Rref out;
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!a[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rat inv = Rat(1) / a[r][col];
    for (int j = col; j < nc; ++j) a[r][j] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (int j = col; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rows.assign(a.begin(), a.begin() + r);
  return out;
}

QMat nullspace(const QMat& m, int ncols) {
  // fraction-free echelon, then exact back-substitution per free column;
  // the basis is the canonical one (unit at the free column, zero at the
  // other free columns)
  auto a = integerize(m);
  const int nr = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  {
    Int prev = 1;
    int r = 0;
    for (int col = 0; col < ncols && r < nr; ++col) {
      int piv = -1;
      for (int i = r; i < nr; ++i)
        if (!a[i][col].is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      for (int i = r + 1; i < nr; ++i) {
        for (int j = col + 1; j < ncols; ++j) a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
        a[i][col] = 0;
      }
      prev = a[r][col];
      pivot_col.push_back(col);
      ++r;
    }
  }
  const int rank_ = static_cast<int>(pivot_col.size());
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivot_col) is_pivot[p] = true;
  QMat basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rat(0));
    v[free] = 1;
    for (int k = rank_ - 1; k >= 0; --k) {
      Rat acc = a[k][free];
      for (int j = k + 1; j < rank_; ++j) {
        if (!v[pivot_col[j]].is_zero() && !a[k][pivot_col[j]].is_zero())
          acc += Rat(a[k][pivot_col[j]]) * v[pivot_col[j]];
      }
      v[pivot_col[k]] = -acc / Rat(a[k][pivot_col[k]]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_span(const QMat& a, const QMat& b) {
  if (a.empty() && b.empty()) return true;
  Rref ra = rref(a), rb = rref(b);
  return ra.pivots == rb.pivots && ra.rows == rb.rows;
}

namespace {

struct BadPrime : std::runtime_error {
  BadPrime() : std::runtime_error("denominator vanishes modulo the prime") {}
};

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
  return static_cast<unsigned long long>((__uint128_t)a * b % p);
}

unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long p) {
  unsigned long long out = 1;
  while (e) {
    if (e & 1) out = mulmod(out, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return out;
}

unsigned long long reduce_int(const Int& v, unsigned long long p) {
  Int r = v % Int(p);
  if (r < 0) r += Int(p);
  return static_cast<unsigned long long>(r);
}

long long rank_mod(const QMat& m, unsigned long long p) {
  const int nr = static_cast<int>(m.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(m[0].size());
  std::vector<std::vector<unsigned long long>> a(nr, std::vector<unsigned long long>(nc));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) {
      const Rat& x = m[i][j];
      if (x.is_zero()) continue;
      unsigned long long den = reduce_int(Int(denominator(x)), p);
      if (den == 0) throw BadPrime();
      a[i][j] = mulmod(reduce_int(Int(numerator(x)), p), powmod(den, p - 2, p), p);
    }
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (a[i][col]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    unsigned long long inv = powmod(a[r][col], p - 2, p);
    for (int i = r + 1; i < nr; ++i) {
      if (!a[i][col]) continue;
      unsigned long long f = mulmod(a[i][col], inv, p);
      for (int j = col; j < nc; ++j)
        a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    ++r;
  }
  return r;
}

} // namespace

long long rank_mod_lower(const QMat& m) {
  static const unsigned long long primes[] = {2305843009213693951ULL /* 2^61-1 */,
                                              9223372036854775783ULL};
  for (unsigned long long p : primes) {
    try {
      return rank_mod(m, p);
    } catch (const BadPrime&) {
    }
  }
  return rank(m);
}

} // namespace levelalg
