// Exact rational linear algebra: fraction-free rank, RREF, nullspace.
#ifndef LEVELALG_LINALG_HPP
#define LEVELALG_LINALG_HPP

#include "levelalg/ints.hpp"

namespace levelalg {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

/// Rank via fraction-free (Bareiss) elimination after clearing denominators.
int rank(const QMat& m);

/// Reduced row echelon form; returns the non-zero rows and their pivot columns.
/// Deterministic: pivots chosen left to right, rows sorted by pivot column.
struct Rref {
  QMat rows;
  std::vector<int> pivots;
};
Rref rref(const QMat& m);

/// Basis of the right kernel {v : m v = 0}, one canonical vector per free column.
QMat nullspace(const QMat& m, int ncols);

/// True if the two row spans coincide (compared via RREF).
bool same_span(const QMat& a, const QMat& b);

/// Rank of the matrix reduced modulo a fixed 61-bit prime: a certified
/// LOWER bound on the rational rank (never larger). Falls back to a second
/// prime, then to exact elimination, if a denominator degenerates.
long long rank_mod_lower(const QMat& m);

} // namespace levelalg

#endif
