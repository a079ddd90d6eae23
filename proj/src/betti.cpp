#include "levelalg/betti.hpp"

#include "levelalg/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace levelalg {

long long BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<int> BettiTable::degree_multiset(int i) const {
  std::vector<int> out;
  for (const auto& [key, mult] : entries)
    if (key.first == i)
      for (long long s = 0; s < mult; ++s) out.push_back(key.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::string BettiTable::to_text() const {
  std::ostringstream os;
  os << "# codim " << codim;
  if (companion) {
    os << " h ";
    const auto& e = companion->entries();
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  }
  os << "\n";
  for (const auto& [key, mult] : entries)
    if (mult != 0) os << key.first << " " << key.second << " " << mult << "\n";
  return os.str();
}

BettiTable BettiTable::from_text(const std::string& text) {
  BettiTable out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string word;
      while (hs >> word) {
        if (word == "codim") hs >> out.codim;
        else if (word == "h") {
          std::string vec;
          hs >> vec;
          std::vector<long long> entries;
          std::istringstream vs(vec);
          std::string tok;
          while (std::getline(vs, tok, ',')) entries.push_back(std::stoll(tok));
          out.companion = HVector(entries);
        }
      }
      continue;
    }
    std::istringstream ls(line);
    int i, j;
    long long mult;
    if (!(ls >> i >> j >> mult)) throw std::invalid_argument("betti table parse error: " + line);
    if (mult != 0) out.entries[{i, j}] += mult;
  }
  return out;
}

namespace {

// coefficients of P(z) * (1-z)^r
std::vector<Int> times_power_of_one_minus_z(const std::vector<Int>& p, int r) {
  std::vector<Int> out(p.size() + r, Int(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (int k = 0; k <= r; ++k) {
      Int c = binomial(r, k);
      if (k % 2) c = -c;
      out[i + k] += p[i] * c;
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

} // namespace

FunctionalCheck functional_equation_check(const HVector& h, const BettiTable& b) {
  std::vector<Int> lhs;
  for (long long v : h.entries()) lhs.push_back(Int(v));
  lhs = times_power_of_one_minus_z(lhs, b.codim);

  std::vector<Int> rhs{Int(1)};
  for (const auto& [key, mult] : b.entries) {
    auto [i, j] = key;
    if (j < 0) throw std::invalid_argument("functional_equation_check: negative degree");
    if (static_cast<size_t>(j) >= rhs.size()) rhs.resize(j + 1, Int(0));
    Int c = Int(mult);
    if (i % 2) c = -c;
    rhs[j] += c;
  }
  while (!rhs.empty() && rhs.back().is_zero()) rhs.pop_back();

  FunctionalCheck out;
  out.residual.assign(std::max(lhs.size(), rhs.size()), Int(0));
  for (size_t i = 0; i < lhs.size(); ++i) out.residual[i] += lhs[i];
  for (size_t i = 0; i < rhs.size(); ++i) out.residual[i] -= rhs[i];
  while (!out.residual.empty() && out.residual.back().is_zero()) out.residual.pop_back();
  out.ok = out.residual.empty();
  return out;
}

std::vector<long long> third_difference(const HVector& t) {
  const int e = t.socle_degree();
  std::vector<long long> d(e + 4);
  auto at = [&](int i) { return (i >= 0 && i <= e) ? t[i] : 0; };
  for (int i = 0; i <= e + 3; ++i)
    d[i] = at(i) - 3 * at(i - 1) + 3 * at(i - 2) - at(i - 3);
  return d;
}

DieselParams diesel_params(const HVector& t) {
  const int e = t.socle_degree();
  for (int i = 0; i <= e; ++i)
    if (t[i] != t[e - i]) throw std::invalid_argument("diesel_params: T must be symmetric");
  if (t[e] != 1) throw std::invalid_argument("diesel_params: T_e = 1 required");
  DieselParams out;
  out.degenerate_codim = t[1] < 3;
  out.k = 0;
  for (int i = 0; i <= e; ++i)
    if (Int(t[i]) < ring_dim(3, i)) { out.k = i; break; }
  auto d = third_difference(t);
  long long neg = 0;
  for (int i = 1; i < e + 3; ++i) // exclude the top socle entry d_{e+3}
    if (d[i] < 0) {
      out.forced_generators[i] = -d[i];
      neg += -d[i];
    }
  out.mu = 2 * ceil_div(neg, 2) - 1;
  return out;
}

DieselCheck diesel_check(const HVector& t, const GorensteinShape& shape) {
  const int e = t.socle_degree();
  const int n = static_cast<int>(shape.q.size());
  DieselCheck out;
  auto record = [&](const std::string& name, bool ok) {
    out.conditions.emplace_back(name, ok);
  };
  if (n == 0 || shape.p.size() != shape.q.size())
    throw std::invalid_argument("diesel_check: malformed shape");
  for (int i = 0; i + 1 < n; ++i) {
    if (shape.q[i] > shape.q[i + 1] || shape.p[i] < shape.p[i + 1])
      throw std::invalid_argument("diesel_check: q must ascend and p descend");
  }
  DieselParams params = diesel_params(t);

  bool pairing = true;
  for (int i = 0; i < n; ++i)
    if (shape.p[i] + shape.q[i] != e + 3) pairing = false;
  record("p_i + q_i = e + 3", pairing);

  record("n odd", n % 2 == 1);
  record("mu <= n <= 2k + 1", params.mu <= n && n <= 2 * params.k + 1);

  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = shape.p[i] - shape.q[i];
  record("r_1 > 0", r[0] > 0);
  bool gaps = true;
  for (int i = 2; i <= (n + 1) / 2; ++i)
    if (r[i - 1] + r[n - i + 1] <= 0) gaps = false;
  record("r_i + r_{n-i+2} > 0", gaps);

  BettiTable b;
  b.codim = 3;
  for (int i = 0; i < n; ++i) {
    b.entries[{1, shape.q[i]}] += 1;
    b.entries[{2, shape.p[i]}] += 1;
  }
  b.entries[{3, e + 3}] = 1;
  record("functional equation", functional_equation_check(t, b).ok);

  out.ok = true;
  for (const auto& [_, ok] : out.conditions) out.ok = out.ok && ok;
  return out;
}

std::vector<std::vector<int>> thm44_first_module(const HVector& h) {
  const int e = h.socle_degree();
  if (h.codim() != 3 || h[e] != 2 || h[e - 1] != 3)
    throw std::invalid_argument("thm44_first_module: h must have the shape (1,3,...,3,2)");
  std::vector<long long> g(e + 1);
  g[0] = 1;
  for (int i = 1; i <= e; ++i) g[i] = h[i] - 1;
  for (long long v : g)
    if (v < 0) throw std::invalid_argument("thm44_first_module: h is not level");
  if (is_gorenstein_hvector(HVector(g)) != GorVerdict::Yes)
    throw std::invalid_argument("thm44_first_module: h is not a level h-vector");
  const long long j = h[e / 2];
  if (j > 3) {
    std::vector<int> f1{2, 2, static_cast<int>(j - 1), static_cast<int>(e - j + 3), e + 1};
    std::sort(f1.begin(), f1.end());
    return {f1};
  }
  return {{2, 2, 2, e}, {2, 2, 2, e, e + 1}};
}

std::vector<std::vector<Form>> ideal_spans_from_generators(const std::vector<Form>& gens,
                                                           int cap) {
  if (gens.empty()) throw std::invalid_argument("ideal_spans_from_generators: no generators");
  const int r = gens[0].num_vars();
  std::vector<std::vector<Form>> out(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    QMat rows;
    for (const auto& g : gens) {
      if (g.num_vars() != r) throw std::invalid_argument("mixed variable counts");
      const int rest = d - g.degree();
      if (rest < 0) continue;
      for (const auto& mono : monomial_basis(r, rest)) {
        Form m(r, rest);
        m.add_term(mono, 1);
        rows.push_back(coefficient_row(g * m));
      }
    }
    if (rows.empty()) continue;
    Rref rr = rref(rows);
    const auto& basis = monomial_basis(r, d);
    for (const auto& row : rr.rows) {
      Form f(r, d);
      for (size_t c = 0; c < basis.size(); ++c)
        if (!row[c].is_zero()) f.add_term(basis[c], row[c]);
      out[d].push_back(std::move(f));
    }
  }
  return out;
}

namespace {

// standard-monomial data for A = R/I in one degree
struct QuotientPiece {
  std::vector<int> std_cols;             // indices into monomial_basis(r, d)
  std::map<int, int> col_to_pos;         // basis column -> position in std_cols
  QMat reducers;                         // RREF rows of I_d
  std::vector<int> pivots;               // pivot column of each reducer row
  std::map<int, int> pivot_row;          // pivot column -> row index
};

QuotientPiece quotient_piece(const std::vector<Form>& ideal_d, int r, int d) {
  QuotientPiece out;
  const auto& basis = monomial_basis(r, d);
  QMat rows;
  for (const auto& f : ideal_d) rows.push_back(coefficient_row(f));
  Rref rr = rows.empty() ? Rref{} : rref(rows);
  out.reducers = rr.rows;
  out.pivots = rr.pivots;
  for (size_t k = 0; k < rr.pivots.size(); ++k) out.pivot_row[rr.pivots[k]] = static_cast<int>(k);
  std::vector<bool> is_pivot(basis.size(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  for (size_t c = 0; c < basis.size(); ++c)
    if (!is_pivot[c]) {
      out.col_to_pos[static_cast<int>(c)] = static_cast<int>(out.std_cols.size());
      out.std_cols.push_back(static_cast<int>(c));
    }
  return out;
}

} // namespace

BettiTable koszul_betti(const std::vector<std::vector<Form>>& ideal, int codim, int cap) {
  if (codim < 1 || codim > 4) throw std::invalid_argument("koszul_betti: codim <= 4 supported");
  if (static_cast<int>(ideal.size()) < cap + 1)
    throw std::invalid_argument("koszul_betti: ideal spans must reach the cap");
  const int r = codim;

  std::vector<QuotientPiece> A(cap + 1);
  std::vector<long long> hv(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    A[d] = quotient_piece(ideal[d], r, d);
    hv[d] = static_cast<long long>(A[d].std_cols.size());
  }
  int e = -1;
  for (int d = 0; d <= cap; ++d)
    if (hv[d] > 0) e = d;
  if (e < 0 || e + r > cap)
    throw std::invalid_argument("koszul_betti: cap too small to close the last module");

  // multiplication maps x_s : A_d -> A_{d+1} on standard monomials
  // mult[d][s] is (dim A_{d+1}) x (dim A_d)
  std::vector<std::vector<QMat>> mult(cap);
  for (int d = 0; d < cap; ++d) {
    mult[d].assign(r, QMat());
    const auto& basis_d = monomial_basis(r, d);
    for (int s = 0; s < r; ++s) {
      QMat m(A[d + 1].std_cols.size(), QVec(A[d].std_cols.size(), Rat(0)));
      for (size_t uc = 0; uc < A[d].std_cols.size(); ++uc) {
        Exponent exp = basis_d[A[d].std_cols[uc]];
        ++exp[s];
        int col = monomial_index(r, exp);
        auto pos = A[d + 1].col_to_pos.find(col);
        if (pos != A[d + 1].col_to_pos.end()) {
          m[pos->second][uc] = 1;
        } else {
          // reduce the pivot monomial: col = -sum over free columns
          int row = A[d + 1].pivot_row.at(col);
          for (size_t c2 = 0; c2 < A[d + 1].std_cols.size(); ++c2) {
            const Rat& coeff = A[d + 1].reducers[row][A[d + 1].std_cols[c2]];
            if (!coeff.is_zero()) m[c2][uc] = -coeff;
          }
        }
      }
      mult[d][s] = std::move(m);
    }
  }

  // subsets of {1..r} of each size, with positions for sign bookkeeping
  std::vector<std::vector<std::vector<int>>> subsets(r + 1);
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < r; ++b)
      if (mask & (1 << b)) s.push_back(b);
    subsets[s.size()].push_back(std::move(s));
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());
  auto subset_index = [&](int size, const std::vector<int>& s) {
    const auto& level = subsets[size];
    return static_cast<int>(std::lower_bound(level.begin(), level.end(), s) - level.begin());
  };

  // Koszul differential in internal degree j: K_{i,j} -> K_{i-1,j},
  // K_{i,j} = A_{j-i} tensor wedge^i
  auto koszul_matrix = [&](int i, int j) -> QMat {
    const int src_deg = j - i, dst_deg = j - i + 1;
    if (src_deg < 0 || src_deg > cap || dst_deg > cap) return QMat();
    const long long rows_a = hv[dst_deg], cols_a = hv[src_deg];
    const auto& src_sets = subsets[i];
    const auto& dst_sets = subsets[i - 1];
    if (rows_a == 0 || cols_a == 0) return QMat();
    QMat m(rows_a * dst_sets.size(), QVec(cols_a * src_sets.size(), Rat(0)));
    for (size_t si = 0; si < src_sets.size(); ++si) {
      const auto& S = src_sets[si];
      for (size_t t = 0; t < S.size(); ++t) {
        std::vector<int> rest;
        for (size_t u = 0; u < S.size(); ++u)
          if (u != t) rest.push_back(S[u]);
        int di = subset_index(i - 1, rest);
        int sign = (t % 2 == 0) ? 1 : -1;
        const QMat& xmul = mult[src_deg][S[t]];
        for (long long rr = 0; rr < rows_a; ++rr)
          for (long long cc = 0; cc < cols_a; ++cc)
            if (!xmul[rr][cc].is_zero())
              m[di * rows_a + rr][si * cols_a + cc] = Rat(sign) * xmul[rr][cc];
      }
    }
    return m;
  };

  BettiTable out;
  out.codim = codim;
  {
    std::vector<long long> hvec(hv.begin(), hv.begin() + e + 1);
    out.companion = HVector(hvec);
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= cap; ++j) {
      if (j - i > cap) continue;
      long long dim_k = hv[j - i] * static_cast<long long>(subsets[i].size());
      if (dim_k == 0) continue;
      QMat down = koszul_matrix(i, j);
      long long rank_down = down.empty() ? 0 : rank(down);
      long long rank_up = 0;
      if (i + 1 <= r && j - i - 1 >= 0) {
        QMat up = koszul_matrix(i + 1, j);
        rank_up = up.empty() ? 0 : rank(up);
      }
      long long beta = dim_k - rank_down - rank_up;
      if (beta < 0) throw std::logic_error("koszul_betti: negative multiplicity");
      if (beta > 0) out.entries[{i, j}] = beta;
    }
  }
  return out;
}

bool gotzmann_check(int codim, int d, long long dimV, long long dimR1V) {
  if (d < 1 || codim < 1) throw std::invalid_argument("gotzmann_check: codim, d >= 1");
  Int full = ring_dim(codim, d);
  if (dimV < 0 || Int(dimV) > full)
    throw std::invalid_argument("gotzmann_check: dimV exceeds dim R_d");
  Int complement = full - dimV;
  Int lhs = macaulay_upper(complement, d);
  Int rhs = ring_dim(codim, d + 1) - Int(dimR1V);
  return lhs == rhs;
}

SocleVector socle_from_table(const BettiTable& b) {
  int top = -1;
  for (const auto& [key, mult] : b.entries)
    if (key.first == b.codim && mult > 0) top = std::max(top, key.second);
  if (top < 0) throw std::invalid_argument("socle_from_table: table has no top module");
  SocleVector s;
  s.entries.assign(top - b.codim + 1, 0);
  for (const auto& [key, mult] : b.entries)
    if (key.first == b.codim) s.entries[key.second - b.codim] = mult;
  return s;
}

} // namespace levelalg
