#include "levelalg/invsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace levelalg {

long long Sampler::integer(long long lo, long long hi) {
  return lo + static_cast<long long>(rng_() % static_cast<unsigned long long>(hi - lo + 1));
}

Rat Sampler::rational() {
  Int p = integer(-100, 100);
  Int q = integer(1, 16);
  return Rat(p, q);
}

std::vector<Rat> Sampler::linear_coeffs(int r, int width) {
  while (true) {
    std::vector<Rat> c(r, Rat(0));
    bool nonzero = false;
    for (int k = 0; k < width; ++k) {
      c[k] = rational();
      if (!c[k].is_zero()) nonzero = true;
    }
    if (nonzero) return c;
  }
}

InverseModule::InverseModule(std::vector<Form> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("InverseModule: needs at least one generator");
  num_vars_ = gens_[0].num_vars();
  max_degree_ = 0;
  std::map<int, QMat> by_degree;
  for (const auto& g : gens_) {
    if (g.num_vars() != num_vars_)
      throw std::invalid_argument("InverseModule: mixed variable counts");
    if (g.is_zero()) throw std::invalid_argument("InverseModule: zero generator");
    max_degree_ = std::max(max_degree_, g.degree());
    by_degree[g.degree()].push_back(coefficient_row(g));
  }
  for (const auto& [d, rows] : by_degree) {
    if (rank(rows) != static_cast<int>(rows.size()))
      throw std::invalid_argument("InverseModule: generators are linearly dependent");
  }
}

std::string InverseModule::to_string() const {
  std::ostringstream os;
  for (const auto& g : gens_) os << g.to_string() << "\n";
  return os.str();
}

QMat derivative_rows(const InverseModule& m, int d, int min_order) {
  QMat rows;
  const int r = m.num_vars();
  for (const auto& g : m.generators()) {
    const int order = g.degree() - d;
    if (order < 0 || order < min_order) continue;
    for (const auto& a : monomial_basis(r, order)) {
      Form df = differentiate_multi(g, a);
      if (!df.is_zero()) rows.push_back(coefficient_row(df));
    }
  }
  return rows;
}

long long module_dim(const InverseModule& m, int d) {
  if (d < 0 || d > m.max_degree()) return 0;
  return rank(derivative_rows(m, d));
}

HVector hvector_of_module(const InverseModule& m) {
  std::vector<long long> h(m.max_degree() + 1);
  for (int d = 0; d <= m.max_degree(); ++d) h[d] = module_dim(m, d);
  return HVector(h);
}

std::vector<Form> annihilator_component(const InverseModule& m, int d) {
  if (d < 0) throw std::invalid_argument("annihilator_component: d >= 0 required");
  const int r = m.num_vars();
  const auto& cols = monomial_basis(r, d);
  // constraint rows: for each generator g and target monomial m' of
  // degree deg(g)-d, sum_b p_b * coeff(y^{m'} in D^b g) = 0
  QMat constraints;
  for (const auto& g : m.generators()) {
    const int rest = g.degree() - d;
    if (rest < 0) continue;
    for (const auto& tgt : monomial_basis(r, rest)) {
      QVec row(cols.size(), Rat(0));
      bool any = false;
      for (size_t bi = 0; bi < cols.size(); ++bi) {
        const Exponent& b = cols[bi];
        Exponent full(r);
        for (int k = 0; k < r; ++k) full[k] = tgt[k] + b[k];
        auto it = g.terms().find(full);
        if (it == g.terms().end()) continue;
        Rat factor = it->second;
        for (int k = 0; k < r; ++k)
          for (int s = 0; s < b[k]; ++s) factor *= (tgt[k] + b[k] - s);
        row[bi] = factor;
        any = true;
      }
      if (any) constraints.push_back(std::move(row));
    }
  }
  QMat kernel = nullspace(constraints, static_cast<int>(cols.size()));
  std::vector<Form> out;
  for (const auto& v : kernel) {
    Form f(r, d);
    for (size_t j = 0; j < cols.size(); ++j)
      if (!v[j].is_zero()) f.add_term(cols[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

SocleVector socle_vector(const InverseModule& m) {
  const int e = m.max_degree();
  SocleVector s;
  s.entries.assign(e + 1, 0);
  for (int d = 0; d <= e; ++d) {
    long long all = rank(derivative_rows(m, d));
    long long above = rank(derivative_rows(m, d, 1));
    s.entries[d] = all - above;
  }
  return s;
}

ThreeParts three_part_decomposition(const Form& f, const Form& g) {
  if (f.degree() != g.degree() || f.num_vars() != g.num_vars())
    throw std::invalid_argument("three_part_decomposition: generators must share degree and variables");
  InverseModule both({f, g}); // rejects dependent inputs
  InverseModule mf({f}), mg({g});
  const int e = f.degree();
  ThreeParts out;
  out.h_f_only.assign(e + 1, 0);
  out.overlap.assign(e + 1, 0);
  out.h_g_only.assign(e + 1, 0);
  for (int d = 0; d <= e; ++d) {
    long long df = module_dim(mf, d);
    long long dg = module_dim(mg, d);
    long long dm = module_dim(both, d);
    out.overlap[d] = df + dg - dm;
    out.h_f_only[d] = df - out.overlap[d];
    out.h_g_only[d] = dg - out.overlap[d];
  }
  return out;
}

long long power_block_dim(int width, long long m, int e, int j) {
  Int v = Int(m);
  v = std::min(v, ring_dim(width, j));
  v = std::min(v, ring_dim(width, e - j));
  return to_ll(v);
}

HVector expected_generic_hvector(int r, long long m, int d) {
  if (r < 1 || m < 1 || d < 1)
    throw std::invalid_argument("expected_generic_hvector: r, m, d >= 1 required");
  std::vector<long long> h(d + 1);
  for (int j = 0; j <= d; ++j) h[j] = power_block_dim(r, m, d, j);
  return HVector(h);
}

Form power_sum_raw(int r, int width, long long m, int d, Sampler& sampler) {
  Form out(r, d);
  for (long long t = 0; t < m; ++t)
    out = out + linear_power(sampler.linear_coeffs(r, width), d);
  return out;
}

Form generic_power_sum(int r, long long m, int d, unsigned long long seed, int budget) {
  if (r < 1 || m < 1 || d < 1)
    throw std::invalid_argument("generic_power_sum: r, m, d >= 1 required");
  HVector expected = expected_generic_hvector(r, m, d);
  for (int attempt = 0; attempt <= budget; ++attempt) {
    Sampler sampler(seed + 0x9e3779b97f4a7c15ULL * attempt);
    Form f = power_sum_raw(r, r, m, d, sampler);
    if (f.is_zero()) continue;
    if (hvector_of_module(InverseModule({f})) == expected) return f;
  }
  std::ostringstream os;
  os << "generic_power_sum: failed to certify h(m,d) for r=" << r << " m=" << m
     << " d=" << d << " within " << budget << " redraws";
  throw GenericityFailure(os.str());
}

HVector augmented_level_hvector(const HVector& h, int r, long long m, int d) {
  if (h.socle_degree() != d)
    throw std::invalid_argument("augmented_level_hvector: h must have socle degree d");
  Int cap = ring_dim(r, d) - Int(h[d]);
  if (m < 1 || Int(m) > cap)
    throw std::invalid_argument("augmented_level_hvector: m exceeds C(r-1+d,d) - h_d");
  std::vector<long long> H(d + 1);
  for (int i = 0; i <= d; ++i) {
    Int v = Int(h[i]) + Int(power_block_dim(r, m, d, i));
    v = std::min(v, ring_dim(r, i));
    H[i] = to_ll(v);
  }
  return HVector(H);
}

InverseModule remark26_witness(int r, int e) {
  if (r < 2 || e < 2) throw std::invalid_argument("remark26_witness: r >= 2, e >= 2 required");
  const int p = r / 3;
  auto monomial = [&](int a, int b, int pow_a, int pow_b) {
    // y_a^pow_a * y_b^pow_b
    Form f(r, pow_a + pow_b);
    Exponent exp(r, 0);
    exp[a - 1] += pow_a;
    exp[b - 1] += pow_b;
    f.add_term(exp, 1);
    return f;
  };
  Form F(r, e), G(r, e);
  for (int t = 1; t <= p; ++t) {
    F = F + monomial(p + t, t, 1, e - 1);
    G = G + monomial(2 * p + t, t, 1, e - 1);
  }
  if (r % 3 == 1) {
    F = F + monomial(3 * p + 1, 3 * p + 1, e, 0);
  } else if (r % 3 == 2) {
    F = F + monomial(3 * p + 1, 3 * p + 1, e, 0);
    G = G + monomial(3 * p + 2, 3 * p + 2, e, 0);
  }
  return InverseModule({F, G});
}

namespace {

// Homogeneous bivariate polynomial in (mu, lambda), dense coefficients
// c[k] on mu^k lambda^{deg-k}.
struct BiPoly {
  std::vector<Rat> c; // size deg+1; empty means zero
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
};

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  BiPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

BiPoly bp_sub(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  out.c.assign(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

// Exact division of homogeneous polynomials (remainder must vanish).
BiPoly bp_div(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return {};
  // treat as univariate in mu with lambda-degree implicit
  int db = -1;
  for (int k = static_cast<int>(b.c.size()) - 1; k >= 0; --k)
    if (!b.c[k].is_zero()) { db = k; break; }
  if (db < 0) throw std::logic_error("BiPoly division by zero");
  std::vector<Rat> rem = a.c;
  const int dq = static_cast<int>(a.c.size()) - static_cast<int>(b.c.size());
  if (dq < 0) throw std::logic_error("BiPoly division: degree underflow");
  BiPoly q;
  q.c.assign(dq + 1, Rat(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k].is_zero()) continue;
    int shift = k - db;
    if (shift > dq) throw std::logic_error("BiPoly division: not exact");
    Rat f = rem[k] / b.c[db];
    q.c[shift] = f;
    for (int j = 0; j <= db; ++j) rem[j + shift] -= f * b.c[j];
  }
  for (const auto& x : rem)
    if (!x.is_zero()) throw std::logic_error("BiPoly division: nonzero remainder");
  return q;
}

// Bareiss rank of a matrix with BiPoly entries = rank over k(mu, lambda).
long long bipoly_rank(std::vector<std::vector<BiPoly>> a) {
  const int nr = static_cast<int>(a.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(a[0].size());
  BiPoly prev;
  prev.c = {Rat(1)};
  int r = 0;
  for (int col = 0; col < nc && r < nr; ++col) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (!a[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j)
        a[i][j] = bp_div(bp_sub(bp_mul(a[r][col], a[i][j]), bp_mul(a[i][col], a[r][j])), prev);
      a[i][col] = {};
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

long long first_derivative_rank(const Form& h) {
  QMat rows;
  for (int k = 1; k <= h.num_vars(); ++k) {
    Form d = differentiate(h, k);
    if (!d.is_zero()) rows.push_back(coefficient_row(d));
  }
  return rank(rows);
}

} // namespace

PencilRank pencil_derivative_rank(const Form& f, const Form& g, unsigned long long seed) {
  if (f.degree() != g.degree() || f.num_vars() != g.num_vars())
    throw std::invalid_argument("pencil_derivative_rank: generators must share degree and variables");
  InverseModule check({f, g}); // rejects dependent inputs
  (void)check;
  const int r = f.num_vars();

  PencilRank out{};
  out.rank_at_f = first_derivative_rank(f);
  out.rank_at_g = first_derivative_rank(g);
  out.generic_rank = std::max(out.rank_at_f, out.rank_at_g);

  Sampler sampler(seed);
  for (int s = 0; s < 6; ++s) {
    Rat mu = sampler.rational(), la = sampler.rational();
    if (mu.is_zero() && la.is_zero()) mu = 1;
    Form h = f.scaled(mu) + g.scaled(la);
    if (h.is_zero()) continue;
    out.generic_rank = std::max(out.generic_rank, first_derivative_rank(h));
  }

  // symbolic first-derivative matrix, entries linear in (mu, lambda)
  const auto& cols = monomial_basis(r, f.degree() - 1);
  std::vector<std::vector<BiPoly>> sym(r, std::vector<BiPoly>(cols.size()));
  for (int k = 1; k <= r; ++k) {
    auto rf = coefficient_row(differentiate(f, k));
    auto rg = coefficient_row(differentiate(g, k));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (rf[j].is_zero() && rg[j].is_zero()) continue;
      sym[k - 1][j].c = {rg[j], rf[j]}; // lambda-part, mu-part
    }
  }
  if (std::min<size_t>(r, cols.size()) > 40) {
    out.certificate_checked = false;
    out.certified_max = out.generic_rank;
    return out;
  }
  out.certificate_checked = true;
  out.certified_max = bipoly_rank(std::move(sym));
  return out;
}

} // namespace levelalg
