// Exact inverse-systems engine: modules of forms under the differentiation
// action, derivative-space ranks, annihilators, socles and the constructive
// witnesses built from sums of powers of generic linear forms.
#ifndef LEVELALG_INVSYS_HPP
#define LEVELALG_INVSYS_HPP

#include "levelalg/form.hpp"
#include "levelalg/hvector.hpp"
#include "levelalg/linalg.hpp"

#include <random>

namespace levelalg {

/// Raised when a randomized construction keeps missing its certified
/// h-vector within the retry budget.
struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic coefficient sampler: rationals p/q with p in [-100,100]
/// and q in [1,16].
class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}
  long long integer(long long lo, long long hi);
  Rat rational();
  /// Length-r coefficient vector supported on the first `width` entries,
  /// redrawn until non-zero.
  std::vector<Rat> linear_coeffs(int r, int width);

 private:
  std::mt19937_64 rng_;
};

class InverseModule {
 public:
  explicit InverseModule(std::vector<Form> gens);

  const std::vector<Form>& generators() const { return gens_; }
  int num_vars() const { return num_vars_; }
  int max_degree() const { return max_degree_; }
  std::string to_string() const;

 private:
  std::vector<Form> gens_;
  int num_vars_;
  int max_degree_;
};

/// Rows spanning the degree-d graded piece M_d (all order-(deg-d)
/// derivatives of every generator), as coefficient vectors over
/// monomial_basis(r, d). min_order > 0 restricts to derivatives of the
/// higher-degree part, i.e. (R_+ M)_d.
QMat derivative_rows(const InverseModule& m, int d, int min_order = 0);

long long module_dim(const InverseModule& m, int d);

/// h_d = rank of the degree-d derivative space, 0 <= d <= max degree.
HVector hvector_of_module(const InverseModule& m);

/// Exact basis of I_d, the degree-d forms of the annihilator, as forms in
/// the dual x-variables (canonical reduced basis).
std::vector<Form> annihilator_component(const InverseModule& m, int d);

/// s_i = number of minimal generators of M in degree i.
SocleVector socle_vector(const InverseModule& m);

struct ThreeParts {
  std::vector<long long> h_f_only;  // h'
  std::vector<long long> overlap;   // h''
  std::vector<long long> h_g_only;  // h'''
};

/// h = h' + h'' + h''' with h'' the intersection module profile.
ThreeParts three_part_decomposition(const Form& f, const Form& g);

/// Closed form h(m,d) in r variables: h_j = min{m, dim R_j, dim R_{d-j}}.
HVector expected_generic_hvector(int r, long long m, int d);

/// Lemma 3.1 profile of m generic powers supported on `width` of the r
/// variables, evaluated at degree j of a degree-e form.
long long power_block_dim(int width, long long m, int e, int j);

/// Sum of m d-th powers of generic linear forms on the first `width`
/// variables (no certification).
Form power_sum_raw(int r, int width, long long m, int d, Sampler& sampler);

/// Certified generic power sum: verifies the module h-vector against
/// expected_generic_hvector and redraws up to `budget` times.
Form generic_power_sum(int r, long long m, int d, unsigned long long seed, int budget = 8);

/// H_i = min{h_i + h_i(m,d), C(r-1+i,i)}; requires m <= C(r-1+d,d) - h_d.
HVector augmented_level_hvector(const HVector& h, int r, long long m, int d);

/// The two-generator sharpness module of Remark 2.6 for r mod 3.
InverseModule remark26_witness(int r, int e);

struct PencilRank {
  long long generic_rank;   // max sampled first-derivative rank over [mu:lambda]
  long long certified_max;  // rank over the function field in (mu, lambda)
  long long rank_at_f;      // [1:0]
  long long rank_at_g;      // [0:1]
  bool certificate_checked; // false when the size cap skipped the certificate
};

PencilRank pencil_derivative_rank(const Form& f, const Form& g,
                                  unsigned long long seed = 0);

} // namespace levelalg

#endif
