// Decision procedures and certificates for type-2 level h-vectors.
#ifndef LEVELALG_LEVEL2_HPP
#define LEVELALG_LEVEL2_HPP

#include "levelalg/bounds.hpp"
#include "levelalg/invsys.hpp"

#include <optional>

namespace levelalg {

struct RunConfig {
  unsigned long long seed = 0;
  int retry_budget = 8;
  std::optional<int> degree_cap;
};

enum class Verdict { Level, NotLevel, Unknown };
std::string to_string(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::string stage;
  std::string trace;
  std::optional<InverseModule> witness;

  /// Re-checks a Level witness: module h-vector equals h and the socle is
  /// concentrated in the top degree with multiplicity 2.
  bool witness_verified(const HVector& h) const;
};

struct IarrobinoBound {
  int u;
  long long delta_u;
  long long guaranteed_entry;
};

/// Minimal delta_u with h_{e-u} >= 2 h_u - 2 - 3 delta_u, and the implied
/// lower bound h_u - delta_u on the u-th entry of a socle-degree-e
/// Gorenstein quotient.
IarrobinoBound iarrobino_bound(const HVector& h, int u);

/// True iff r <= 7: the codimensions where a >= r is guaranteed.
bool check_a_lower_bound(int r);

/// All Gorenstein h-vectors of codimension exactly `codim` (1..3) and socle
/// degree e, sorted lexicographically.
std::vector<HVector> gorenstein_hvectors(int codim, int e);

/// Single form whose inverse-system h-vector is the prescribed Gorenstein
/// h-vector g (codimension <= 3): a certified power sum when g matches the
/// generic closed form, otherwise the dual socle generator of a random
/// admissible-resolution ideal. Certified; throws GenericityFailure.
Form gorenstein_form(const HVector& g, unsigned long long seed, int budget = 8);

/// Theorem 2.9 characterization for shapes with h_1 = h_{e-1} = r <= 4;
/// Level verdicts carry a verified witness module <F, y_r^e>.
Certificate thm29_check(const HVector& h, const RunConfig& config = {});

/// NotLevel when no two-part decomposition exists; Unknown otherwise.
Certificate screen_cor22(const HVector& h);

/// Codimension-3 three-part screen: NotLevel when every admissible pair of
/// single-form h-vectors forces a middle part that is negative somewhere or
/// not an O-sequence.
Certificate screen_thm23(const HVector& h);

/// Full decision pipeline; the first definitive certificate wins.
Certificate decide(const HVector& h, const RunConfig& config = {});

/// All level h-vectors of shape (1,r,...,r,2) with socle degree <= e_max,
/// each re-verified through a constructed witness. 2 <= r <= 4.
std::vector<HVector> enumerate_rrr2(int r, int e_max, const RunConfig& config = {});

} // namespace levelalg

#endif
