// Sequence algebra on h-vectors and the low-codimension Gorenstein tests.
#ifndef LEVELALG_HVECTOR_HPP
#define LEVELALG_HVECTOR_HPP

#include "levelalg/macaulay.hpp"

#include <optional>
#include <string>

namespace levelalg {

/// h-vector over the fixed window 0..e with explicit entries; h_0 = 1 and
/// the last stored entry is positive.
class HVector {
 public:
  HVector() : entries_{1} {}
  explicit HVector(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  long long operator[](size_t i) const { return i < entries_.size() ? entries_[i] : 0; }
  int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }
  size_t size() const { return entries_.size(); }
  long long codim() const { return (*this)[1]; }

  bool operator==(const HVector& o) const { return entries_ == o.entries_; }
  bool operator<(const HVector& o) const { return entries_ < o.entries_; }
  std::string to_string() const;

 private:
  std::vector<long long> entries_;
};

struct SocleVector {
  std::vector<long long> entries; // s_0..s_e
  long long type() const;
  bool is_level() const; // all socle concentrated in the top degree
  std::string to_string() const;
};

/// Summands of a Cor 2.2 decomposition: h = g + tail with g symmetric of top
/// entry 1 and reverse(tail) an O-sequence.
struct DecompositionPair {
  HVector g;
  std::vector<long long> tail;
};

enum class GorVerdict { Yes, No, Unknown };
std::string to_string(GorVerdict v);

bool is_o_sequence(const HVector& h);

/// Delta v with (Delta v)_0 = 1; same length as the input.
std::vector<long long> first_difference(const std::vector<long long>& v);

/// Entries reversed over the full stored window.
std::vector<long long> reverse_window(const std::vector<long long>& v);

/// True iff Delta v is non-negative and an O-sequence.
bool is_differentiable(const std::vector<long long>& v);

/// Symmetric about e/2 with differentiable first half.
bool is_si_sequence(const HVector& h);

/// Decidable for h_1 <= 3 and for h_1 = 4 with h_2 <= 7 (SI test);
/// Unknown outside the characterized range.
GorVerdict is_gorenstein_hvector(const HVector& h);

/// All ways to write h (h_e = 2) as g + tail with g an admissible Gorenstein
/// candidate of socle degree e and reverse(tail) an O-sequence. Candidates
/// with verdict Unknown are kept when symmetric O-sequences. Sorted by g.
std::vector<DecompositionPair> two_part_decompositions(const HVector& h);

} // namespace levelalg

#endif
