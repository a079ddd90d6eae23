#include "levelalg/hvector.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace levelalg {

namespace {

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

} // namespace

HVector::HVector(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0] != 1)
    throw std::invalid_argument("HVector: first entry must be 1");
  for (long long v : entries_)
    if (v < 0) throw std::invalid_argument("HVector: negative entry");
  if (entries_.back() == 0) throw std::invalid_argument("HVector: trailing zero entry");
}

std::string HVector::to_string() const { return join(entries_); }

long long SocleVector::type() const {
  long long t = 0;
  for (long long v : entries) t += v;
  return t;
}

bool SocleVector::is_level() const {
  if (entries.empty() || entries.back() == 0) return false;
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] != 0) return false;
  return true;
}

std::string SocleVector::to_string() const { return join(entries); }

std::string to_string(GorVerdict v) {
  switch (v) {
    case GorVerdict::Yes: return "Yes";
    case GorVerdict::No: return "No";
    default: return "Unknown";
  }
}

bool is_o_sequence(const HVector& h) { return is_o_sequence_raw(h.entries()); }

std::vector<long long> first_difference(const std::vector<long long>& v) {
  std::vector<long long> d(v.size());
  if (v.empty()) return d;
  d[0] = 1;
  for (size_t i = 1; i < v.size(); ++i) d[i] = v[i] - v[i - 1];
  return d;
}

std::vector<long long> reverse_window(const std::vector<long long>& v) {
  std::vector<long long> out(v.rbegin(), v.rend());
  return out;
}

bool is_differentiable(const std::vector<long long>& v) {
  auto d = first_difference(v);
  for (long long x : d)
    if (x < 0) return false;
  return is_o_sequence_raw(d);
}

bool is_si_sequence(const HVector& h) {
  const auto& v = h.entries();
  const int e = h.socle_degree();
  for (int i = 0; i <= e; ++i)
    if (v[i] != v[e - i]) return false;
  std::vector<long long> half(v.begin(), v.begin() + e / 2 + 1);
  return is_differentiable(half);
}

GorVerdict is_gorenstein_hvector(const HVector& h) {
  const long long r = h.codim();
  if (r <= 3 || (r == 4 && h[2] <= 7))
    return is_si_sequence(h) ? GorVerdict::Yes : GorVerdict::No;
  return GorVerdict::Unknown;
}

std::vector<DecompositionPair> two_part_decompositions(const HVector& h) {
  const int e = h.socle_degree();
  if (h[e] != 2) throw std::invalid_argument("two_part_decompositions: requires h_e = 2");
  std::vector<DecompositionPair> out;
  // symmetric candidates g with g_0 = g_e = 1, enumerated over the free half
  const int half = e / 2;
  std::vector<long long> g(e + 1, 0);
  g[0] = g[e] = 1;
  std::vector<long long> bound(half + 1);
  for (int i = 1; i <= half; ++i) bound[i] = std::min(h[i], h[e - i]);

  auto emit = [&]() {
    for (int i = 0; i <= e; ++i)
      if (g[i] > h[i]) return;
    HVector cand(g);
    GorVerdict verdict = is_gorenstein_hvector(cand);
    if (verdict == GorVerdict::No) return;
    if (verdict == GorVerdict::Unknown && !is_o_sequence(cand)) return;
    std::vector<long long> tail(e + 1);
    for (int i = 0; i <= e; ++i) tail[i] = h[i] - g[i];
    if (!is_o_sequence_raw(reverse_window(tail))) return;
    out.push_back({std::move(cand), std::move(tail)});
  };

  // depth-first over g_1..g_half; zero middles die in the O-sequence tests
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int i) {
    if (i > half) {
      for (int k = 1; k <= half; ++k) g[e - k] = g[k];
      emit();
      return;
    }
    for (long long v = 0; v <= bound[i]; ++v) {
      g[i] = v;
      rec(i + 1);
    }
    g[i] = 0;
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const DecompositionPair& a, const DecompositionPair& b) { return a.g < b.g; });
  return out;
}

} // namespace levelalg
