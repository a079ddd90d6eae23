// Exact integer/rational arithmetic aliases and binomial coefficients.
#ifndef LEVELALG_INTS_HPP
#define LEVELALG_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace levelalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) in exact arithmetic; 0 when k < 0 or k > n.
Int binomial(long long n, long long k);

/// dim of the degree-d piece of a polynomial ring in r variables, C(r-1+d, d).
Int ring_dim(int r, int d);

/// ceil(p / q) for q > 0.
long long ceil_div(long long p, long long q);

/// Exact conversion; throws if the value does not fit in long long.
long long to_ll(const Int& v);

} // namespace levelalg

#endif
