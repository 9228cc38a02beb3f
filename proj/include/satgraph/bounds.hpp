#ifndef SATGRAPH_BOUNDS_HPP
#define SATGRAPH_BOUNDS_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Union bound on Prob(H_m is not n-saturated) for a base on k vertices:
/// C((m+1)k, n-1) * 2^(n-1) * (1 - 2^-(n-1))^m, exact.
Rational failure_bound_a(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// Union bound on the lifting event failing:
/// sum over p = 1..n-1 of k^(p+1) * (m+1)^p * (1 - 2^-p)^m, exact.
/// Counts ordered p-tuples of base neighbors with repeats, copy indices, and
/// uses only the m independent copies l >= 1 of the lifting vertex.
Rational failure_bound_b(std::uint64_t n, std::uint64_t k, std::uint64_t m);

/// Smallest m >= 1 with failure_bound_a + failure_bound_b < 1. Requires k >= n >= 1.
std::uint64_t minimal_certified_m(std::uint64_t n, std::uint64_t k);

/// "num/den" in lowest terms.
std::string to_fraction_string(const Rational& r);

/// Fixed-notation decimal with `digits` fractional digits, truncated toward zero.
std::string to_decimal_string(const Rational& r, unsigned digits = 12);

}  // namespace satgraph

#endif  // SATGRAPH_BOUNDS_HPP
