#ifndef SATWALK_BINOMIAL_HPP
#define SATWALK_BINOMIAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace satwalk {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

inline double log2_binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::domain_error("binomial index out of range");
  return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
          std::lgamma(double(n - k) + 1)) /
         std::log(2.0);
}

} // namespace satwalk

#endif
