#ifndef PENTAFOLD_NUMERIC_HPP
#define PENTAFOLD_NUMERIC_HPP

// Scalar types shared by every module. Integers are arbitrary precision
// throughout; there is no fixed-width fast path.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace pentafold {

// Expression templates off: values are plain and interoperate with Eigen and
// the ternary operator without explicit materialisation.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using BigVector = Vector<BigInt>;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact rational as "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

/// Non-negative remainder of v modulo m (m > 0).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace pentafold

#endif  // PENTAFOLD_NUMERIC_HPP
