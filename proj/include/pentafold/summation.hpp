#ifndef PENTAFOLD_SUMMATION_HPP
#define PENTAFOLD_SUMMATION_HPP

#include "pentafold/numeric.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentafold {

/// Thrown when forward differences never become all zero within the allowed
/// depth or the supplied terms run out first.
class NonPolynomialSequence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Row 0 is the input; row d+1 holds the forward differences of row d. The
/// last row is the first all-zero row.
struct DifferenceTable {
  std::vector<std::vector<BigInt>> rows;

  std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
  /// First entry of every row: A, a, a', a'', ...
  std::vector<BigInt> leading_entries() const;
};

/// depth_limit bounds the difference order searched for a zero row.
DifferenceTable difference_table(std::span<const BigInt> seq, std::size_t depth_limit);

/// A - B + C - D + ... assigned the value
///   A/2 - a/4 + a'/8 - a''/16 + ...
/// from the leading forward differences. Only defined when the table
/// terminates; no regularised value is invented otherwise.
Rational euler_sum_alternating(std::span<const BigInt> seq);

inline Rational euler_sum_alternating(const std::vector<BigInt>& seq) {
  return euler_sum_alternating(std::span<const BigInt>(seq));
}

/// Same rule applied to an existing table.
Rational euler_sum_from_table(const DifferenceTable& table);

struct PowerSumSplit {
  std::uint64_t lambda = 0;
  Rational s;      // -1^l + 5^l - 12^l + 22^l - ...
  Rational t;      // -2^l + 7^l - 15^l + 26^l - ...
  Rational total;  // s + t, plus the constant 0^0 = 1 when lambda = 0
  DifferenceTable minus_table;  // of 1^l, 5^l, 12^l, ...
  DifferenceTable plus_table;   // of 2^l, 7^l, 15^l, ...
};

/// -1^l - 2^l + 5^l + 7^l - 12^l - ... split by branch and summed exactly.
/// Uses 2*lambda + 3 terms per branch, enough for the tables to terminate.
PowerSumSplit pentagonal_power_sum(std::uint64_t lambda);

// Numeric Abel evaluation ---------------------------------------------------

struct AbelConfig {
  /// Truncate once M^l rho^M / (1 - rho) < tolerance * tail_fraction.
  double tail_fraction = 0.1;
  std::uint64_t hard_cap = 1'000'000;
};

class TruncationInfeasible : public std::runtime_error {
 public:
  TruncationInfeasible(std::uint64_t needed, std::uint64_t cap);
  std::uint64_t needed_cap() const { return needed_; }

 private:
  std::uint64_t needed_;
};

/// Smallest exponent cap M past the peak of M^l rho^M satisfying the tail
/// bound. Throws TruncationInfeasible when M would exceed config.hard_cap.
std::uint64_t abel_cutoff(std::uint64_t lambda, double rho, double tolerance,
                          const AbelConfig& config = {});

/// sum of sign * value^l * (rho alpha^i)^value over stream terms up to the
/// cutoff, ascending by exponent, plus the constant 1 when lambda = 0.
/// alpha = exp(2 pi sqrt(-1) / m).
std::complex<double> abel_evaluate(std::uint64_t lambda, std::uint64_t m, std::int64_t i,
                                   double rho, double tolerance, const AbelConfig& config = {});

/// abel_evaluate for i = 0..m-1.
Eigen::VectorXcd abel_at_roots(std::uint64_t lambda, std::uint64_t m, double rho, double tolerance,
                               const AbelConfig& config = {});

/// F(r, i) = alpha^{-i r} / m; F * (values at the m roots) keeps exactly the
/// exponents congruent to r.
Eigen::MatrixXcd residue_filter(std::uint64_t m);

/// Damped sum restricted to exponents congruent to r mod m, via the filter.
std::complex<double> residue_class_abel(std::uint64_t lambda, std::uint64_t m, std::uint64_t r,
                                        double rho, double tolerance,
                                        const AbelConfig& config = {});

/// All residue classes at once; element r is residue_class_abel(..., r, ...).
Eigen::VectorXcd residue_class_abel_all(std::uint64_t lambda, std::uint64_t m, double rho,
                                        double tolerance, const AbelConfig& config = {});

/// "lambda,m,label,rho,|value|,verdict"
std::string abel_line(std::uint64_t lambda, std::uint64_t m, const std::string& label, double rho,
                      double magnitude, const std::string& verdict);

}  // namespace pentafold

#endif  // PENTAFOLD_SUMMATION_HPP
