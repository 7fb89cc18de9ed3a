#include "pentafold/summation.hpp"
#include "pentafold/pentagonal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace pentafold {

std::vector<BigInt> DifferenceTable::leading_entries() const {
  std::vector<BigInt> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.front());
  return out;
}

namespace {

bool all_zero(const std::vector<BigInt>& row) {
  return std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v == 0; });
}

}  // namespace

DifferenceTable difference_table(std::span<const BigInt> seq, std::size_t depth_limit) {
  if (seq.empty()) throw NonPolynomialSequence("difference_table: empty sequence");
  DifferenceTable table;
  table.rows.emplace_back(seq.begin(), seq.end());
  while (!all_zero(table.rows.back())) {
    if (table.depth() >= depth_limit) {
      throw NonPolynomialSequence("difference_table: no constant row within depth " +
                                  std::to_string(depth_limit));
    }
    if (table.rows.back().size() < 2) {
      throw NonPolynomialSequence("difference_table: terms exhausted at depth " +
                                  std::to_string(table.depth()) + " before differences vanished");
    }
    table.rows.push_back(differences<BigInt>(std::span<const BigInt>(table.rows.back())));
  }
  return table;
}

Rational euler_sum_from_table(const DifferenceTable& table) {
  Rational total = 0;
  BigInt denominator = 2;
  for (std::size_t d = 0; d < table.rows.size(); ++d) {
    const Rational term(table.rows[d].front(), denominator);
    if (d % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    denominator *= 2;
  }
  return total;
}

Rational euler_sum_alternating(std::span<const BigInt> seq) {
  return euler_sum_from_table(difference_table(seq, seq.size()));
}

PowerSumSplit pentagonal_power_sum(std::uint64_t lambda) {
  const std::size_t terms = 2 * lambda + 3;
  std::vector<BigInt> minus_seq;
  std::vector<BigInt> plus_seq;
  minus_seq.reserve(terms);
  plus_seq.reserve(terms);
  for (std::uint64_t k = 1; k <= terms; ++k) {
    minus_seq.push_back(boost::multiprecision::pow(pentagonal(k, Branch::Minus),
                                                   static_cast<unsigned>(lambda)));
    plus_seq.push_back(boost::multiprecision::pow(pentagonal(k, Branch::Plus),
                                                  static_cast<unsigned>(lambda)));
  }

  PowerSumSplit out;
  out.lambda = lambda;
  out.minus_table = difference_table(minus_seq, terms);
  out.plus_table = difference_table(plus_seq, terms);
  // Each branch series starts with a negative term: -(A - B + C - ...).
  out.s = -euler_sum_from_table(out.minus_table);
  out.t = -euler_sum_from_table(out.plus_table);
  out.total = out.s + out.t + (lambda == 0 ? Rational(1) : Rational(0));
  return out;
}

TruncationInfeasible::TruncationInfeasible(std::uint64_t needed, std::uint64_t cap)
    : std::runtime_error("Abel truncation needs exponent cap " + std::to_string(needed) +
                         ", above the hard cap " + std::to_string(cap)),
      needed_(needed) {}

namespace {

void check_abel_args(double rho, double tolerance) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("Abel evaluation: rho must lie in (0, 1)");
  if (!(tolerance > 0.0)) throw std::domain_error("Abel evaluation: tolerance must be positive");
}

// log of M^l rho^M / (1 - rho)
double log_tail(std::uint64_t lambda, double rho, std::uint64_t cap) {
  return static_cast<double>(lambda) * std::log(static_cast<double>(cap)) +
         static_cast<double>(cap) * std::log(rho) - std::log1p(-rho);
}

}  // namespace

std::uint64_t abel_cutoff(std::uint64_t lambda, double rho, double tolerance,
                          const AbelConfig& config) {
  check_abel_args(rho, tolerance);
  const double target = std::log(tolerance * config.tail_fraction);
  // M^l rho^M decreases once M >= l / -ln(rho).
  const auto peak = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(lambda) / -std::log(rho)));
  std::uint64_t lo = std::max<std::uint64_t>(1, peak);
  if (log_tail(lambda, rho, lo) < target) return lo;

  std::uint64_t hi = lo;
  while (log_tail(lambda, rho, hi) >= target) {
    if (hi >= config.hard_cap) {
      // Keep searching only to name the cap that would have been needed.
      std::uint64_t needed = hi;
      while (log_tail(lambda, rho, needed) >= target) needed *= 2;
      std::uint64_t a = hi;
      while (a + 1 < needed) {
        const std::uint64_t mid = a + (needed - a) / 2;
        (log_tail(lambda, rho, mid) < target ? needed : a) = mid;
      }
      throw TruncationInfeasible(needed, config.hard_cap);
    }
    lo = hi;
    hi = std::min(config.hard_cap, hi * 2);
  }
  // log_tail(lo) >= target > log_tail(hi)
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (log_tail(lambda, rho, mid) < target ? hi : lo) = mid;
  }
  return hi;
}

std::complex<double> abel_evaluate(std::uint64_t lambda, std::uint64_t m, std::int64_t i,
                                   double rho, double tolerance, const AbelConfig& config) {
  if (m == 0) throw std::domain_error("abel_evaluate: m must be positive");
  const std::uint64_t cap = abel_cutoff(lambda, rho, tolerance, config);
  const auto mm = static_cast<std::int64_t>(m);
  const auto i_mod = static_cast<std::uint64_t>(((i % mm) + mm) % mm);

  std::vector<std::complex<long double>> powers(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(m);
    powers[r] = {std::cos(angle), std::sin(angle)};
  }

  const long double log_rho = std::log(static_cast<long double>(rho));
  std::complex<long double> acc = (lambda == 0) ? 1.0L : 0.0L;
  for (std::uint64_t position = 1;; ++position) {
    const PentagonalTerm t = term_at(position);
    if (t.value > cap) break;
    const auto v = t.value.convert_to<std::uint64_t>();
    const auto lv = static_cast<long double>(v);
    const long double magnitude =
        std::exp(static_cast<long double>(lambda) * std::log(lv) + lv * log_rho);
    const std::uint64_t residue = ((v % m) * i_mod) % m;
    acc += (t.sign > 0 ? magnitude : -magnitude) * powers[residue];
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Eigen::VectorXcd abel_at_roots(std::uint64_t lambda, std::uint64_t m, double rho, double tolerance,
                               const AbelConfig& config) {
  Eigen::VectorXcd values(static_cast<Eigen::Index>(m));
  for (std::uint64_t i = 0; i < m; ++i) {
    values(static_cast<Eigen::Index>(i)) =
        abel_evaluate(lambda, m, static_cast<std::int64_t>(i), rho, tolerance, config);
  }
  return values;
}

Eigen::MatrixXcd residue_filter(std::uint64_t m) {
  if (m == 0) throw std::domain_error("residue_filter: m must be positive");
  const auto n = static_cast<Eigen::Index>(m);
  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto e = static_cast<double>((r * i) % n);
      const double angle = -2.0 * std::numbers::pi * e / static_cast<double>(n);
      f(r, i) = std::polar(1.0 / static_cast<double>(n), angle);
    }
  }
  return f;
}

Eigen::VectorXcd residue_class_abel_all(std::uint64_t lambda, std::uint64_t m, double rho,
                                        double tolerance, const AbelConfig& config) {
  return residue_filter(m) * abel_at_roots(lambda, m, rho, tolerance, config);
}

std::complex<double> residue_class_abel(std::uint64_t lambda, std::uint64_t m, std::uint64_t r,
                                        double rho, double tolerance, const AbelConfig& config) {
  if (r >= m) throw std::domain_error("residue_class_abel: r must be smaller than m");
  const Eigen::VectorXcd values = abel_at_roots(lambda, m, rho, tolerance, config);
  return residue_filter(m).row(static_cast<Eigen::Index>(r)).transpose().cwiseProduct(values).sum();
}

std::string abel_line(std::uint64_t lambda, std::uint64_t m, const std::string& label, double rho,
                      double magnitude, const std::string& verdict) {
  std::ostringstream os;
  os << lambda << ',' << m << ',' << label << ',' << rho << ',' << std::setprecision(6)
     << std::scientific << magnitude << ',' << verdict;
  return os.str();
}

}  // namespace pentafold
