#include "pentafold/reproduction.hpp"

#include "pentafold/cyclotomic.hpp"
#include "pentafold/pentagonal.hpp"
#include "pentafold/qseries.hpp"
#include "pentafold/sigma.hpp"
#include "pentafold/summation.hpp"

#include <cmath>
#include <sstream>

namespace pentafold {

namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t j = 0; j < values.size(); ++j) os << (j ? "," : "") << values[j];
  return os.str();
}

std::vector<BigInt> big(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

CheckOutcome sigma_table_check() {
  const SigmaTable table = sigma_table(11, SigmaMethod::Brute);
  std::vector<BigInt> got;
  for (std::uint64_t n = 1; n <= 11; ++n) got.push_back(table[n]);
  const bool ok = got == big({1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12});
  return {"sigma-table", "sigma(1..11)", ok, join(got)};
}

CheckOutcome recurrence_examples_check() {
  const SigmaTable table = sigma_table(12, SigmaMethod::Brute);
  const RecurrenceTrace t12 = sigma_recurrence_trace(12, table.prefix(11));
  const RecurrenceTrace t13 = sigma_recurrence_trace(13, table);
  const bool ok = t12.expression() == "12 + 18 - 8 - 6 + 12 = 28" &&
                  t13.expression() == "28 + 12 - 15 - 12 + 1 = 14";
  return {"recurrence-examples", "worked recurrence traces for N=12, 13", ok,
          t12.expression() + "; " + t13.expression()};
}

CheckOutcome oracle_equivalence_check(std::uint64_t limit) {
  const SigmaTable table = sigma_table(limit, SigmaMethod::Recurrence);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (table[n] != sigma_brute(n)) {
      return {"oracle-equivalence", "recurrence = trial division", false,
              "first mismatch at N=" + std::to_string(n)};
    }
  }
  return {"oracle-equivalence", "recurrence = trial division", true,
          "N <= " + std::to_string(limit)};
}

CheckOutcome pnt_check(std::uint64_t degree) {
  const DenseSeries product = euler_product(degree);
  const bool ok = product == pentagonal_series(degree);
  return {"pentagonal-number-theorem", "expanded product = pentagonal series", ok,
          "degree " + std::to_string(degree) + ", " + std::to_string(product.nonzero_count()) +
              " nonzero coefficients"};
}

CheckOutcome symmetric_functions_check(std::uint64_t k_max) {
  const DenseSeries s = euler_product(k_max);
  const auto e = elementary_symmetric(s, k_max);
  const auto p = power_sums_from_elementary(e);
  bool ok = std::vector<BigInt>(e.begin(), e.begin() + 5) == big({1, -1, 0, 0, -1}) &&
            std::vector<BigInt>(p.begin(), p.begin() + 4) == big({1, 3, 4, 7});
  for (std::uint64_t k = 1; k <= k_max && ok; ++k) ok = p[k - 1] == sigma_brute(k);
  return {"symmetric-functions", "e_1..e_5, p_1..p_4 and p_k = sigma(k)", ok,
          "e=" + join(std::vector<BigInt>(e.begin(), e.begin() + 7)) +
              " p=" + join(std::vector<BigInt>(p.begin(), p.begin() + 4)) +
              " k <= " + std::to_string(k_max)};
}

CheckOutcome period_check(std::uint64_t m_max, std::uint64_t periods) {
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const PeriodReport report = verify_period_cancellation(m, periods);
    if (!report.passed()) {
      return {"period-cancellation", "4m-term blocks cancel per residue", false,
              period_line(report) + " " + report.violations.front().what};
    }
  }
  return {"period-cancellation", "4m-term blocks cancel per residue", true,
          "m <= " + std::to_string(m_max) + ", " + std::to_string(periods) + " blocks"};
}

CheckOutcome basis_check() {
  const BasisReport five = verify_basis_cancellation(5, 0);
  const BasisReport one = verify_basis_cancellation(1, 0);
  const bool ok = five.passed() && one.passed() &&
                  five.partial_sums == big({1, 2, 1, 0, -1, -2, -1, 0}) &&
                  one.partial_sums == big({1, 0, -1, 0});
  return {"basis-cancellation", "partial sums over one sub-period average to zero", ok,
          "m=5: " + join(five.partial_sums) + "; m=1: " + join(one.partial_sums)};
}

CheckOutcome euler_summation_check() {
  const PowerSumSplit one = pentagonal_power_sum(1);
  const PowerSumSplit two = pentagonal_power_sum(2);
  const Rational leibniz = euler_sum_alternating(big({1, 1, 1, 1}));
  const bool ok = one.s == Rational(1, 8) && one.t == Rational(-1, 8) &&
                  two.s == Rational(-3, 16) && two.t == Rational(3, 16) &&
                  euler_sum_alternating(big({1, 25, 144, 484, 1225, 2601, 4900})) == Rational(3, 16) &&
                  euler_sum_alternating(big({4, 49, 225, 676, 1600, 3249, 5929})) == Rational(-3, 16) &&
                  one.minus_table.leading_entries() == big({1, 4, 3, 0}) &&
                  two.minus_table.leading_entries() == big({1, 24, 95, 126, 54, 0}) &&
                  two.plus_table.leading_entries() == big({4, 45, 131, 144, 54, 0}) &&
                  leibniz == Rational(1, 2);
  return {"difference-summation", "difference-rule sums of the branch series", ok,
          "lambda=1 s=" + to_string(one.s) + " t=" + to_string(one.t) +
              "; lambda=2 s=" + to_string(two.s) + " t=" + to_string(two.t) +
              "; 1-1+1-... = " + to_string(leibniz)};
}

CheckOutcome power_sum_identity_check(std::uint64_t lambda_max) {
  for (std::uint64_t lambda = 0; lambda <= lambda_max; ++lambda) {
    const PowerSumSplit split = pentagonal_power_sum(lambda);
    if (split.total != 0) {
      return {"power-sum-identity", "s + t = 0 for every lambda", false,
              "lambda=" + std::to_string(lambda) + " total=" + to_string(split.total)};
    }
  }
  return {"power-sum-identity", "s + t = 0 for every lambda", true,
          "lambda <= " + std::to_string(lambda_max)};
}

CheckOutcome abel_check() {
  constexpr double tol = 1e-9;
  for (std::uint64_t lambda = 0; lambda <= 3; ++lambda) {
    for (std::uint64_t m = 1; m <= 6; ++m) {
      const Eigen::VectorXcd near = abel_at_roots(lambda, m, 0.999, tol);
      const Eigen::VectorXcd far = abel_at_roots(lambda, m, 0.9, tol);
      for (Eigen::Index i = 0; i < near.size(); ++i) {
        if (!(std::abs(near(i)) < std::abs(far(i)))) {
          return {"abel-decay", "damped series shrink towards zero", false,
                  abel_line(lambda, m, "i=" + std::to_string(i), 0.999, std::abs(near(i)), "FAIL")};
        }
      }
      if (m > 4) continue;
      const Eigen::VectorXcd filtered = residue_filter(m) * near;
      for (Eigen::Index r = 0; r < filtered.size(); ++r) {
        if (!(std::abs(filtered(r)) < 1e-2)) {
          return {"abel-decay", "damped series shrink towards zero", false,
                  abel_line(lambda, m, "r=" + std::to_string(r), 0.999, std::abs(filtered(r)), "FAIL")};
        }
      }
    }
  }
  return {"abel-decay", "damped series shrink towards zero", true,
          "lambda <= 3, m <= 6, rho 0.9 -> 0.999"};
}

CheckOutcome mutation_check() {
  // Each N is recomputed from correct earlier values, so a mismatch appears
  // exactly where the boundary term is hit: at the pentagonal N.
  constexpr std::uint64_t limit = 1000;
  const SigmaTable table = sigma_table(limit, SigmaMethod::Brute);
  bool exact = true;
  for (std::uint64_t n = 1; n <= limit && exact; ++n) {
    const bool differs =
        sigma_recurrence(n, table, BoundaryRule::Disabled) != table[n];
    exact = differs == is_pentagonal(BigInt(n)).has_value();
  }
  const BigInt at_twelve = sigma_recurrence(12, table.prefix(11), BoundaryRule::Disabled);
  return {"boundary-mutation", "dropping the sigma(N-N) -> N rule breaks equivalence",
          exact && at_twelve != 28,
          "mutated sigma(12) = " + at_twelve.str() + ", mismatches exactly at pentagonal N <= 1000"};
}

CheckOutcome radical_roots_check() {
  double worst = 0.0;
  for (std::uint64_t m = 1; m <= 6; ++m) {
    const auto trig = roots_of_unity(m);
    for (const auto& z : radical_roots(m)) {
      double best = 1e300;
      for (const auto& root : trig) best = std::min(best, std::abs(z - root.value()));
      worst = std::max(worst, best);
    }
  }
  std::ostringstream os;
  os << "max distance " << worst;
  return {"radical-roots", "closed-form roots of 1 - x^m, m <= 6", worst < 1e-12, os.str()};
}

CheckOutcome interpolation_check() {
  const auto seq = interpolated_sequence(1000);
  bool ok = true;
  for (std::uint64_t j = 1; j <= seq.size() && ok; ++j) {
    const BigInt t = BigInt(j + 1) * (j + 2) / 2;
    ok = seq[j - 1] * 3 == Rational(t);
  }
  return {"interpolation", "interpolated sequence = triangular numbers / 3", ok, "1000 entries"};
}

}  // namespace

std::vector<CheckOutcome> reproduce_all() {
  return {
      sigma_table_check(),
      recurrence_examples_check(),
      oracle_equivalence_check(10'000),
      pnt_check(1000),
      symmetric_functions_check(200),
      period_check(24, 5),
      basis_check(),
      euler_summation_check(),
      power_sum_identity_check(10),
      abel_check(),
      mutation_check(),
      radical_roots_check(),
      interpolation_check(),
  };
}

}  // namespace pentafold
