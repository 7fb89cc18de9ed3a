#include "pentafold/qseries.hpp"

#include <ostream>

namespace pentafold {

DenseSeries euler_product(std::uint64_t degree_cap) {
  DenseSeries s(degree_cap);
  s.coeffs()(0) = 1;
  for (std::uint64_t k = 1; k <= degree_cap; ++k) s.multiply_one_minus_power(k);
  return s;
}

DenseSeries pentagonal_series(std::uint64_t degree_cap) {
  DenseSeries s(degree_cap);
  for (const PentagonalTerm& t : terms_up_to(BigInt(degree_cap), /*include_zero=*/true)) {
    s.coeffs()(t.value.convert_to<Eigen::Index>()) = t.sign;
  }
  return s;
}

namespace {

void check_request(const DenseSeries& s, std::uint64_t count) {
  if (count == 0) throw std::domain_error("symmetric functions: K must be positive");
  if (count > s.degree_cap()) throw std::domain_error("symmetric functions: K exceeds degree cap");
  if (s[0] != 1) throw std::domain_error("symmetric functions: constant coefficient must be 1");
}

}  // namespace

std::vector<BigInt> elementary_symmetric(const DenseSeries& s, std::uint64_t count) {
  check_request(s, count);
  std::vector<BigInt> e;
  e.reserve(count);
  for (std::uint64_t k = 1; k <= count; ++k) e.push_back(k % 2 == 0 ? s[k] : BigInt(-s[k]));
  return e;
}

std::vector<BigInt> power_sums_from_elementary(const std::vector<BigInt>& e) {
  // p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-2} e_{k-1} p_1 + (-1)^{k-1} k e_k
  std::vector<BigInt> p;
  p.reserve(e.size());
  for (std::size_t k = 1; k <= e.size(); ++k) {
    BigInt acc = (k % 2 == 1) ? BigInt(k * e[k - 1]) : BigInt(-(k * e[k - 1]));
    for (std::size_t j = 1; j < k; ++j) {
      const BigInt term = e[j - 1] * p[k - j - 1];
      if (j % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p.push_back(std::move(acc));
  }
  return p;
}

std::vector<BigInt> power_sums(const DenseSeries& s, std::uint64_t count) {
  return power_sums_from_elementary(elementary_symmetric(s, count));
}

void write_series_dump(std::ostream& out, const DenseSeries& s) {
  for (std::uint64_t d = 0; d <= s.degree_cap(); ++d) {
    if (s[d] != 0) out << d << ',' << s[d] << '\n';
  }
}

}  // namespace pentafold
