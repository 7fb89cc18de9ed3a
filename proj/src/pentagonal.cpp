#include "pentafold/pentagonal.hpp"

#include <stdexcept>

namespace pentafold {

const char* to_string(Branch b) { return b == Branch::Minus ? "minus" : "plus"; }

BigInt pentagonal(std::uint64_t k, Branch branch) {
  const BigInt kk = k;
  const BigInt three_k_sq = 3 * kk * kk;
  const BigInt doubled = branch == Branch::Minus ? BigInt(three_k_sq - kk) : BigInt(three_k_sq + kk);
  return doubled / 2;
}

PentagonalTerm term_at(std::uint64_t position) {
  if (position == 0) return PentagonalTerm{0, Branch::Minus, BigInt(0), 1};
  const std::uint64_t k = (position + 1) / 2;
  const Branch branch = (position % 2 == 1) ? Branch::Minus : Branch::Plus;
  return PentagonalTerm{k, branch, pentagonal(k, branch), term_sign(k)};
}

std::vector<PentagonalTerm> term_stream(std::size_t count, bool include_zero) {
  std::vector<PentagonalTerm> out;
  out.reserve(count);
  std::uint64_t position = include_zero ? 0 : 1;
  while (out.size() < count) out.push_back(term_at(position++));
  return out;
}

std::vector<PentagonalTerm> terms_up_to(const BigInt& max_value, bool include_zero) {
  std::vector<PentagonalTerm> out;
  if (max_value < 0) return out;
  for (std::uint64_t position = include_zero ? 0 : 1;; ++position) {
    PentagonalTerm t = term_at(position);
    if (t.value > max_value) break;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Rational> interpolated_sequence(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t k = 1; out.size() < count; ++k) {
    const BigInt minus = pentagonal(k, Branch::Minus);
    const BigInt plus = pentagonal(k, Branch::Plus);
    out.emplace_back(minus);
    if (out.size() == count) break;
    out.emplace_back(plus);
    if (out.size() == count) break;
    // plus - minus = k; the inserted step continues the run of thirds.
    out.push_back(Rational(plus) + Rational(BigInt(3 * k + 1), BigInt(3)));
  }
  return out;
}

std::optional<PentagonalIndex> is_pentagonal(const BigInt& v) {
  if (v < 0) return std::nullopt;
  if (v == 0) return PentagonalIndex{0, Branch::Minus};
  // v = (3k^2 -+ k)/2  <=>  24v + 1 = (6k -+ 1)^2
  const BigInt disc = 24 * v + 1;
  const BigInt root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return std::nullopt;
  const std::uint64_t r6 = mod_u64(root, 6);
  if (r6 == 5) return PentagonalIndex{((root + 1) / 6).convert_to<std::uint64_t>(), Branch::Minus};
  if (r6 == 1) return PentagonalIndex{((root - 1) / 6).convert_to<std::uint64_t>(), Branch::Plus};
  return std::nullopt;
}

}  // namespace pentafold
