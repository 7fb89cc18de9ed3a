#ifndef PENTAFOLD_PENTAGONAL_HPP
#define PENTAFOLD_PENTAGONAL_HPP

#include "pentafold/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace pentafold {

/// Minus: (3k^2 - k)/2, Plus: (3k^2 + k)/2.
enum class Branch { Minus, Plus };

const char* to_string(Branch b);

/// One signed term of the series 1 - x - x^2 + x^5 + x^7 - x^12 - ...
struct PentagonalTerm {
  std::uint64_t k = 0;
  Branch branch = Branch::Minus;
  BigInt value;
  int sign = 1;  // (-1)^k

  friend bool operator==(const PentagonalTerm&, const PentagonalTerm&) = default;
};

struct PentagonalIndex {
  std::uint64_t k = 0;
  Branch branch = Branch::Minus;

  friend bool operator==(const PentagonalIndex&, const PentagonalIndex&) = default;
};

BigInt pentagonal(std::uint64_t k, Branch branch);

inline int term_sign(std::uint64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// Term at stream position p. Position 0 is the constant (k = 0); position
/// p >= 1 has k = ceil(p/2), Minus branch for odd p and Plus for even p.
PentagonalTerm term_at(std::uint64_t position);

/// The first `count` terms in increasing value order. With include_zero the
/// single k = 0 term leads and counts towards `count`.
std::vector<PentagonalTerm> term_stream(std::size_t count, bool include_zero = false);

/// All stream terms with value <= max_value, in stream order.
std::vector<PentagonalTerm> terms_up_to(const BigInt& max_value, bool include_zero = false);

/// Successor-minus-predecessor. Throws std::domain_error for fewer than two
/// entries.
template <typename Scalar>
std::vector<Scalar> differences(std::span<const Scalar> seq);

inline std::vector<BigInt> differences(const std::vector<BigInt>& seq) {
  return differences<BigInt>(std::span<const BigInt>(seq));
}

/// The merged sequence 1, 2, 10/3, 5, 7, 28/3, 12, ... where a fraction is
/// placed after each (Minus, Plus) pair so that the differences advance by
/// 1/3 at every step.
std::vector<Rational> interpolated_sequence(std::size_t count);

/// Inverse of pentagonal(). 0 reports (0, Minus).
std::optional<PentagonalIndex> is_pentagonal(const BigInt& v);

// ---------------------------------------------------------------------------

template <typename Scalar>
std::vector<Scalar> differences(std::span<const Scalar> seq) {
  if (seq.size() < 2) {
    throw std::domain_error("differences: need at least two entries");
  }
  std::vector<Scalar> out;
  out.reserve(seq.size() - 1);
  for (std::size_t j = 1; j < seq.size(); ++j) out.push_back(seq[j] - seq[j - 1]);
  return out;
}

}  // namespace pentafold

#endif  // PENTAFOLD_PENTAGONAL_HPP
