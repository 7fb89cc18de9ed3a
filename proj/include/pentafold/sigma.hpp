#ifndef PENTAFOLD_SIGMA_HPP
#define PENTAFOLD_SIGMA_HPP

#include "pentafold/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pentafold {

/// sigma(1..max_n), 1-based. A default-constructed table is empty (max_n 0).
class SigmaTable {
 public:
  SigmaTable() : values_(1) {}
  /// values[0] is sigma(1).
  explicit SigmaTable(std::vector<BigInt> values);

  std::uint64_t max_n() const { return values_.size() - 1; }
  const BigInt& operator[](std::uint64_t n) const { return values_.at(n); }
  bool covers(std::uint64_t n) const { return n <= max_n(); }

  void push_back(BigInt sigma_next) { values_.push_back(std::move(sigma_next)); }

  /// Prefix sigma(1..n), n <= max_n().
  SigmaTable prefix(std::uint64_t n) const;

  friend bool operator==(const SigmaTable&, const SigmaTable&) = default;

 private:
  // Slot 0 is an unused placeholder so that indices match N.
  std::vector<BigInt> values_;
};

enum class SigmaMethod { Brute, Recurrence };

/// Whether sigma(N - N) is replaced by N in the recurrence. Disabled only in
/// mutation tests: it must break the recurrence at every pentagonal N.
enum class BoundaryRule { Enabled, Disabled };

/// Trial division. Throws std::domain_error for N = 0.
BigInt sigma_brute(std::uint64_t n);

struct RecurrenceStep {
  BigInt subtrahend;     // pentagonal number subtracted from N
  std::uint64_t argument;  // N - subtrahend
  int sign;              // +1 or -1, pattern + + - - ...
  BigInt contribution;   // sign * sigma(argument), or sign * N when argument = 0
};

struct RecurrenceTrace {
  std::uint64_t n = 0;
  std::vector<RecurrenceStep> steps;
  BigInt result;

  /// e.g. "12 + 18 - 8 - 6 + 12 = 28"
  std::string expression() const;
};

/// sigma(N) = sigma(N-1) + sigma(N-2) - sigma(N-5) - sigma(N-7) + ...
/// Requires table to hold sigma(1..N-1); throws std::invalid_argument
/// otherwise and std::domain_error for N = 0.
BigInt sigma_recurrence(std::uint64_t n, const SigmaTable& table,
                        BoundaryRule rule = BoundaryRule::Enabled);

RecurrenceTrace sigma_recurrence_trace(std::uint64_t n, const SigmaTable& table,
                                       BoundaryRule rule = BoundaryRule::Enabled);

SigmaTable sigma_table(std::uint64_t max_n, SigmaMethod method,
                       BoundaryRule rule = BoundaryRule::Enabled);

/// One "N,sigma" line per entry, ASCII decimal, no header.
void write_sigma_csv(std::ostream& out, const SigmaTable& table);

/// Parses the format above. Entries must run 1, 2, 3, ... without gaps;
/// throws std::runtime_error on malformed input.
SigmaTable read_sigma_csv(std::istream& in);

}  // namespace pentafold

#endif  // PENTAFOLD_SIGMA_HPP
