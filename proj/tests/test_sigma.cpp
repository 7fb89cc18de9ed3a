#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pentafold/pentagonal.hpp"
#include "pentafold/sigma.hpp"

#include <numeric>
#include <sstream>

using namespace pentafold;

namespace {

// Oracle: test every candidate divisor.
long long sigma_naive(long long n) {
  long long total = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d == 0) total += d;
  }
  return total;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sigma_brute on the opening table") {
  const long long expected[] = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12};
  for (std::uint64_t n = 1; n <= 11; ++n) CHECK(sigma_brute(n) == expected[n - 1]);
  CHECK(sigma_brute(6) == 12);
  CHECK(sigma_brute(1) == 1);
  CHECK_THROWS_AS(sigma_brute(0), std::domain_error);
}

TEST_CASE("sigma_brute agrees with the naive divisor scan") {
  for (long long n = 1; n <= 2000; ++n) CHECK(sigma_brute(n) == sigma_naive(n));
}

TEST_CASE("sigma table invariants") {
  const SigmaTable table = sigma_table(3000, SigmaMethod::Brute);
  CHECK(table[1] == 1);
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    CHECK(table[n] >= n + 1);
    CHECK((table[n] == n + 1) == is_prime(static_cast<long long>(n)));
  }
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
  for (std::uint64_t p = 1; p <= 100; ++p) {
    for (std::uint64_t q = 1; q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(sigma_brute(p * q) == sigma_brute(p) * sigma_brute(q));
    }
  }
}

TEST_CASE("recurrence worked examples") {
  const SigmaTable table = sigma_table(12, SigmaMethod::Brute);

  const RecurrenceTrace t12 = sigma_recurrence_trace(12, table.prefix(11));
  CHECK(t12.result == 28);
  CHECK(t12.expression() == "12 + 18 - 8 - 6 + 12 = 28");
  REQUIRE(t12.steps.size() == 5);
  CHECK(t12.steps[4].argument == 0);
  CHECK(t12.steps[4].subtrahend == 12);

  const RecurrenceTrace t13 = sigma_recurrence_trace(13, table);
  CHECK(t13.result == 14);
  CHECK(t13.expression() == "28 + 12 - 15 - 12 + 1 = 14");
  std::vector<std::uint64_t> args;
  for (const auto& s : t13.steps) args.push_back(s.argument);
  CHECK(args == std::vector<std::uint64_t>{12, 11, 8, 6, 1});

  // N = 2: the second subtrahend hits N - 2 = 0 and contributes 2.
  const RecurrenceTrace t2 = sigma_recurrence_trace(2, table.prefix(1));
  CHECK(t2.result == 3);
  CHECK(t2.expression() == "1 + 2 = 3");

  // N = 1 is the boundary term alone.
  CHECK(sigma_recurrence(1, SigmaTable{}) == 1);
}

TEST_CASE("recurrence preconditions") {
  const SigmaTable short_table = sigma_table(5, SigmaMethod::Brute);
  CHECK_THROWS_AS(sigma_recurrence(8, short_table), std::invalid_argument);
  CHECK_NOTHROW(sigma_recurrence(6, short_table));
  CHECK_THROWS_AS(sigma_recurrence(0, short_table), std::domain_error);
  CHECK_THROWS_AS(sigma_table(0, SigmaMethod::Brute), std::domain_error);
}

TEST_CASE("sigma_table by both methods") {
  const SigmaTable brute = sigma_table(11, SigmaMethod::Brute);
  const SigmaTable rec = sigma_table(11, SigmaMethod::Recurrence);
  CHECK(brute == rec);
  CHECK(sigma_table(1, SigmaMethod::Brute)[1] == 1);
  CHECK(sigma_table(1, SigmaMethod::Recurrence)[1] == 1);
  CHECK(sigma_table(13, SigmaMethod::Recurrence)[13] == 14);
}

TEST_CASE("recurrence equals trial division up to 10^4") {
  const SigmaTable rec = sigma_table(10'000, SigmaMethod::Recurrence);
  for (std::uint64_t n = 1; n <= 10'000; ++n) REQUIRE(rec[n] == sigma_brute(n));
}

TEST_CASE("disabling the boundary rule fails exactly at pentagonal N") {
  const SigmaTable table = sigma_table(2000, SigmaMethod::Brute);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const BigInt mutated = sigma_recurrence(n, table, BoundaryRule::Disabled);
    CHECK((mutated != table[n]) == is_pentagonal(BigInt(n)).has_value());
  }
  CHECK(sigma_recurrence(12, table, BoundaryRule::Disabled) == 16);

  // Built incrementally, the very first entry is already wrong.
  const SigmaTable broken = sigma_table(20, SigmaMethod::Recurrence, BoundaryRule::Disabled);
  CHECK(broken[1] == 0);
  CHECK(broken[12] != 28);
}

TEST_CASE("sigma csv round trip and validation") {
  const SigmaTable table = sigma_table(50, SigmaMethod::Recurrence);
  std::stringstream buffer;
  write_sigma_csv(buffer, table);
  const std::string text = buffer.str();
  CHECK(text.rfind("1,1\n2,3\n3,4\n", 0) == 0);
  CHECK(text.substr(text.size() - 6) == "50,93\n");
  CHECK(read_sigma_csv(buffer) == table);

  std::istringstream crlf("1,1\r\n2,3\r\n");
  CHECK(read_sigma_csv(crlf).max_n() == 2);

  std::istringstream gap("1,1\n3,4\n");
  CHECK_THROWS_AS(read_sigma_csv(gap), std::runtime_error);
  std::istringstream junk("1,1\n2,x\n");
  CHECK_THROWS_AS(read_sigma_csv(junk), std::runtime_error);
  std::istringstream nocomma("1 1\n");
  CHECK_THROWS_AS(read_sigma_csv(nocomma), std::runtime_error);
  std::istringstream empty("");
  CHECK(read_sigma_csv(empty).max_n() == 0);
}
