#include "pentafold/sigma.hpp"
#include "pentafold/pentagonal.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pentafold {

SigmaTable::SigmaTable(std::vector<BigInt> values) : values_(1) {
  values_.reserve(values.size() + 1);
  for (auto& v : values) values_.push_back(std::move(v));
}

SigmaTable SigmaTable::prefix(std::uint64_t n) const {
  if (n > max_n()) throw std::out_of_range("SigmaTable::prefix beyond max_n");
  return SigmaTable(std::vector<BigInt>(values_.begin() + 1, values_.begin() + 1 + n));
}

BigInt sigma_brute(std::uint64_t n) {
  if (n == 0) throw std::domain_error("sigma_brute: N must be positive");
  BigInt total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += d;
    if (d != n / d) total += n / d;
  }
  return total;
}

namespace {

// Subtrahends are the stream values <= n; `subtrahends` may hold more.
RecurrenceTrace run_recurrence(std::uint64_t n, const SigmaTable& table,
                               const std::vector<PentagonalTerm>& subtrahends,
                               BoundaryRule rule) {
  if (n == 0) throw std::domain_error("sigma_recurrence: N must be positive");
  if (!table.covers(n - 1)) {
    throw std::invalid_argument("sigma_recurrence: table must hold sigma(1..N-1)");
  }
  RecurrenceTrace trace;
  trace.n = n;
  for (const PentagonalTerm& t : subtrahends) {
    if (t.value > n) break;
    const auto argument = n - t.value.convert_to<std::uint64_t>();
    // The series coefficient moves across the equals sign.
    const int sign = -t.sign;
    BigInt magnitude;
    if (argument == 0) {
      magnitude = (rule == BoundaryRule::Enabled) ? BigInt(n) : BigInt(0);
    } else {
      magnitude = table[argument];
    }
    BigInt contribution = sign > 0 ? magnitude : BigInt(-magnitude);
    trace.result += contribution;
    trace.steps.push_back({t.value, argument, sign, std::move(contribution)});
  }
  return trace;
}

}  // namespace

std::string RecurrenceTrace::expression() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const BigInt magnitude = boost::multiprecision::abs(steps[j].contribution);
    if (j == 0) {
      os << (steps[j].sign < 0 ? "-" : "") << magnitude;
    } else {
      os << (steps[j].sign < 0 ? " - " : " + ") << magnitude;
    }
  }
  os << " = " << result;
  return os.str();
}

RecurrenceTrace sigma_recurrence_trace(std::uint64_t n, const SigmaTable& table,
                                       BoundaryRule rule) {
  return run_recurrence(n, table, terms_up_to(BigInt(n)), rule);
}

BigInt sigma_recurrence(std::uint64_t n, const SigmaTable& table, BoundaryRule rule) {
  return sigma_recurrence_trace(n, table, rule).result;
}

SigmaTable sigma_table(std::uint64_t max_n, SigmaMethod method, BoundaryRule rule) {
  if (max_n == 0) throw std::domain_error("sigma_table: max_n must be positive");
  SigmaTable table;
  if (method == SigmaMethod::Brute) {
    for (std::uint64_t n = 1; n <= max_n; ++n) table.push_back(sigma_brute(n));
    return table;
  }
  const auto subtrahends = terms_up_to(BigInt(max_n));
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    table.push_back(run_recurrence(n, table, subtrahends, rule).result);
  }
  return table;
}

void write_sigma_csv(std::ostream& out, const SigmaTable& table) {
  for (std::uint64_t n = 1; n <= table.max_n(); ++n) out << n << ',' << table[n] << '\n';
}

SigmaTable read_sigma_csv(std::istream& in) {
  SigmaTable table;
  std::string line;
  std::uint64_t expected = 1;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("sigma csv: missing comma in line " + std::to_string(expected));
    }
    std::uint64_t n = 0;
    BigInt sigma;
    try {
      std::size_t used = 0;
      n = std::stoull(line.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing characters");
      sigma = BigInt(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("sigma csv: malformed line '" + line + "'");
    }
    if (n != expected) {
      throw std::runtime_error("sigma csv: expected N=" + std::to_string(expected) +
                               ", found N=" + std::to_string(n));
    }
    if (sigma < 1) throw std::runtime_error("sigma csv: non-positive sigma at N=" + std::to_string(n));
    table.push_back(std::move(sigma));
    ++expected;
  }
  return table;
}

}  // namespace pentafold
