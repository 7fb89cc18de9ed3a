#include "pentafold/cyclotomic.hpp"
#include "pentafold/pentagonal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pentafold {

std::string to_string(const CycVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::uint64_t r = 0; r < v.order(); ++r) os << (r ? " " : "") << v[r];
  os << ']';
  return os.str();
}

namespace {

std::uint64_t reduce_index(std::int64_t i, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((i % mm) + mm) % mm);
}

// Exponent of the term at `position` after substituting x -> alpha^i.
std::uint64_t substituted_residue(const PentagonalTerm& t, std::uint64_t i_mod, std::uint64_t m) {
  return mod_u64(BigInt(mod_u64(t.value, m)) * i_mod, m);
}

}  // namespace

RootOfUnity root_of_unity(std::uint64_t m, std::int64_t i) {
  if (m == 0) throw std::domain_error("roots_of_unity: m must be positive");
  const std::uint64_t idx = reduce_index(i, m);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(m);
  return RootOfUnity{m, idx, std::cos(angle), std::sin(angle)};
}

std::vector<RootOfUnity> roots_of_unity(std::uint64_t m) {
  if (m == 0) throw std::domain_error("roots_of_unity: m must be positive");
  std::vector<RootOfUnity> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(root_of_unity(m, static_cast<std::int64_t>(i)));
  return out;
}

std::vector<std::complex<double>> radical_roots(std::uint64_t m) {
  using C = std::complex<double>;
  const C sqrt_m1{0.0, 1.0};
  const C sqrt_m3{0.0, std::sqrt(3.0)};
  const double s5 = std::sqrt(5.0);
  // sqrt(-10 + 2 sqrt 5) and sqrt(-10 - 2 sqrt 5), both purely imaginary
  const C r_plus{0.0, std::sqrt(10.0 - 2.0 * s5)};
  const C r_minus{0.0, std::sqrt(10.0 + 2.0 * s5)};
  switch (m) {
    case 1:
      return {C{1.0}};
    case 2:
      return {C{1.0}, C{-1.0}};
    case 3:
      return {C{1.0}, -(1.0 + sqrt_m3) / 2.0, -(1.0 - sqrt_m3) / 2.0};
    case 4:
      return {C{1.0}, C{-1.0}, sqrt_m1, -sqrt_m1};
    case 5:
      return {C{1.0}, (-1.0 - s5 + r_plus) / 4.0, (-1.0 - s5 - r_plus) / 4.0,
              (-1.0 + s5 + r_minus) / 4.0, (-1.0 + s5 - r_minus) / 4.0};
    case 6:
      return {C{1.0}, C{-1.0}, (1.0 + sqrt_m3) / 2.0, (1.0 - sqrt_m3) / 2.0,
              (-1.0 + sqrt_m3) / 2.0, (-1.0 - sqrt_m3) / 2.0};
    default:
      throw std::domain_error("radical_roots: closed forms listed only for m = 1..6");
  }
}

CycVec substitute_stream(std::uint64_t m, std::int64_t i, std::uint64_t term_count) {
  if (term_count == 0) throw std::domain_error("substitute_stream: term_count must be positive");
  CycVec v(m);
  const std::uint64_t i_mod = reduce_index(i, m);
  for (std::uint64_t p = 0; p < term_count; ++p) {
    const PentagonalTerm t = term_at(p);
    v.add_monomial(substituted_residue(t, i_mod, m), BigInt(t.sign));
  }
  return v;
}

std::vector<ProfileEntry> period_profile(std::uint64_t m) {
  if (m == 0) throw std::domain_error("period_profile: m must be positive");
  std::vector<ProfileEntry> out;
  out.reserve(4 * m);
  for (std::uint64_t p = 0; p < 4 * m; ++p) {
    const PentagonalTerm t = term_at(p);
    out.push_back({t.sign, mod_u64(t.value, m)});
  }
  return out;
}

PeriodReport verify_period_cancellation(std::uint64_t m, std::uint64_t periods) {
  if (m == 0) throw std::domain_error("verify_period_cancellation: m must be positive");
  PeriodReport report;
  report.m = m;
  report.periods = periods;
  const std::uint64_t block_len = 4 * m;

  std::vector<ProfileEntry> previous;
  for (std::uint64_t block = 0; block < periods; ++block) {
    std::vector<ProfileEntry> current;
    current.reserve(block_len);
    CycVec counts(m);
    CycVec running(m);
    CycVec aggregate(m);
    for (std::uint64_t j = 0; j < block_len; ++j) {
      const std::uint64_t position = block * block_len + j;
      const PentagonalTerm t = term_at(position);
      const ProfileEntry entry{t.sign, mod_u64(t.value, m)};
      current.push_back(entry);
      counts.add_monomial(entry.residue, BigInt(entry.sign));
      if (block == 0) {
        running.add_monomial(entry.residue, BigInt(entry.sign));
        aggregate += running;
      }
      if (!previous.empty() && previous[j] != entry) {
        std::ostringstream os;
        os << "profile differs from previous block at offset " << j << ": (" << previous[j].sign
           << ',' << previous[j].residue << ") vs (" << entry.sign << ',' << entry.residue << ')';
        report.violations.push_back({block, position, os.str()});
      }
    }
    if (block == 0) report.partial_sum_aggregate = aggregate;
    for (std::uint64_t r = 0; r < m; ++r) {
      const BigInt magnitude = boost::multiprecision::abs(counts[r]);
      if (magnitude > report.max_residue_sum) report.max_residue_sum = magnitude;
      if (counts[r] != 0) {
        std::ostringstream os;
        os << "residue " << r << " has signed count " << counts[r];
        report.violations.push_back({block, block * block_len, os.str()});
      }
    }
    previous = std::move(current);
  }
  return report;
}

std::uint64_t residue_occurrences(std::uint64_t m, std::uint64_t r) {
  if (r >= m) throw std::domain_error("residue must be smaller than m");
  std::uint64_t c = 0;
  for (const ProfileEntry& e : period_profile(m)) c += (e.residue == r);
  return c;
}

std::vector<int> residue_substream(std::uint64_t m, std::uint64_t r, std::size_t count) {
  if (r >= m) throw std::domain_error("residue_substream: r must be smaller than m");
  std::vector<int> out;
  if (residue_occurrences(m, r) == 0) return out;
  out.reserve(count);
  for (std::uint64_t p = 0; out.size() < count; ++p) {
    const PentagonalTerm t = term_at(p);
    if (mod_u64(t.value, m) == r) out.push_back(t.sign);
  }
  return out;
}

BasisReport verify_basis_cancellation(std::uint64_t m, std::uint64_t r) {
  if (r >= m) throw std::domain_error("verify_basis_cancellation: r must be smaller than m");
  BasisReport report;
  report.m = m;
  report.r = r;
  // The substream repeats after `occurrences` terms, because the full stream
  // repeats after 4m positions; its smallest period lies in 1..occurrences.
  const std::uint64_t occurrences = residue_occurrences(m, r);
  if (occurrences == 0) return report;

  const std::vector<int> signs = residue_substream(m, r, 2 * occurrences);
  std::uint64_t period = occurrences;
  for (std::uint64_t len = 1; len < occurrences; ++len) {
    bool periodic = true;
    for (std::uint64_t j = 0; j < occurrences && periodic; ++j) periodic = signs[j] == signs[j + len];
    if (periodic) {
      period = len;
      break;
    }
  }

  report.period_length = period;
  report.signs.assign(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(period));
  BigInt running = 0;
  for (int s : report.signs) {
    running += s;
    report.partial_sums.push_back(running);
    report.basis_sum += running;
  }
  report.signed_sum = running;
  return report;
}

std::string BasisReport::line() const {
  std::ostringstream os;
  os << m << ',' << r << ',' << period_length << ',' << signed_sum << ',' << basis_sum << ','
     << (passed() ? "PASS" : "FAIL");
  return os.str();
}

std::string period_line(const PeriodReport& report) {
  std::ostringstream os;
  os << report.m << ",all," << 4 * report.m << ',' << report.max_residue_sum << ','
     << to_string(report.partial_sum_aggregate) << ',' << (report.passed() ? "PASS" : "FAIL");
  return os.str();
}

}  // namespace pentafold
