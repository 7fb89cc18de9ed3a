#ifndef PENTAFOLD_CYCLOTOMIC_HPP
#define PENTAFOLD_CYCLOTOMIC_HPP

// Integral group ring of the cyclic group of order m: formal combinations of
// alpha^0 .. alpha^{m-1} with alpha^m = 1. All cancellation checks below are
// exact; floating point only enters through RootOfUnity and evaluate().

#include "pentafold/numeric.hpp"

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentafold {

template <typename Scalar>
class BasicCycVec {
 public:
  using Coordinates = Vector<Scalar>;

  explicit BasicCycVec(std::uint64_t m) : coords_(Coordinates::Zero(index(m))) {
    if (m == 0) throw std::domain_error("CycVec: order must be positive");
  }

  static BasicCycVec monomial(std::uint64_t m, std::uint64_t r, Scalar c = Scalar(1)) {
    BasicCycVec v(m);
    v.add_monomial(r, std::move(c));
    return v;
  }

  std::uint64_t order() const { return static_cast<std::uint64_t>(coords_.size()); }
  const Coordinates& coords() const { return coords_; }
  const Scalar& operator[](std::uint64_t r) const { return coords_(index(r)); }

  /// Adds c * alpha^e; e is reduced mod m.
  BasicCycVec& add_monomial(std::uint64_t e, const Scalar& c) {
    coords_(index(e % order())) += c;
    return *this;
  }

  bool is_zero() const {
    for (Eigen::Index r = 0; r < coords_.size(); ++r) {
      if (coords_(r) != Scalar(0)) return false;
    }
    return true;
  }

  BasicCycVec& operator+=(const BasicCycVec& o) {
    check_same_order(o);
    coords_ += o.coords_;
    return *this;
  }
  BasicCycVec& operator-=(const BasicCycVec& o) {
    check_same_order(o);
    coords_ -= o.coords_;
    return *this;
  }

  friend BasicCycVec operator+(BasicCycVec a, const BasicCycVec& b) { return a += b; }
  friend BasicCycVec operator-(BasicCycVec a, const BasicCycVec& b) { return a -= b; }

  /// Group-ring product: exponents add mod m.
  friend BasicCycVec operator*(const BasicCycVec& a, const BasicCycVec& b) {
    a.check_same_order(b);
    const std::uint64_t m = a.order();
    BasicCycVec out(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      if (a[i] == Scalar(0)) continue;
      for (std::uint64_t j = 0; j < m; ++j) out.coords_(index((i + j) % m)) += a[i] * b[j];
    }
    return out;
  }

  /// Multiplication by alpha^j.
  BasicCycVec rotated(std::uint64_t j) const {
    BasicCycVec out(order());
    for (std::uint64_t r = 0; r < order(); ++r) out.coords_(index((r + j) % order())) = (*this)[r];
    return out;
  }

  friend bool operator==(const BasicCycVec& a, const BasicCycVec& b) {
    return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
  }

  /// Image under alpha -> z.
  std::complex<double> evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    std::complex<double> power = 1.0;
    for (std::uint64_t r = 0; r < order(); ++r) {
      acc += static_cast<double>((*this)[r]) * power;
      power *= z;
    }
    return acc;
  }

 private:
  static Eigen::Index index(std::uint64_t v) { return static_cast<Eigen::Index>(v); }
  void check_same_order(const BasicCycVec& o) const {
    if (o.order() != order()) throw std::domain_error("CycVec: order mismatch");
  }

  Coordinates coords_;
};

using CycVec = BasicCycVec<BigInt>;

/// "[c0 c1 ... c_{m-1}]"
std::string to_string(const CycVec& v);

/// cos(2 i pi / m) + sqrt(-1) sin(2 i pi / m).
struct RootOfUnity {
  std::uint64_t m = 1;
  std::uint64_t i = 0;
  double re = 1.0;
  double im = 0.0;

  std::complex<double> value() const { return {re, im}; }
};

RootOfUnity root_of_unity(std::uint64_t m, std::int64_t i);

/// All m roots, i = 0..m-1. Throws std::domain_error for m = 0.
std::vector<RootOfUnity> roots_of_unity(std::uint64_t m);

/// Closed radical forms of the roots of 1 - x^m for m = 1..6, as listed for
/// the factors (1-x)(1-x^2)...(1-x^6). Throws std::domain_error otherwise.
std::vector<std::complex<double>> radical_roots(std::uint64_t m);

/// Constant +1 at residue 0 plus sign * alpha^{value * i} over the first
/// term_count - 1 stream terms.
CycVec substitute_stream(std::uint64_t m, std::int64_t i, std::uint64_t term_count);

struct ProfileEntry {
  int sign = 1;
  std::uint64_t residue = 0;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// (sign, exponent mod m) at stream positions 0 .. 4m-1, position 0 being
/// the constant term.
std::vector<ProfileEntry> period_profile(std::uint64_t m);

struct PeriodViolation {
  std::uint64_t block = 0;
  std::uint64_t position = 0;  // absolute stream position (0 = constant)
  std::string what;
};

struct PeriodReport {
  std::uint64_t m = 1;
  std::uint64_t periods = 0;
  std::vector<PeriodViolation> violations;
  /// Largest |per-residue signed count| seen in any block.
  BigInt max_residue_sum;
  /// Sum of the 4m running partial sums of the first block. Reported only;
  /// the per-residue basis check is the asserted form.
  CycVec partial_sum_aggregate{1};

  bool passed() const { return violations.empty(); }
};

/// Checks `periods` consecutive 4m-term blocks: every residue's signed count
/// is zero, and each block repeats the previous block position by position.
PeriodReport verify_period_cancellation(std::uint64_t m, std::uint64_t periods);

/// Signs of the first `count` stream terms (constant included) whose exponent
/// is congruent to r mod m. Empty when the residue never occurs.
/// Throws std::domain_error for r >= m.
std::vector<int> residue_substream(std::uint64_t m, std::uint64_t r, std::size_t count);

/// Number of stream terms per 4m block falling in residue class r.
std::uint64_t residue_occurrences(std::uint64_t m, std::uint64_t r);

struct BasisReport {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::uint64_t period_length = 0;  // 0 when the residue never occurs
  std::vector<int> signs;           // one sub-period
  std::vector<BigInt> partial_sums;
  BigInt signed_sum;
  BigInt basis_sum;

  bool passed() const { return signed_sum == 0 && basis_sum == 0; }
  /// "m,r,period_length,signed_sum,basis_sum,PASS|FAIL"
  std::string line() const;
};

/// Finds the smallest sign period L of the residue substream (searching up to
/// 4m) and checks that both the signed sum over L terms and the sum of the L
/// running partial sums vanish.
BasisReport verify_basis_cancellation(std::uint64_t m, std::uint64_t r);

/// "m,all,4m,max_residue_sum,aggregate,PASS|FAIL"
std::string period_line(const PeriodReport& report);

}  // namespace pentafold

#endif  // PENTAFOLD_CYCLOTOMIC_HPP
