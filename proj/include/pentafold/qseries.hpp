#ifndef PENTAFOLD_QSERIES_HPP
#define PENTAFOLD_QSERIES_HPP

#include "pentafold/numeric.hpp"
#include "pentafold/pentagonal.hpp"

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace pentafold {

/// Power series truncated at degree_cap: coeffs()(d) is the coefficient of x^d.
template <typename Scalar>
class BasicSeries {
 public:
  using Coefficients = Vector<Scalar>;

  explicit BasicSeries(std::uint64_t degree_cap)
      : coeffs_(Coefficients::Zero(static_cast<Eigen::Index>(degree_cap + 1))) {}

  explicit BasicSeries(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) throw std::domain_error("BasicSeries: need at least one coefficient");
  }

  /// 1 - x^k, truncated at degree_cap.
  static BasicSeries one_minus_power(std::uint64_t k, std::uint64_t degree_cap) {
    BasicSeries s(degree_cap);
    s.coeffs_(0) += Scalar(1);
    if (k <= degree_cap) s.coeffs_(static_cast<Eigen::Index>(k)) -= Scalar(1);
    return s;
  }

  std::uint64_t degree_cap() const { return static_cast<std::uint64_t>(coeffs_.size() - 1); }
  const Coefficients& coeffs() const { return coeffs_; }
  Coefficients& coeffs() { return coeffs_; }
  const Scalar& operator[](std::uint64_t d) const { return coeffs_(static_cast<Eigen::Index>(d)); }

  /// In-place multiplication by (1 - x^k); degrees above the cap are dropped.
  BasicSeries& multiply_one_minus_power(std::uint64_t k) {
    const auto len = coeffs_.size();
    if (k == 0) {
      coeffs_.setZero();
    } else if (static_cast<Eigen::Index>(k) < len) {
      const auto shift = static_cast<Eigen::Index>(k);
      // Descending so every read sees a not-yet-updated coefficient.
      for (Eigen::Index d = len - 1; d >= shift; --d) coeffs_(d) -= coeffs_(d - shift);
    }
    return *this;
  }

  std::uint64_t nonzero_count() const {
    std::uint64_t n = 0;
    for (Eigen::Index d = 0; d < coeffs_.size(); ++d) n += (coeffs_(d) != Scalar(0));
    return n;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  Coefficients coeffs_;
};

using DenseSeries = BasicSeries<BigInt>;

/// Convolution of a and b, discarding degrees above `cap`.
template <typename Scalar>
BasicSeries<Scalar> multiply_truncated(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b,
                                       std::uint64_t cap) {
  BasicSeries<Scalar> out(cap);
  const auto len = static_cast<Eigen::Index>(cap + 1);
  const auto b_len = std::min<Eigen::Index>(b.coeffs().size(), len);
  const auto a_len = std::min<Eigen::Index>(a.coeffs().size(), len);
  for (Eigen::Index i = 0; i < a_len; ++i) {
    const Scalar& ai = a.coeffs()(i);
    if (ai == Scalar(0)) continue;
    const Eigen::Index n = std::min(b_len, len - i);
    out.coeffs().segment(i, n) += b.coeffs().head(n) * ai;
  }
  return out;
}

/// prod_{k=1}^{M} (1 - x^k) truncated at degree M. Factors with k > M cannot
/// reach degrees <= M, so this agrees with the infinite product up to M.
DenseSeries euler_product(std::uint64_t degree_cap);

/// 1 + sum of sign * x^value over stream terms with value <= M.
DenseSeries pentagonal_series(std::uint64_t degree_cap);

/// e_1..e_K of the reciprocal roots, reading the series as prod (1 - x/root):
/// e_k = (-1)^k coeffs[k]. Element j of the result is e_{j+1}.
std::vector<BigInt> elementary_symmetric(const DenseSeries& s, std::uint64_t count);

/// p_1..p_K from Newton's identities on the elementary symmetric values.
std::vector<BigInt> power_sums(const DenseSeries& s, std::uint64_t count);

/// Newton's identities on already computed e_1..e_K.
std::vector<BigInt> power_sums_from_elementary(const std::vector<BigInt>& elementary);

/// One "degree,coefficient" line per nonzero coefficient.
void write_series_dump(std::ostream& out, const DenseSeries& s);

}  // namespace pentafold

#endif  // PENTAFOLD_QSERIES_HPP
