#pragma once

#include <abtuple/element.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace abtuple {

/// Rational row vector stored as numerator / denominator with a single
/// positive denominator, always in lowest terms.
class RationalVector {
 public:
  RationalVector(std::vector<Integer> numerator, Integer denominator)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (numerator_.empty()) throw DimensionError("rational vector must have dimension >= 1");
    if (denominator_ == 0) throw DomainError("zero denominator");
    normalize();
  }
  explicit RationalVector(const GroupElement& e) : RationalVector(e.coords(), 1) {}

  std::size_t dim() const { return numerator_.size(); }
  const std::vector<Integer>& numerator() const { return numerator_; }
  const Integer& denominator() const { return denominator_; }

  Rational operator[](std::size_t i) const { return Rational(numerator_[i], denominator_); }

  /// k * this, as an exact rational vector.
  RationalVector scaled(const Integer& k) const {
    std::vector<Integer> num = numerator_;
    for (auto& x : num) x *= k;
    return RationalVector(std::move(num), denominator_);
  }

  bool is_integral() const { return denominator_ == 1; }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  void normalize() {
    if (denominator_ < 0) {
      denominator_ = -denominator_;
      for (auto& x : numerator_) x = -x;
    }
    Integer g = denominator_;
    for (const auto& x : numerator_) g = gcd(g, x);
    if (g > 1) {
      denominator_ /= g;
      for (auto& x : numerator_) x /= g;
    }
  }

  std::vector<Integer> numerator_;
  Integer denominator_;
};

/// Sum over tau of coeffs[tau] * vectors[tau], exactly.
inline RationalVector rational_combination(std::span<const RationalVector> vectors,
                                           std::span<const Integer> coeffs) {
  if (vectors.empty() || vectors.size() != coeffs.size()) {
    throw DomainError("rational combination needs matching nonempty inputs");
  }
  const std::size_t dim = vectors.front().dim();
  Integer den = 1;
  for (const auto& v : vectors) den = lcm(den, v.denominator());
  std::vector<Integer> num(dim);
  for (std::size_t t = 0; t < vectors.size(); ++t) {
    if (vectors[t].dim() != dim) throw DimensionError("rational vector dimension mismatch");
    const Integer scale = coeffs[t] * (den / vectors[t].denominator());
    for (std::size_t j = 0; j < dim; ++j) num[j] += scale * vectors[t].numerator()[j];
  }
  return RationalVector(std::move(num), den);
}

/// Rational coefficients c with v = sum_t c[t] * basis[t], or nullopt when v is
/// outside the rational span. `basis` must be linearly independent.
inline std::optional<std::vector<Rational>> rational_coordinates(
    std::span<const GroupElement> basis, const GroupElement& v) {
  const std::size_t t = basis.size();
  const std::size_t dim = v.dim();
  // Augmented system: dim equations, t unknowns, columns are basis vectors.
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(t + 1));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      if (basis[k].dim() != dim) throw DimensionError("basis dimension mismatch");
      m[j][k] = Rational(basis[k][j]);
    }
    m[j][t] = Rational(v[j]);
  }
  std::vector<std::size_t> pivot_row(t, dim);
  std::size_t row = 0;
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t p = row;
    while (p < dim && m[p][col] == 0) ++p;
    if (p == dim) throw DomainError("basis vectors are linearly dependent");
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t k = col; k <= t; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < dim; ++i) {
    if (m[i][t] != 0) return std::nullopt;
  }
  std::vector<Rational> out(t);
  for (std::size_t col = 0; col < t; ++col) out[col] = m[pivot_row[col]][t];
  return out;
}

}  // namespace abtuple
