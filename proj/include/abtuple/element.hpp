#pragma once

#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace abtuple {

/// Additive realization of an element of a finitely generated torsion-free
/// abelian group: an integer coordinate vector of fixed dimension >= 1.
class GroupElement {
 public:
  explicit GroupElement(std::vector<Integer> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionError("group element must have dimension >= 1");
  }
  GroupElement(std::initializer_list<long long> coords)
      : GroupElement(std::vector<Integer>(coords.begin(), coords.end())) {}

  static GroupElement zero(std::size_t dim) { return GroupElement(std::vector<Integer>(dim)); }

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
  }

  GroupElement& operator+=(const GroupElement& other) {
    check_dim(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
  }
  GroupElement& operator-=(const GroupElement& other) {
    check_dim(other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
  }
  GroupElement& operator*=(const Integer& k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }

  friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
  friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
  friend GroupElement operator-(GroupElement a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend GroupElement operator*(const Integer& k, GroupElement a) { return a *= k; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on (dim, coords).
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const int c = a.coords_[i].compare(b.coords_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += coords_[i].str();
    }
    return out + ")";
  }

 private:
  void check_dim(const GroupElement& other) const {
    if (other.dim() != dim()) throw DimensionError("group element dimension mismatch");
  }

  std::vector<Integer> coords_;
};

}  // namespace abtuple
