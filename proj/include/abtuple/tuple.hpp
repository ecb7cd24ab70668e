#pragma once

#include <abtuple/element.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/lattice.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace abtuple {

/// An ordered q-tuple (q >= 1) of group elements sharing one dimension.
/// Positions are part of the data; repeated values are allowed.
class GroupTuple {
 public:
  explicit GroupTuple(std::vector<GroupElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DomainError("tuple must contain at least one element");
    for (const auto& e : elements_) {
      if (e.dim() != elements_.front().dim()) throw DimensionError("tuple elements differ in dimension");
    }
  }
  GroupTuple(std::initializer_list<GroupElement> elements)
      : GroupTuple(std::vector<GroupElement>(elements)) {}

  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains_zero() const {
    for (const auto& e : elements_) {
      if (e.is_zero()) return true;
    }
    return false;
  }
  std::size_t zero_count() const {
    std::size_t n = 0;
    for (const auto& e : elements_) n += e.is_zero() ? 1 : 0;
    return n;
  }

  friend bool operator==(const GroupTuple&, const GroupTuple&) = default;

 private:
  std::vector<GroupElement> elements_;
};

/// Element-wise alpha_i - c; the additive form of proportionality.
inline GroupTuple translate(const GroupTuple& t, const GroupElement& c) {
  if (c.dim() != t.dim()) throw DimensionError("translation dimension mismatch");
  std::vector<GroupElement> out;
  out.reserve(t.size());
  for (const auto& e : t) out.push_back(e - c);
  return GroupTuple(std::move(out));
}

inline Lattice span(const GroupTuple& t) { return hnf_rows(t.elements(), t.dim()); }

inline std::size_t rank(const GroupTuple& t) { return span(t).rank(); }

/// Sum of the elements at the given (0-based, distinct) positions.
inline GroupElement subset_sum(const GroupTuple& t, std::span<const std::size_t> indices) {
  std::vector<bool> seen(t.size());
  GroupElement sum = GroupElement::zero(t.dim());
  for (std::size_t i : indices) {
    if (i >= t.size()) throw DomainError("subset index out of range");
    if (seen[i]) throw DomainError("repeated subset index");
    seen[i] = true;
    sum += t[i];
  }
  return sum;
}

inline GroupTuple subtuple(const GroupTuple& t, std::span<const std::size_t> indices) {
  std::vector<GroupElement> out;
  for (std::size_t i : indices) {
    if (i >= t.size()) throw DomainError("subtuple index out of range");
    out.push_back(t[i]);
  }
  return GroupTuple(std::move(out));
}

/// Tuple whose position p holds t[order[p]].
inline GroupTuple permute(const GroupTuple& t, std::span<const std::size_t> order) {
  if (order.size() != t.size()) throw DomainError("permutation length does not match tuple");
  return subtuple(t, order);
}

/// Lexicographically first pair i < j with t[i] == t[j].
inline std::optional<std::pair<std::size_t, std::size_t>> equal_pair(const GroupTuple& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

/// Applies the linear map `u` (dim x dim, acting on column vectors) to every
/// element. Unimodular `u` is an automorphism of Z^dim.
inline GroupTuple apply_linear(const IntMatrix& u, const GroupTuple& t) {
  const std::size_t d = t.dim();
  if (u.size() != d) throw DimensionError("matrix size does not match tuple dimension");
  std::vector<GroupElement> out;
  out.reserve(t.size());
  for (const auto& e : t) {
    std::vector<Integer> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i].size() != d) throw DimensionError("matrix is not square");
      for (std::size_t j = 0; j < d; ++j) c[i] += u[i][j] * e[j];
    }
    out.emplace_back(std::move(c));
  }
  return GroupTuple(std::move(out));
}

}  // namespace abtuple
