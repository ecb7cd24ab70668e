#pragma once

// Exact integer lattice algebra: every subgroup of Z^n is kept in one
// canonical form, the row-style Hermite normal form (pivot entries positive,
// pivots moving strictly right, entries above a pivot reduced into
// [0, pivot)). Two lattices are equal iff their HNF bases are equal.

#include <abtuple/element.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace abtuple {

class Lattice;
Lattice hnf_rows(std::span<const GroupElement> rows, std::size_t dim);

class Lattice {
 public:
  /// The full lattice Z^dim.
  static Lattice full(std::size_t dim) {
    std::vector<GroupElement> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Integer> c(dim);
      c[i] = 1;
      rows.emplace_back(std::move(c));
    }
    return hnf_rows(rows, dim);
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<GroupElement>& basis() const { return basis_; }
  /// Column index of the pivot of each basis row.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend Lattice hnf_rows(std::span<const GroupElement>, std::size_t);

  Lattice(std::size_t dim, std::vector<GroupElement> basis, std::vector<std::size_t> pivots)
      : dim_(dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t dim_;
  std::vector<GroupElement> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical HNF basis of the integer row span of `rows`. Zero and duplicate
/// rows are fine; the result does not depend on row order.
inline Lattice hnf_rows(std::span<const GroupElement> rows, std::size_t dim) {
  if (dim == 0) throw DimensionError("lattice dimension must be >= 1");
  IntMatrix a;
  a.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.dim() != dim) throw DimensionError("row dimension does not match lattice dimension");
    if (!row.is_zero()) a.push_back(row.coords());
  }

  const std::size_t m = a.size();
  auto subtract_multiple = [&](std::size_t target, std::size_t source, const Integer& k) {
    for (std::size_t j = 0; j < dim; ++j) a[target][j] -= k * a[source][j];
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < m; ++col) {
    // Euclid on column `col` over rows r..m-1 until a single nonzero remains.
    bool found = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (a[i][col] != 0 && (best == m || abs(a[i][col]) < abs(a[best][col]))) best = i;
      }
      if (best == m) break;
      found = true;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        subtract_multiple(i, r, Integer(a[i][col] / a[r][col]));
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      subtract_multiple(i, r, floor_div(a[i][col], a[r][col]));
    }
    pivots.push_back(col);
    ++r;
  }

  std::vector<GroupElement> basis;
  basis.reserve(r);
  for (std::size_t i = 0; i < r; ++i) basis.emplace_back(std::move(a[i]));
  return Lattice(dim, std::move(basis), std::move(pivots));
}

inline Lattice hnf_rows(std::initializer_list<GroupElement> rows, std::size_t dim) {
  return hnf_rows(std::span<const GroupElement>(rows.begin(), rows.size()), dim);
}

/// Coordinates of `v` in the basis of `lattice`, or nullopt when v is not in
/// the lattice. Unique because the basis rows are independent.
inline std::optional<std::vector<Integer>> solve_coordinates(const Lattice& lattice,
                                                            const GroupElement& v) {
  if (v.dim() != lattice.dim()) throw DimensionError("vector dimension does not match lattice");
  std::vector<Integer> residual = v.coords();
  std::vector<Integer> coords(lattice.rank());
  for (std::size_t t = 0; t < lattice.rank(); ++t) {
    const std::size_t p = lattice.pivots()[t];
    const auto& row = lattice.basis()[t].coords();
    if (residual[p] % row[p] != 0) return std::nullopt;
    coords[t] = residual[p] / row[p];
    if (coords[t] == 0) continue;
    for (std::size_t j = p; j < residual.size(); ++j) residual[j] -= coords[t] * row[j];
  }
  for (const auto& x : residual) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

inline bool contains(const Lattice& lattice, const GroupElement& v) {
  return solve_coordinates(lattice, v).has_value();
}

/// sum_t coords[t] * basis[t].
inline GroupElement combine(const Lattice& lattice, std::span<const Integer> coords) {
  if (coords.size() != lattice.rank()) throw DimensionError("coordinate count does not match rank");
  GroupElement out = GroupElement::zero(lattice.dim());
  for (std::size_t t = 0; t < coords.size(); ++t) out += coords[t] * lattice.basis()[t];
  return out;
}

inline bool is_sublattice(const Lattice& sub, const Lattice& lattice) {
  if (sub.dim() != lattice.dim()) return false;
  for (const auto& row : sub.basis()) {
    if (!contains(lattice, row)) return false;
  }
  return true;
}

/// Group index [lattice : sub]; nullopt stands for an infinite index
/// (rank(sub) < rank(lattice)). Throws if `sub` is not contained in `lattice`.
inline std::optional<Integer> sublattice_index(const Lattice& sub, const Lattice& lattice) {
  if (sub.dim() != lattice.dim()) throw DimensionError("lattice dimension mismatch");
  IntMatrix coords;
  for (const auto& row : sub.basis()) {
    auto c = solve_coordinates(lattice, row);
    if (!c) throw NotContainedError("sublattice is not contained in lattice");
    coords.push_back(std::move(*c));
  }
  if (sub.rank() < lattice.rank()) return std::nullopt;
  return abs(determinant(std::move(coords)));
}

struct PrimitiveRepresentative {
  GroupElement element;
  /// Signed multiplier: v = multiple * element.
  Integer multiple;
};

/// The primitive element of `lattice` parallel to `v`, normalized so that its
/// first nonzero coordinate is positive. The multiplier carries the sign of v.
inline PrimitiveRepresentative primitive_representative(const Lattice& lattice,
                                                        const GroupElement& v) {
  if (v.dim() != lattice.dim()) throw DimensionError("vector dimension does not match lattice");
  if (v.is_zero()) throw DomainError("zero vector has no primitive representative");
  auto coords = solve_coordinates(lattice, v);
  if (!coords) throw NotContainedError("vector is not in the lattice");
  Integer g = 0;
  for (const auto& c : *coords) g = gcd(g, c);
  for (auto& c : *coords) c /= g;
  GroupElement p = combine(lattice, *coords);
  for (const auto& c : p.coords()) {
    if (c == 0) continue;
    if (c < 0) {
      p = -p;
      g = -g;
    }
    break;
  }
  return {std::move(p), std::move(g)};
}

}  // namespace abtuple
