#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check (no Bareiss determinant, no primitive representatives, no sublattice
// index).

#include <abtuple/abtuple.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace abtuple::testing {

/// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][col] * cofactor_det(minor);
    total += (col % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline IntMatrix rows_of(const std::vector<GroupElement>& es) {
  IntMatrix m;
  for (const auto& e : es) m.push_back(e.coords());
  return m;
}

/// Random product of elementary row operations on an n x n identity.
template <typename Rng>
IntMatrix elementary_unimodular(std::size_t n, int bound, int steps, Rng& rng) {
  IntMatrix u(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) {
    if (n == 1 && rng() % 2) u[0][0] = -1;
    return u;
  }
  std::uniform_int_distribution<int> mult(-bound, bound);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < steps; ++step) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (i + 1) % n;
    switch (rng() % 3) {
      case 0: {
        const Integer c = mult(rng);
        for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
        break;
      }
      case 1: std::swap(u[i], u[j]); break;
      default:
        for (auto& x : u[i]) x = -x;
    }
  }
  return u;
}

/// Rows of u * rows.
inline std::vector<GroupElement> left_multiply(const IntMatrix& u, const std::vector<GroupElement>& rows) {
  std::vector<GroupElement> out;
  const std::size_t dim = rows.front().dim();
  for (const auto& urow : u) {
    std::vector<Integer> c(dim);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t j = 0; j < dim; ++j) c[j] += urow[k] * rows[k][j];
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

template <typename Rng>
GroupElement random_element(std::size_t dim, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Integer> c(dim);
  for (auto& x : c) x = d(rng);
  return GroupElement(std::move(c));
}

template <typename Rng>
GroupTuple random_tuple(std::size_t q, std::size_t dim, int lo, int hi, Rng& rng) {
  std::vector<GroupElement> es;
  for (std::size_t i = 0; i < q; ++i) es.push_back(random_element(dim, lo, hi, rng));
  return GroupTuple(std::move(es));
}

/// Integer l != 0 with a == l * b, if any (b nonzero).
inline std::optional<Integer> integer_ratio(const GroupElement& a, const GroupElement& b) {
  if (a.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (b[j] == 0) continue;
    if (a[j] % b[j] != 0) return std::nullopt;
    const Integer l = a[j] / b[j];
    if (l * b == a) return l;
    return std::nullopt;
  }
  return std::nullopt;
}

/// Brute-force adequate-basis search: enumerate candidate basis vectors
/// u * H (H the HNF basis of the span, u a coordinate row with entries in
/// [-B, B]) that are parallel to some tuple element, then look for `rank` of
/// them attached to distinct elements whose coordinate matrix has
/// determinant +-1. B is the largest coordinate of any tuple element in H,
/// which bounds the coordinates of every primitive divisor of an element.
inline bool adequate_basis_bruteforce(const GroupTuple& t) {
  const Lattice lattice = span(t);
  const std::size_t rank = lattice.rank();
  Integer bound = 1;
  for (const auto& e : t) {
    const auto coords = solve_coordinates(lattice, e);
    for (const auto& c : *coords) bound = std::max(bound, abs(c));
  }
  const long long b = static_cast<long long>(bound);

  struct Candidate {
    std::vector<Integer> coords;
    std::size_t element;
  };
  std::vector<Candidate> candidates;
  std::vector<Integer> u(rank, -b);
  for (;;) {
    bool nonzero = false;
    for (const auto& x : u) nonzero = nonzero || x != 0;
    if (nonzero) {
      GroupElement eta = GroupElement::zero(t.dim());
      for (std::size_t k = 0; k < rank; ++k) eta += u[k] * lattice.basis()[k];
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (integer_ratio(t[i], eta)) candidates.push_back({u, i});
      }
    }
    std::size_t pos = 0;
    while (pos < rank && u[pos] == b) u[pos++] = -b;
    if (pos == rank) break;
    ++u[pos];
  }

  std::vector<std::size_t> pick;
  std::vector<bool> used(t.size());
  std::function<bool(std::size_t)> search = [&](std::size_t from) -> bool {
    if (pick.size() == rank) {
      IntMatrix m;
      for (std::size_t c : pick) m.push_back(candidates[c].coords);
      return abs(cofactor_det(m)) == 1;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      if (used[candidates[c].element]) continue;
      used[candidates[c].element] = true;
      pick.push_back(c);
      if (search(c + 1)) return true;
      pick.pop_back();
      used[candidates[c].element] = false;
    }
    return false;
  };
  return search(0);
}

/// Unindexed reference for (P_{r,s}) straight from the definition, without
/// precomputed sums.
inline bool property_by_definition(const GroupTuple& t, std::size_t r, std::size_t s) {
  auto subset = first_combination(r);
  do {
    auto i_set = first_combination(s);
    do {
      GroupElement lhs = GroupElement::zero(t.dim());
      for (std::size_t k : i_set) lhs += t[subset[k]];
      bool found = false;
      auto j_set = first_combination(s);
      do {
        if (j_set == i_set) continue;
        GroupElement rhs = GroupElement::zero(t.dim());
        for (std::size_t k : j_set) rhs += t[subset[k]];
        found = rhs == lhs;
      } while (!found && next_combination(j_set, r));
      if (!found) return false;
    } while (next_combination(i_set, r));
  } while (next_combination(subset, t.size()));
  return true;
}

}  // namespace abtuple::testing
