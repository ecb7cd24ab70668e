#pragma once

// Certificate-producing classification of tuples that contain the zero
// element, relative to a parameter s with 2 <= s < q <= 2s:
//
//   RankBelow     rank < s-1
//   TypeA         q = 2s, s odd, and up to translation and reordering
//                 0, 0, b_1, b_1, ..., b_{s-1}, b_{s-1}
//   TypeB         q = 2s, and up to translation and reordering
//                 (s+1-k) zeros, b_1..b_{s-1},
//                 -(b_1+..+b_{a_1}), -(b_{a_1+1}+..+b_{a_2}), ..., -(..+b_{a_k})
//   Unclassified  anything else (rank > s-1, or rank s-1 without a match)
//
// In both canonical types {b_tau} is a Z-basis of the span of the tuple.
// Both patterns contain a zero, so the translation must be a tuple value;
// the candidate scalings are exactly the distinct values of the tuple.

#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/lattice.hpp>
#include <abtuple/rational.hpp>
#include <abtuple/tuple.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace abtuple {

struct RankBelow {
  std::size_t rank = 0;
};

struct TypeA {
  GroupElement scaling;
  std::vector<std::size_t> permutation;  // pattern position -> tuple position
  std::vector<GroupElement> basis;
};

struct TypeB {
  GroupElement scaling;
  std::vector<std::size_t> permutation;  // pattern position -> tuple position
  std::vector<GroupElement> basis;
  std::vector<std::size_t> breakpoints;  // a_1 < ... < a_k, values in 1..s-1

  std::size_t k() const { return breakpoints.size(); }
};

struct Unclassified {
  std::size_t rank = 0;
  std::string reason;
};

enum class Variant { rank_below, type_a, type_b, unclassified };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::rank_below: return "rank_below";
    case Variant::type_a: return "type_a";
    case Variant::type_b: return "type_b";
    case Variant::unclassified: return "unclassified";
  }
  return "?";
}

struct Classification {
  std::size_t s = 0;
  std::variant<RankBelow, TypeA, TypeB, Unclassified> result;

  Variant variant() const { return static_cast<Variant>(result.index()); }
  template <typename T>
  const T* get() const { return std::get_if<T>(&result); }
};

/// 0, 0, b_1, b_1, ..., b_{s-1}, b_{s-1}
inline std::vector<GroupElement> type_a_pattern(const std::vector<GroupElement>& basis,
                                                std::size_t dim) {
  std::vector<GroupElement> out(2, GroupElement::zero(dim));
  for (const auto& b : basis) {
    out.push_back(b);
    out.push_back(b);
  }
  return out;
}

/// (s+1-k) zeros, b_1..b_{s-1}, then the negated consecutive block sums.
inline std::vector<GroupElement> type_b_pattern(std::size_t s,
                                                const std::vector<GroupElement>& basis,
                                                const std::vector<std::size_t>& breakpoints,
                                                std::size_t dim) {
  const std::size_t k = breakpoints.size();
  std::vector<GroupElement> out(s + 1 - k, GroupElement::zero(dim));
  out.insert(out.end(), basis.begin(), basis.end());
  std::size_t start = 0;
  for (std::size_t a : breakpoints) {
    GroupElement block = GroupElement::zero(dim);
    for (std::size_t i = start; i < a; ++i) block += basis[i];
    out.push_back(-block);
    start = a;
  }
  return out;
}

inline void check_classify_arity(std::size_t q, std::size_t s) {
  if (s < 2 || q <= s || q > 2 * s) {
    throw DomainError("classification requires 2 <= s < q <= 2s (got q=" + std::to_string(q) +
                      ", s=" + std::to_string(s) + ")");
  }
}

namespace detail {

inline bool generates(const std::vector<GroupElement>& basis, const Lattice& lattice) {
  return basis.size() == lattice.rank() && hnf_rows(basis, lattice.dim()) == lattice;
}

inline std::optional<TypeA> match_type_a(const GroupTuple& t, const GroupElement& scaling,
                                         std::size_t s, const Lattice& lattice) {
  if (s % 2 == 0 || t.size() != 2 * s) return std::nullopt;
  const GroupTuple u = translate(t, scaling);
  // Group positions by value, in order of first occurrence.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return u[g.front()] == u[i]; });
    if (it == groups.end()) {
      groups.push_back({i});
    } else {
      it->push_back(i);
    }
  }
  if (groups.size() != s) return std::nullopt;
  std::vector<std::size_t> permutation;
  std::vector<GroupElement> basis;
  bool has_zero = false;
  for (const auto& g : groups) {
    if (g.size() != 2) return std::nullopt;
    if (u[g.front()].is_zero()) {
      has_zero = true;
      permutation.insert(permutation.begin(), g.begin(), g.end());
    }
  }
  if (!has_zero) return std::nullopt;
  for (const auto& g : groups) {
    if (u[g.front()].is_zero()) continue;
    basis.push_back(u[g.front()]);
    permutation.insert(permutation.end(), g.begin(), g.end());
  }
  if (!generates(basis, lattice)) return std::nullopt;
  return TypeA{scaling, std::move(permutation), std::move(basis)};
}

/// Tries to read u (already translated) as type B with the given ordered
/// basis positions; `others` are the remaining nonzero positions, `zeros`
/// the zero positions. Scaling is left for the caller to fill in.
inline std::optional<TypeB> match_type_b_with_basis(const GroupTuple& u, std::size_t s,
                                                    const std::vector<std::size_t>& zeros,
                                                    const std::vector<std::size_t>& basis_positions,
                                                    const std::vector<std::size_t>& others) {
  std::vector<GroupElement> basis;
  for (std::size_t p : basis_positions) basis.push_back(u[p]);

  std::vector<bool> covered(basis.size());
  std::vector<std::vector<std::size_t>> supports;
  for (std::size_t p : others) {
    auto coords = rational_coordinates(basis, u[p]);
    if (!coords) return std::nullopt;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < coords->size(); ++j) {
      const Rational& c = (*coords)[j];
      if (c == 0) continue;
      if (c != -1) return std::nullopt;
      if (covered[j]) return std::nullopt;
      covered[j] = true;
      support.push_back(j);
    }
    if (support.empty()) return std::nullopt;
    supports.push_back(std::move(support));
  }

  // Reorder the basis so each support is a consecutive block, blocks first.
  std::vector<std::size_t> order;
  std::vector<std::size_t> breakpoints;
  for (const auto& support : supports) {
    order.insert(order.end(), support.begin(), support.end());
    breakpoints.push_back(order.size());
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!covered[j]) order.push_back(j);
  }
  if (zeros.size() + breakpoints.size() != s + 1) return std::nullopt;

  TypeB out{GroupElement::zero(u.dim()), zeros, {}, std::move(breakpoints)};
  for (std::size_t j : order) {
    out.basis.push_back(basis[j]);
    out.permutation.push_back(basis_positions[j]);
  }
  out.permutation.insert(out.permutation.end(), others.begin(), others.end());
  return out;
}

inline std::optional<TypeB> match_type_b(const GroupTuple& t, const GroupElement& scaling,
                                         std::size_t s, const Lattice& lattice) {
  if (t.size() != 2 * s) return std::nullopt;
  const GroupTuple u = translate(t, scaling);
  std::vector<std::size_t> zeros;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < u.size(); ++i) (u[i].is_zero() ? zeros : nonzero).push_back(i);
  if (zeros.size() < 2 || zeros.size() > s + 1) return std::nullopt;
  const std::size_t k = s + 1 - zeros.size();
  // Basis values and negated block sums are pairwise distinct.
  std::sort(nonzero.begin(), nonzero.end(), [&](std::size_t a, std::size_t b) {
    return u[a] < u[b] || (u[a] == u[b] && a < b);
  });
  for (std::size_t i = 1; i < nonzero.size(); ++i) {
    if (u[nonzero[i]] == u[nonzero[i - 1]]) return std::nullopt;
  }
  if (nonzero.size() != s - 1 + k) return std::nullopt;

  auto choice = first_combination(s - 1);
  do {
    std::vector<std::size_t> basis_positions;
    std::vector<GroupElement> basis;
    for (std::size_t c : choice) {
      basis_positions.push_back(nonzero[c]);
      basis.push_back(u[nonzero[c]]);
    }
    if (!generates(basis, lattice)) continue;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (!std::binary_search(choice.begin(), choice.end(), i)) others.push_back(nonzero[i]);
    }
    if (auto b = match_type_b_with_basis(u, s, zeros, basis_positions, others)) {
      b->scaling = scaling;
      return b;
    }
  } while (next_combination(choice, nonzero.size()));
  return std::nullopt;
}

}  // namespace detail

inline Classification classify(const GroupTuple& t, std::size_t s) {
  check_classify_arity(t.size(), s);
  if (!t.contains_zero()) throw DomainError("classification requires a zero element");

  const Lattice lattice = span(t);
  const std::size_t r = lattice.rank();
  if (r + 1 < s) return {s, RankBelow{r}};
  if (r + 1 > s) return {s, Unclassified{r, "rank exceeds s-1"}};
  if (t.size() != 2 * s) return {s, Unclassified{r, "rank equals s-1 but q != 2s"}};

  std::vector<GroupElement> candidates;
  for (const auto& e : t) {
    if (std::find(candidates.begin(), candidates.end(), e) == candidates.end()) candidates.push_back(e);
  }
  for (const auto& c : candidates) {
    if (auto a = detail::match_type_a(t, c, s, lattice)) return {s, std::move(*a)};
  }
  for (const auto& c : candidates) {
    if (auto b = detail::match_type_b(t, c, s, lattice)) return {s, std::move(*b)};
  }
  return {s, Unclassified{r, "rank equals s-1 but no type A or type B certificate exists"}};
}

namespace detail {

inline bool is_permutation_of(const std::vector<std::size_t>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n);
  for (std::size_t i : p) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

inline bool matches_pattern(const GroupTuple& t, const GroupElement& scaling,
                            const std::vector<std::size_t>& permutation,
                            const std::vector<GroupElement>& pattern) {
  if (scaling.dim() != t.dim() || !is_permutation_of(permutation, t.size()) ||
      pattern.size() != t.size()) {
    return false;
  }
  for (std::size_t p = 0; p < pattern.size(); ++p) {
    if (t[permutation[p]] - scaling != pattern[p]) return false;
  }
  return true;
}

inline bool is_integer_basis(const std::vector<GroupElement>& basis, const Lattice& lattice) {
  for (const auto& b : basis) {
    if (b.dim() != lattice.dim()) return false;
  }
  const Lattice generated = hnf_rows(basis, lattice.dim());
  if (generated.rank() != basis.size() || !is_sublattice(generated, lattice)) return false;
  const auto index = sublattice_index(generated, lattice);
  return index && *index == 1;
}

}  // namespace detail

/// Pure re-check of a certificate against `t`; no search.
inline bool verify_classification(const GroupTuple& t, const Classification& c) {
  const std::size_t s = c.s;
  if (s < 2) return false;
  if (const auto* below = c.get<RankBelow>()) {
    return below->rank + 1 < s && rank(t) == below->rank;
  }
  if (const auto* a = c.get<TypeA>()) {
    if (s % 2 == 0 || t.size() != 2 * s || a->basis.size() != s - 1) return false;
    for (const auto& b : a->basis) {
      if (b.dim() != t.dim()) return false;
    }
    return detail::matches_pattern(t, a->scaling, a->permutation, type_a_pattern(a->basis, t.dim())) &&
           detail::is_integer_basis(a->basis, span(t));
  }
  if (const auto* b = c.get<TypeB>()) {
    if (t.size() != 2 * s || b->basis.size() != s - 1 || b->k() > s - 1) return false;
    for (const auto& e : b->basis) {
      if (e.dim() != t.dim()) return false;
    }
    std::size_t prev = 0;
    for (std::size_t a : b->breakpoints) {
      if (a <= prev || a > s - 1) return false;
      prev = a;
    }
    return detail::matches_pattern(t, b->scaling, b->permutation,
                                   type_b_pattern(s, b->basis, b->breakpoints, t.dim())) &&
           detail::is_integer_basis(b->basis, span(t));
  }
  return false;
}

/// Re-bases a type B certificate on the values at `chosen` (s-1 positions):
/// the remaining nonzero values become negated sums over disjoint subsets of
/// the new basis.
inline TypeB rebase_type_b(const GroupTuple& t, const Classification& c,
                           const std::vector<std::size_t>& chosen) {
  const auto* cert = c.get<TypeB>();
  if (!cert || !verify_classification(t, c)) throw DomainError("not a valid type B certificate");
  const std::size_t s = c.s;
  if (chosen.size() != s - 1) throw DomainError("rebasing needs exactly s-1 positions");

  const GroupTuple u = translate(t, cert->scaling);
  std::vector<bool> is_chosen(t.size());
  std::vector<GroupElement> values;
  for (std::size_t p : chosen) {
    if (p >= t.size() || is_chosen[p]) throw DomainError("chosen positions must be distinct and in range");
    is_chosen[p] = true;
    values.push_back(u[p]);
  }
  const Lattice lattice = span(t);
  if (hnf_rows(values, t.dim()).rank() != values.size()) {
    throw DomainError("chosen values are linearly dependent");
  }
  if (!detail::generates(values, lattice)) {
    throw DomainError("chosen values do not form an integer basis of the span");
  }
  std::vector<std::size_t> zeros;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) {
      zeros.push_back(i);
    } else if (!is_chosen[i]) {
      others.push_back(i);
    }
  }
  auto out = detail::match_type_b_with_basis(u, s, zeros, chosen, others);
  if (!out) throw DomainError("remaining values are not negated disjoint sums of the chosen basis");
  out->scaling = cert->scaling;
  return std::move(*out);
}

}  // namespace abtuple
