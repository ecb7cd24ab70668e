#pragma once

// Seeded factories for canonical type A / type B tuples and for random
// unimodular transforms.

#include <abtuple/classify.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/tuple.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace abtuple {

enum class Kind { a, b };

struct GeneratorSpec {
  std::size_t s = 2;
  Kind kind = Kind::b;
  std::vector<std::size_t> breakpoints;  // type B only; k = breakpoints.size()
  std::size_t dim = 1;
  std::uint64_t seed = 0;
  /// Max |multiplier| of the elementary transvections; 0 keeps the standard basis.
  unsigned unimodular_bound = 0;
  /// When set, positions are shuffled with this seed.
  std::optional<std::uint64_t> permutation_seed;
  /// Subtracted from every element after permuting.
  std::optional<GroupElement> translation;
  /// Subtract a (seeded) randomly chosen element of the tuple, keeping a zero present.
  bool translate_by_member = false;
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.s < 2) throw DomainError("generator needs s >= 2");
  if (spec.dim < spec.s - 1) throw DomainError("generator needs dim >= s-1");
  if (spec.kind == Kind::a) {
    if (spec.s % 2 == 0) throw DomainError("type A needs odd s");
    if (!spec.breakpoints.empty()) throw DomainError("type A takes no breakpoints");
  } else {
    if (spec.breakpoints.size() > spec.s - 1) throw DomainError("type B needs k <= s-1");
    std::size_t prev = 0;
    for (std::size_t a : spec.breakpoints) {
      if (a <= prev || a > spec.s - 1) {
        throw DomainError("breakpoints must be strictly increasing within 1..s-1");
      }
      prev = a;
    }
  }
  if (spec.translation && spec.translation->dim() != spec.dim) {
    throw DimensionError("translation dimension mismatch");
  }
}

inline IntMatrix identity_matrix(std::size_t dim) {
  IntMatrix m(dim, std::vector<Integer>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

/// Product of random elementary operations (transvections with multipliers in
/// [-bound, bound], row swaps, sign flips); determinant +-1 by construction.
template <typename Rng>
IntMatrix random_unimodular(std::size_t dim, unsigned bound, Rng& rng) {
  IntMatrix m = identity_matrix(dim);
  if (bound == 0) return m;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_int_distribution<long long> mult(-static_cast<long long>(bound), bound);
  std::bernoulli_distribution coin(0.5);
  const std::size_t steps = dim * (dim + 1);
  for (std::size_t step = 0; step < steps && dim > 1; ++step) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (j + 1) % dim;
    const Integer c = mult(rng);
    for (std::size_t col = 0; col < dim; ++col) m[i][col] += c * m[j][col];
    if (coin(rng)) std::swap(m[i], m[j]);
  }
  for (auto& row : m) {
    if (coin(rng)) {
      for (auto& x : row) x = -x;
    }
  }
  return m;
}

template <typename Rng>
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Canonical pattern over a random Z-basis of rank s-1 (the first s-1 rows of
/// a random unimodular matrix), then the optional shuffle and translation.
inline GroupTuple generate(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  const IntMatrix u = random_unimodular(spec.dim, spec.unimodular_bound, rng);
  std::vector<GroupElement> basis;
  for (std::size_t i = 0; i + 1 < spec.s; ++i) basis.emplace_back(u[i]);

  GroupTuple t(spec.kind == Kind::a ? type_a_pattern(basis, spec.dim)
                                    : type_b_pattern(spec.s, basis, spec.breakpoints, spec.dim));
  if (spec.permutation_seed) {
    std::mt19937_64 perm_rng(*spec.permutation_seed);
    t = permute(t, random_permutation(t.size(), perm_rng));
  }
  if (spec.translation) t = translate(t, *spec.translation);
  if (spec.translate_by_member) {
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    const GroupElement c = t[pick(rng)];
    t = translate(t, c);
  }
  return t;
}

}  // namespace abtuple
