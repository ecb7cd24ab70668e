#pragma once

// Rational "adequate basis" certificates and the partitions built on them.
//
// For a tuple of rank t we pick t rationally independent elements
// alpha_{i_1}..alpha_{i_t} (greedily, in tuple order) and put
// eta_tau = alpha_{i_tau} / l_tau, where l_tau is the least positive integer
// that makes every alpha_i an integer combination of the eta's. Then
//   alpha_{i_tau} = l_tau * eta_tau,   alpha_i = sum_tau l(i,tau) * eta_tau.

#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/lattice.hpp>
#include <abtuple/rational.hpp>
#include <abtuple/tuple.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace abtuple {

struct QBasisCertificate {
  std::vector<std::size_t> indices;   // i_1..i_t, 0-based
  std::vector<Integer> multipliers;   // l_1..l_t > 0
  std::vector<RationalVector> eta;    // eta_1..eta_t
  IntMatrix exponents;                // q x t, l(i,tau)

  std::size_t rank() const { return indices.size(); }
};

inline QBasisCertificate q_basis_certificate(const GroupTuple& t) {
  QBasisCertificate cert;
  std::vector<GroupElement> chosen;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<GroupElement> trial = chosen;
    trial.push_back(t[i]);
    if (hnf_rows(trial, t.dim()).rank() > chosen.size()) {
      chosen = std::move(trial);
      cert.indices.push_back(i);
    }
  }
  const std::size_t rank = chosen.size();
  if (rank == 0) throw DomainError("rank-0 tuple has no rational basis");

  std::vector<std::vector<Rational>> coords;
  coords.reserve(t.size());
  for (const auto& e : t) {
    auto c = rational_coordinates(chosen, e);
    if (!c) throw DomainError("tuple element outside the span of the chosen basis");
    coords.push_back(std::move(*c));
  }

  cert.multipliers.assign(rank, 1);
  for (const auto& row : coords) {
    for (std::size_t tau = 0; tau < rank; ++tau) {
      cert.multipliers[tau] = lcm(cert.multipliers[tau], denominator(row[tau]));
    }
  }
  for (std::size_t tau = 0; tau < rank; ++tau) {
    cert.eta.emplace_back(chosen[tau].coords(), cert.multipliers[tau]);
  }
  for (const auto& row : coords) {
    std::vector<Integer> exps(rank);
    for (std::size_t tau = 0; tau < rank; ++tau) {
      const Rational l = row[tau] * cert.multipliers[tau];
      exps[tau] = numerator(l);
    }
    cert.exponents.push_back(std::move(exps));
  }
  return cert;
}

/// Checks every certificate invariant exactly against `t`.
inline bool verify_certificate(const GroupTuple& t, const QBasisCertificate& cert) {
  const std::size_t rank = cert.indices.size();
  if (rank == 0 || cert.multipliers.size() != rank || cert.eta.size() != rank ||
      cert.exponents.size() != t.size()) {
    return false;
  }
  std::vector<bool> used(t.size());
  for (std::size_t tau = 0; tau < rank; ++tau) {
    const std::size_t i = cert.indices[tau];
    if (i >= t.size() || used[i]) return false;
    used[i] = true;
    if (cert.multipliers[tau] <= 0 || cert.eta[tau].dim() != t.dim()) return false;
    if (cert.eta[tau].scaled(cert.multipliers[tau]) != RationalVector(t[i])) return false;
    for (std::size_t other = 0; other < rank; ++other) {
      const Integer expected = other == tau ? cert.multipliers[tau] : Integer(0);
      if (cert.exponents[i].size() != rank || cert.exponents[i][other] != expected) return false;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (cert.exponents[i].size() != rank) return false;
    if (rational_combination(cert.eta, cert.exponents[i]) != RationalVector(t[i])) return false;
  }
  // Independence of eta: clear denominators, check the integer rank.
  std::vector<GroupElement> scaled;
  for (const auto& e : cert.eta) scaled.emplace_back(e.numerator());
  return hnf_rows(scaled, t.dim()).rank() == rank;
}

/// M_0 = zero positions; M_tau = positions whose last nonzero exponent is at
/// axis tau and positive. Positions whose last nonzero exponent is negative
/// belong to no class; that set is empty exactly when all exponents are
/// nonnegative.
struct MPartition {
  std::vector<std::vector<std::size_t>> classes;  // classes[0] = M_0, classes[tau] = M_tau
  std::vector<std::size_t> unassigned;

  std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> m;
    for (const auto& c : classes) m.push_back(c.size());
    return m;
  }
};

inline void require_certificate(const GroupTuple& t, const QBasisCertificate& cert) {
  if (!verify_certificate(t, cert)) throw DomainError("certificate does not match tuple");
}

inline MPartition m_partition(const GroupTuple& t, const QBasisCertificate& cert) {
  require_certificate(t, cert);
  const std::size_t rank = cert.rank();
  MPartition out;
  out.classes.resize(rank + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& row = cert.exponents[i];
    std::size_t last = rank;
    for (std::size_t tau = rank; tau-- > 0;) {
      if (row[tau] != 0) {
        last = tau;
        break;
      }
    }
    if (last == rank) {
      out.classes[0].push_back(i);
    } else if (row[last] > 0) {
      out.classes[last + 1].push_back(i);
    } else {
      out.unassigned.push_back(i);
    }
  }
  return out;
}

/// Partition of positions by the sign of l(i, axis).
struct SignPartition {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> zero;
  std::vector<std::size_t> minus;

  std::size_t n_plus() const { return plus.size(); }
  std::size_t n_zero() const { return zero.size(); }
  std::size_t n_minus() const { return minus.size(); }
  std::size_t n_tilde() const { return std::min(plus.size(), minus.size()); }
};

/// `axis` is 0-based.
inline SignPartition sign_partition(const GroupTuple& t, const QBasisCertificate& cert,
                                    std::size_t axis) {
  if (axis >= cert.rank()) throw DomainError("axis out of range");
  require_certificate(t, cert);
  SignPartition out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Integer& l = cert.exponents[i][axis];
    (l > 0 ? out.plus : l < 0 ? out.minus : out.zero).push_back(i);
  }
  return out;
}

/// Whether any exponent in column `axis` is negative.
inline bool has_negative_exponent(const QBasisCertificate& cert, std::size_t axis) {
  return std::any_of(cert.exponents.begin(), cert.exponents.end(),
                     [axis](const std::vector<Integer>& row) { return row[axis] < 0; });
}

// Integer adequate basis.
//
// An adequate basis is a Z-basis eta_1..eta_t of span(t) with
// alpha_{i_tau} = d_tau * eta_tau for distinct positions i_tau. A basis
// element of a free abelian group is primitive, and along a fixed direction
// the primitive element is unique up to sign, so eta_tau must be
// +-primitive_representative(span, alpha_{i_tau}). The existential over all
// bases therefore reduces to a scan over the rationally independent t-subsets
// of positions: one of them works iff its primitive representatives generate
// span(t), i.e. have sublattice index 1.

struct AdequateBasisWitness {
  std::vector<std::size_t> indices;
  std::vector<Integer> multipliers;
  std::vector<GroupElement> basis;
};

struct AdequateBasisRefutation {
  std::vector<std::size_t> subset;
  Integer index;  // >= 2
};

struct AdequateBasisDecision {
  bool exists = false;
  std::optional<AdequateBasisWitness> witness;
  std::vector<AdequateBasisRefutation> refutation;  // every independent subset, lexicographic
};

inline AdequateBasisDecision adequate_basis_decide(const GroupTuple& t) {
  const Lattice lattice = span(t);
  const std::size_t rank = lattice.rank();
  if (rank == 0) throw DomainError("rank-0 tuple has no adequate basis");

  AdequateBasisDecision decision;
  auto subset = first_combination(rank);
  do {
    std::vector<GroupElement> chosen;
    for (std::size_t i : subset) chosen.push_back(t[i]);
    if (hnf_rows(chosen, t.dim()).rank() < rank) continue;

    AdequateBasisWitness candidate{subset, {}, {}};
    for (const auto& e : chosen) {
      auto rep = primitive_representative(lattice, e);
      candidate.basis.push_back(std::move(rep.element));
      candidate.multipliers.push_back(std::move(rep.multiple));
    }
    const Integer index = *sublattice_index(hnf_rows(candidate.basis, t.dim()), lattice);
    if (index == 1) {
      decision.exists = true;
      decision.witness = std::move(candidate);
      decision.refutation.clear();
      return decision;
    }
    decision.refutation.push_back({subset, index});
  } while (next_combination(subset, t.size()));
  return decision;
}

/// Independent re-check of a witness: each basis vector lies in span(t),
/// alpha_{i_tau} = d_tau * eta_tau, and the basis generates span(t).
inline bool verify_adequate_witness(const GroupTuple& t, const AdequateBasisWitness& w) {
  const Lattice lattice = span(t);
  if (w.indices.size() != lattice.rank() || w.multipliers.size() != w.indices.size() ||
      w.basis.size() != w.indices.size()) {
    return false;
  }
  std::vector<std::size_t> sorted = w.indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    if (w.indices[k] >= t.size() || w.basis[k].dim() != t.dim()) return false;
    if (!contains(lattice, w.basis[k])) return false;
    if (w.multipliers[k] * w.basis[k] != t[w.indices[k]]) return false;
  }
  const Lattice generated = hnf_rows(w.basis, t.dim());
  const auto index = sublattice_index(generated, lattice);
  return index && *index == 1;
}

}  // namespace abtuple
