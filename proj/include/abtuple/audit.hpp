#pragma once

// Instance-level audit of the structural claims behind the classification of
// tuples with property (P_{q,s}) and a zero element (2 <= s < q <= 2s).
//
// The tuple is first normalized so that zero occurs at least twice (translate
// by the value of the first equal pair). With the greedy rational certificate
// of the normalized tuple:
//
//   Case alpha (no negative exponent):
//     partition-sums        no sub-collection of the M-class sizes sums to s
//     multiplicity-pattern  if rank >= s-1: rank = s-1, q = 2s, and the sizes
//                           are (s+1, 1, ..., 1) or (2, ..., 2) with s odd
//   Case beta, for every axis carrying a negative exponent (s >= 3, rank >= s-1):
//     induced-bounds        2 <= s-n~ < n_0 <= 2(s-n~), n~ = min(n_+, n_-)
//     induced-property      the N_0 subtuple has (P_{n_0, s-n~})
//     rank-drop             the N_0 subtuple has rank (rank - 1)
//     not-type-a            the N_0 subtuple does not classify as type A
//     sign-counts           n_+ = n_- = 1
//
// plus equal-pair, span-stability (when translated), rank-bound, and
// lemma-form (rank s-1 implies type A or B, consistent with the case).

#include <abtuple/classify.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/json.hpp>
#include <abtuple/property.hpp>
#include <abtuple/structure.hpp>
#include <abtuple/tuple.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abtuple {

enum class ProofCase { alpha, beta };

struct Claim {
  std::string name;
  bool pass = false;
  std::optional<std::size_t> axis;  // 0-based, per-axis claims only
  Json witness;
};

struct AuditReport {
  std::size_t s = 0;
  std::size_t q = 0;
  std::size_t rank = 0;
  ProofCase proof_case = ProofCase::alpha;
  std::optional<GroupElement> translation;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims) {
      if (!c.pass) return false;
    }
    return true;
  }
  const Claim* find(const std::string& name, std::optional<std::size_t> axis = std::nullopt) const {
    for (const auto& c : claims) {
      if (c.name == name && (!axis || c.axis == axis)) return &c;
    }
    return nullptr;
  }
};

namespace detail {

/// First sub-collection (bitmask over classes, nonempty) whose sizes sum to s.
inline std::optional<std::vector<std::size_t>> subset_with_sum(const std::vector<std::size_t>& sizes,
                                                              std::size_t s) {
  const std::size_t n = sizes.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t total = 0;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        total += sizes[i];
        picked.push_back(i);
      }
    }
    if (total == s) return picked;
  }
  return std::nullopt;
}

inline Json size_list_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

}  // namespace detail

inline AuditReport audit_claims(const GroupTuple& t, std::size_t s, const PropertyOptions& options = {}) {
  const std::size_t q = t.size();
  check_classify_arity(q, s);
  if (!t.contains_zero()) throw DomainError("audit requires a zero element");
  if (!has_property(t, q, s, options).holds) {
    throw DomainError("audit requires property (P_{q,s}) to hold");
  }

  AuditReport report;
  report.s = s;
  report.q = q;
  auto add = [&](std::string name, bool pass, Json witness, std::optional<std::size_t> axis = {}) {
    report.claims.push_back({std::move(name), pass, axis, std::move(witness)});
    return pass;
  };

  const auto pair = equal_pair(t);
  add("equal-pair", pair.has_value(),
      pair ? Json{{"positions", positions_json({pair->first, pair->second})}} : Json::object());

  GroupTuple u = t;
  if (t.zero_count() < 2 && pair) {
    report.translation = t[pair->first];
    u = translate(t, *report.translation);
    add("span-stability", span(u) == span(t), {{"translation", element_json(*report.translation)}});
  }

  const std::size_t r = rank(u);
  report.rank = r;
  add("rank-bound", r + 1 <= s, {{"rank", r}, {"bound", s - 1}});

  std::vector<std::size_t> sizes;
  std::optional<QBasisCertificate> cert;
  if (r == 0) {
    sizes = {q};
  } else {
    cert = q_basis_certificate(u);
    add("certificate-exact", verify_certificate(u, *cert), {{"indices", positions_json(cert->indices)}});
    for (std::size_t axis = 0; axis < r; ++axis) {
      if (has_negative_exponent(*cert, axis)) report.proof_case = ProofCase::beta;
    }
    if (report.proof_case == ProofCase::alpha) sizes = m_partition(u, *cert).multiplicities();
  }

  bool pattern_a = false;
  bool pattern_b = false;
  if (report.proof_case == ProofCase::alpha) {
    const auto hit = detail::subset_with_sum(sizes, s);
    Json w{{"multiplicities", detail::size_list_json(sizes)}};
    if (hit) w["classes_summing_to_s"] = detail::size_list_json(*hit);
    add("partition-sums", !hit, std::move(w));

    if (r + 1 >= s) {
      pattern_a = sizes.size() == s && sizes[0] == s + 1;
      pattern_b = sizes.size() == s && s % 2 == 1;
      for (std::size_t i = 1; i < sizes.size(); ++i) pattern_a = pattern_a && sizes[i] == 1;
      for (std::size_t m : sizes) pattern_b = pattern_b && m == 2;
      const bool pass = r + 1 == s && q == 2 * s && (pattern_a || pattern_b);
      add("multiplicity-pattern", pass,
          {{"multiplicities", detail::size_list_json(sizes)},
           {"pattern", pattern_a ? "a" : pattern_b ? "b" : "none"}});
    }
  } else if (s >= 3 && r + 1 >= s) {
    for (std::size_t axis = 0; axis < r; ++axis) {
      if (!has_negative_exponent(*cert, axis)) continue;
      const SignPartition sp = sign_partition(u, *cert, axis);
      const std::size_t n0 = sp.n_zero();
      const std::size_t nt = sp.n_tilde();
      const GroupTuple sub = subtuple(u, sp.zero);
      Json counts{{"n_plus", sp.n_plus()}, {"n_zero", n0}, {"n_minus", sp.n_minus()}, {"n_tilde", nt}};

      const bool bounds = nt < s && 2 <= s - nt && s - nt < n0 && n0 <= 2 * (s - nt);
      add("induced-bounds", bounds, counts, axis);

      const std::size_t sub_rank = rank(sub);
      add("rank-drop", sub_rank + 1 == r, {{"subtuple_rank", sub_rank}, {"rank", r}}, axis);

      if (bounds) {
        const auto induced = has_property(sub, n0, s - nt, options);
        Json w{{"subtuple", positions_json(sp.zero)}, {"r", n0}, {"s", s - nt}};
        if (induced.witness) w["failure"] = property_json(induced)["witness"];
        if (add("induced-property", induced.holds, std::move(w), axis)) {
          const Classification sub_class = classify(sub, s - nt);
          add("not-type-a", sub_class.variant() != Variant::type_a,
              {{"subtuple_variant", variant_name(sub_class.variant())}}, axis);
        }
      }
      add("sign-counts", sp.n_plus() == 1 && sp.n_minus() == 1, counts, axis);
    }
  }

  if (r + 1 == s) {
    const Classification c = classify(t, s);
    bool pass = verify_classification(t, c);
    if (report.proof_case == ProofCase::beta) {
      pass = pass && c.variant() == Variant::type_b;
    } else if (pattern_b) {
      pass = pass && c.variant() == Variant::type_a;
    } else if (pattern_a) {
      pass = pass && c.variant() == Variant::type_b && c.get<TypeB>()->k() == 0;
    } else {
      pass = false;
    }
    add("lemma-form", pass, {{"variant", variant_name(c.variant())}});
  }
  return report;
}

inline Json audit_json(const AuditReport& report) {
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.axis) entry["axis"] = *c.axis + 1;
    entry["witness"] = c.witness;
    claims.push_back(std::move(entry));
  }
  Json out{{"s", report.s},
           {"q", report.q},
           {"rank", report.rank},
           {"case", report.proof_case == ProofCase::alpha ? "alpha" : "beta"}};
  if (report.translation) out["translation"] = element_json(*report.translation);
  out["claims"] = std::move(claims);
  out["all_pass"] = report.all_pass();
  return out;
}

}  // namespace abtuple
