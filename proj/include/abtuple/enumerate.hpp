#pragma once

// Exhaustive desk-scale verification: visits every tuple of a bounded
// universe up to reordering and checks, for each tuple with property
// (P_{q,s}) and a zero element, the rank bound, the classification, the
// equal-pair consequence and the structural audit.
//
// Canonical form: the multiset of elements sorted lexicographically; with
// require_zero one zero is pinned at position 0 and the remaining q-1
// elements follow in sorted order.

#include <abtuple/audit.hpp>
#include <abtuple/classify.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/json.hpp>
#include <abtuple/property.hpp>
#include <abtuple/tuple.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace abtuple {

struct EnumerationJob {
  std::size_t s = 2;
  std::size_t q = 3;
  std::size_t dim = 1;
  unsigned bound = 1;
  bool require_zero = true;
  unsigned workers = 1;
  Integer budget = kDefaultBudget;
};

inline void validate(const EnumerationJob& job) {
  if (job.dim < 1) throw DomainError("enumeration needs dim >= 1");
  if (job.bound < 1) throw DomainError("enumeration needs bound >= 1");
  check_classify_arity(job.q, job.s);
}

inline std::uint64_t value_count(const EnumerationJob& job) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < job.dim; ++i) v *= 2 * job.bound + 1;
  return v;
}

/// Number of canonical tuples in the universe.
inline Integer universe_size(const EnumerationJob& job) {
  const std::uint64_t v = value_count(job);
  const std::size_t free = job.require_zero ? job.q - 1 : job.q;
  return binomial(static_cast<std::size_t>(v + free - 1), free);
}

inline Integer enumeration_work(const EnumerationJob& job) {
  return universe_size(job) * property_work(job.q, job.q, job.s);
}

/// The value with lexicographic rank `index` in [-bound, bound]^dim.
inline GroupElement value_at(const EnumerationJob& job, std::uint64_t index) {
  const std::uint64_t base = 2 * job.bound + 1;
  std::vector<Integer> coords(job.dim);
  for (std::size_t i = job.dim; i-- > 0;) {
    coords[i] = static_cast<long long>(index % base) - static_cast<long long>(job.bound);
    index /= base;
  }
  return GroupElement(std::move(coords));
}

/// Visits the canonical tuples whose first free value index satisfies
/// `take_prefix`, in lexicographic order of the free index sequence.
inline void for_each_canonical_tuple(const EnumerationJob& job,
                                     const std::function<bool(std::uint64_t)>& take_prefix,
                                     const std::function<void(const GroupTuple&)>& visit) {
  const std::uint64_t v = value_count(job);
  const std::size_t free = job.require_zero ? job.q - 1 : job.q;
  std::vector<GroupElement> values;
  values.reserve(v);
  for (std::uint64_t i = 0; i < v; ++i) values.push_back(value_at(job, i));

  std::vector<std::uint64_t> seq(free, 0);
  std::vector<GroupElement> elements;
  const GroupElement zero = GroupElement::zero(job.dim);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t lo) {
    if (pos == free) {
      elements.clear();
      if (job.require_zero) elements.push_back(zero);
      for (auto i : seq) elements.push_back(values[i]);
      visit(GroupTuple(elements));
      return;
    }
    for (std::uint64_t i = lo; i < v; ++i) {
      if (pos == 0 && !take_prefix(i)) continue;
      seq[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

inline void for_each_canonical_tuple(const EnumerationJob& job,
                                     const std::function<void(const GroupTuple&)>& visit) {
  for_each_canonical_tuple(job, [](std::uint64_t) { return true; }, visit);
}

struct EnumerationAnomaly {
  GroupTuple tuple;
  std::vector<std::string> reasons;
  Json classification;
  std::vector<std::string> failed_claims;
};

struct EnumerationReport {
  EnumerationJob job;
  Integer universe = 0;
  std::uint64_t visited = 0;
  std::uint64_t with_property = 0;
  std::uint64_t qualifying = 0;  // property and a zero element
  std::map<std::size_t, std::uint64_t> by_rank;
  std::map<std::string, std::uint64_t> by_variant;
  std::map<std::size_t, std::uint64_t> type_b_by_k;
  std::uint64_t rank_bound_violations = 0;
  std::uint64_t equal_pair_missing = 0;
  std::uint64_t audit_failures = 0;
  std::uint64_t unclassified = 0;
  std::vector<EnumerationAnomaly> anomalies;

  bool ok() const { return anomalies.empty(); }

  void merge(EnumerationReport&& other) {
    visited += other.visited;
    with_property += other.with_property;
    qualifying += other.qualifying;
    for (const auto& [k, n] : other.by_rank) by_rank[k] += n;
    for (const auto& [k, n] : other.by_variant) by_variant[k] += n;
    for (const auto& [k, n] : other.type_b_by_k) type_b_by_k[k] += n;
    rank_bound_violations += other.rank_bound_violations;
    equal_pair_missing += other.equal_pair_missing;
    audit_failures += other.audit_failures;
    unclassified += other.unclassified;
    for (auto& a : other.anomalies) anomalies.push_back(std::move(a));
  }
};

/// Checks one tuple and accumulates into `report`.
inline void examine_tuple(const GroupTuple& t, std::size_t s, const PropertyOptions& options,
                          EnumerationReport& report) {
  ++report.visited;
  if (!has_property(t, t.size(), s, options).holds) return;
  ++report.with_property;
  if (!t.contains_zero()) return;
  ++report.qualifying;

  EnumerationAnomaly anomaly{t, {}, {}, {}};
  const std::size_t r = rank(t);
  ++report.by_rank[r];
  if (r + 1 > s) {
    ++report.rank_bound_violations;
    anomaly.reasons.push_back("rank-bound");
  }

  const Classification c = classify(t, s);
  ++report.by_variant[variant_name(c.variant())];
  if (const auto* b = c.get<TypeB>()) ++report.type_b_by_k[b->k()];
  if (c.variant() == Variant::unclassified) {
    ++report.unclassified;
    anomaly.reasons.push_back("unclassified");
  } else if (!verify_classification(t, c)) {
    anomaly.reasons.push_back("certificate-rejected");
  }

  if (!equal_pair(t)) {
    ++report.equal_pair_missing;
    anomaly.reasons.push_back("equal-pair");
  }

  const AuditReport audit = audit_claims(t, s, options);
  if (!audit.all_pass()) {
    ++report.audit_failures;
    anomaly.reasons.push_back("audit");
    for (const auto& claim : audit.claims) {
      if (!claim.pass) anomaly.failed_claims.push_back(claim.name);
    }
  }

  if (!anomaly.reasons.empty()) {
    anomaly.classification = classification_json(c);
    report.anomalies.push_back(std::move(anomaly));
  }
}

inline EnumerationReport run_enumeration(const EnumerationJob& job) {
  validate(job);
  const Integer work = enumeration_work(job);
  if (work > job.budget) {
    throw BudgetExceeded("enumeration needs about " + work.str() + " comparisons, budget is " +
                         job.budget.str());
  }

  const unsigned workers = std::max(1u, job.workers);
  const PropertyOptions options{job.budget};
  std::vector<EnumerationReport> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for_each_canonical_tuple(
              job, [&](std::uint64_t prefix) { return prefix % workers == w; },
              [&](const GroupTuple& t) { examine_tuple(t, job.s, options, partial[w]); });
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EnumerationReport report;
  report.job = job;
  report.universe = universe_size(job);
  for (auto& p : partial) report.merge(std::move(p));
  std::sort(report.anomalies.begin(), report.anomalies.end(),
            [](const EnumerationAnomaly& a, const EnumerationAnomaly& b) {
              return std::lexicographical_compare(a.tuple.begin(), a.tuple.end(), b.tuple.begin(),
                                                  b.tuple.end());
            });
  return report;
}

inline Json enumeration_json(const EnumerationReport& report) {
  const auto& job = report.job;
  Json by_rank = Json::object();
  for (const auto& [k, n] : report.by_rank) by_rank[std::to_string(k)] = n;
  Json by_variant = Json::object();
  for (const auto& [k, n] : report.by_variant) by_variant[k] = n;
  Json by_k = Json::object();
  for (const auto& [k, n] : report.type_b_by_k) by_k[std::to_string(k)] = n;
  Json anomalies = Json::array();
  for (const auto& a : report.anomalies) {
    anomalies.push_back({{"tuple", elements_json(a.tuple.elements())},
                         {"reasons", a.reasons},
                         {"failed_claims", a.failed_claims},
                         {"classification", a.classification}});
  }
  return Json{{"job",
               {{"s", job.s},
                {"q", job.q},
                {"dim", job.dim},
                {"bound", job.bound},
                {"require_zero", job.require_zero}}},
              {"universe", integer_json(report.universe)},
              {"visited", report.visited},
              {"with_property", report.with_property},
              {"qualifying", report.qualifying},
              {"by_rank", std::move(by_rank)},
              {"by_variant", std::move(by_variant)},
              {"type_b_by_k", std::move(by_k)},
              {"rank_bound_violations", report.rank_bound_violations},
              {"equal_pair_missing", report.equal_pair_missing},
              {"audit_failures", report.audit_failures},
              {"unclassified", report.unclassified},
              {"anomalies", std::move(anomalies)},
              {"ok", report.ok()}};
}

}  // namespace abtuple
