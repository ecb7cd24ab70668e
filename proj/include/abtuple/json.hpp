#pragma once

// JSON encodings. Integers are JSON numbers when they fit in int64 and
// decimal strings otherwise; both forms are accepted on input. Positions and
// axes are 1-based on the wire and 0-based in the C++ API.

#include <abtuple/classify.hpp>
#include <abtuple/errors.hpp>
#include <abtuple/generate.hpp>
#include <abtuple/integer.hpp>
#include <abtuple/property.hpp>
#include <abtuple/structure.hpp>
#include <abtuple/tuple.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace abtuple {

using Json = nlohmann::ordered_json;

inline Json integer_json(const Integer& a) {
  if (fits_int64(a)) return static_cast<std::int64_t>(a);
  return a.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) ==
                                          std::string::npos && s != "-";
    if (!digits) throw ParseError("invalid integer string: " + s);
    return Integer(s);
  }
  throw ParseError("expected an integer");
}

inline Json element_json(const GroupElement& e) {
  Json out = Json::array();
  for (const auto& c : e.coords()) out.push_back(integer_json(c));
  return out;
}

inline GroupElement element_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty integer array");
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(integer_from_json(c));
  return GroupElement(std::move(coords));
}

inline Json elements_json(const std::vector<GroupElement>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(element_json(e));
  return out;
}

inline std::vector<GroupElement> elements_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  std::vector<GroupElement> out;
  for (const auto& e : j) {
    out.push_back(element_from_json(e));
    if (out.back().dim() != dim) throw ParseError("vector dimension does not match");
  }
  return out;
}

inline Json positions_json(const std::vector<std::size_t>& positions) {
  Json out = Json::array();
  for (std::size_t p : positions) out.push_back(p + 1);
  return out;
}

inline std::vector<std::size_t> positions_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of positions");
  std::vector<std::size_t> out;
  for (const auto& p : j) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 1) {
      throw ParseError("positions are 1-based positive integers");
    }
    out.push_back(static_cast<std::size_t>(p.get<std::int64_t>() - 1));
  }
  return out;
}

inline Json tuple_json(const GroupTuple& t) {
  return Json{{"dim", t.dim()}, {"elements", elements_json(t.elements())}};
}

inline GroupTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("elements")) {
    throw ParseError("tuple JSON needs \"dim\" and \"elements\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(j["dim"].get<std::int64_t>());
  auto elements = elements_from_json(j["elements"], dim);
  if (elements.empty()) throw ParseError("tuple must contain at least one element");
  return GroupTuple(std::move(elements));
}

inline Json property_json(const PropertyReport& report) {
  Json out{{"holds", report.holds}, {"r", report.r}, {"s", report.s}};
  if (report.witness) {
    out["witness"] = {{"subset", positions_json(report.witness->subset)},
                      {"indices", positions_json(report.witness->indices)}};
  }
  return out;
}

inline Json rational_vector_num_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v.numerator()) out.push_back(integer_json(x));
  return out;
}

inline Json certificate_json(const QBasisCertificate& cert) {
  Json multipliers = Json::array();
  Json num = Json::array();
  Json den = Json::array();
  Json exponents = Json::array();
  for (const auto& l : cert.multipliers) multipliers.push_back(integer_json(l));
  for (const auto& e : cert.eta) {
    num.push_back(rational_vector_num_json(e));
    den.push_back(integer_json(e.denominator()));
  }
  for (const auto& row : cert.exponents) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_json(x));
    exponents.push_back(std::move(r));
  }
  return Json{{"indices", positions_json(cert.indices)},
              {"multipliers", std::move(multipliers)},
              {"eta_num", std::move(num)},
              {"eta_den", std::move(den)},
              {"exponents", std::move(exponents)}};
}

inline QBasisCertificate certificate_from_json(const Json& j) {
  QBasisCertificate cert;
  try {
    cert.indices = positions_from_json(j.at("indices"));
    for (const auto& l : j.at("multipliers")) cert.multipliers.push_back(integer_from_json(l));
    const auto& num = j.at("eta_num");
    const auto& den = j.at("eta_den");
    if (num.size() != den.size()) throw ParseError("eta_num and eta_den differ in length");
    for (std::size_t k = 0; k < num.size(); ++k) {
      cert.eta.emplace_back(element_from_json(num[k]).coords(), integer_from_json(den[k]));
    }
    for (const auto& row : j.at("exponents")) {
      std::vector<Integer> r;
      for (const auto& x : row) r.push_back(integer_from_json(x));
      cert.exponents.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

inline Json decision_json(const AdequateBasisDecision& d) {
  Json out{{"exists", d.exists}};
  if (d.witness) {
    Json multipliers = Json::array();
    for (const auto& m : d.witness->multipliers) multipliers.push_back(integer_json(m));
    out["witness"] = {{"indices", positions_json(d.witness->indices)},
                      {"multipliers", std::move(multipliers)},
                      {"basis", elements_json(d.witness->basis)}};
  } else {
    Json refutation = Json::array();
    for (const auto& r : d.refutation) {
      refutation.push_back({{"subset", positions_json(r.subset)}, {"index", integer_json(r.index)}});
    }
    out["refutation"] = std::move(refutation);
  }
  return out;
}

inline Json classification_json(const Classification& c) {
  Json out{{"variant", variant_name(c.variant())}, {"s", c.s}};
  if (const auto* below = c.get<RankBelow>()) {
    out["rank"] = below->rank;
  } else if (const auto* a = c.get<TypeA>()) {
    out["scaling"] = element_json(a->scaling);
    out["permutation"] = positions_json(a->permutation);
    out["basis"] = elements_json(a->basis);
  } else if (const auto* b = c.get<TypeB>()) {
    out["scaling"] = element_json(b->scaling);
    out["permutation"] = positions_json(b->permutation);
    out["basis"] = elements_json(b->basis);
    out["k"] = b->k();
    out["breakpoints"] = b->breakpoints;
  } else if (const auto* u = c.get<Unclassified>()) {
    out["rank"] = u->rank;
    out["reason"] = u->reason;
  }
  return out;
}

inline Classification classification_from_json(const Json& j) {
  try {
    const std::string variant = j.at("variant").get<std::string>();
    Classification c;
    c.s = j.at("s").get<std::size_t>();
    if (variant == "rank_below") {
      c.result = RankBelow{j.at("rank").get<std::size_t>()};
      return c;
    }
    if (variant == "unclassified") {
      c.result = Unclassified{j.at("rank").get<std::size_t>(), j.value("reason", std::string())};
      return c;
    }
    const GroupElement scaling = element_from_json(j.at("scaling"));
    auto permutation = positions_from_json(j.at("permutation"));
    auto basis = elements_from_json(j.at("basis"), scaling.dim());
    if (variant == "type_a") {
      c.result = TypeA{scaling, std::move(permutation), std::move(basis)};
      return c;
    }
    if (variant == "type_b") {
      auto breakpoints = j.at("breakpoints").get<std::vector<std::size_t>>();
      if (j.contains("k") && j["k"].get<std::size_t>() != breakpoints.size()) {
        throw ParseError("k does not match the number of breakpoints");
      }
      c.result = TypeB{scaling, std::move(permutation), std::move(basis), std::move(breakpoints)};
      return c;
    }
    throw ParseError("unknown classification variant: " + variant);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed classification: ") + e.what());
  }
}

inline GeneratorSpec generator_spec_from_json(const Json& j) {
  GeneratorSpec spec;
  try {
    spec.s = j.at("s").get<std::size_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "a" || kind == "A") {
      spec.kind = Kind::a;
    } else if (kind == "b" || kind == "B") {
      spec.kind = Kind::b;
    } else {
      throw ParseError("kind must be \"a\" or \"b\"");
    }
    spec.breakpoints = j.value("breakpoints", std::vector<std::size_t>{});
    if (j.contains("k") && j["k"].get<std::size_t>() != spec.breakpoints.size()) {
      throw ParseError("k does not match the number of breakpoints");
    }
    spec.dim = j.value("dim", std::max<std::size_t>(spec.s - 1, 1));
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.unimodular_bound = j.value("unimodular_bound", 0u);
    if (j.contains("permutation_seed")) spec.permutation_seed = j["permutation_seed"].get<std::uint64_t>();
    if (j.contains("translation")) spec.translation = element_from_json(j["translation"]);
    spec.translate_by_member = j.value("translate_by_member", false);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed generator spec: ") + e.what());
  }
  return spec;
}

}  // namespace abtuple
