#pragma once

// `abtuple` command-line front end. Structured output is JSON on `out`,
// human-readable summaries go to `err`.
//
// Exit codes: 0 affirmative / success, 1 negative decision, 2 invalid input
// or usage, 3 budget exceeded.

#include <abtuple/abtuple.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace abtuple::cli {

enum Exit : int { kOk = 0, kNegative = 1, kInvalid = 2, kBudget = 3 };

/// Budget precedence: --budget flag, then ABTUPLE_BUDGET, then the default.
inline Integer resolve_budget(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("ABTUPLE_BUDGET")) text = env;
  }
  if (text.empty()) return kDefaultBudget;
  if (text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("budget must be a nonnegative integer: " + text);
  }
  return Integer(text);
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision and certification of subset-sum tuple properties in free abelian groups",
               "abtuple"};
  app.require_subcommand(1);

  std::string budget_flag;
  app.add_option("--budget", budget_flag, "Elementary comparison budget (overrides ABTUPLE_BUDGET)");

  std::string file;
  std::size_t s = 0;

  auto* rank_cmd = app.add_subcommand("rank", "Rank and HNF basis of the generated subgroup");
  rank_cmd->add_option("FILE", file, "Tuple file")->required();

  std::size_t r = 0;
  bool indexed = false;
  unsigned jobs = 1;
  auto* property_cmd = app.add_subcommand("property", "Decide property (P_{r,s})");
  property_cmd->add_option("--r", r, "Subset size r (default: q)");
  property_cmd->add_option("--s", s, "Sum size s")->required();
  property_cmd->add_flag("--indexed", indexed, "Use the sum-indexed search");
  property_cmd->add_option("--jobs", jobs, "Worker threads");
  property_cmd->add_option("FILE", file, "Tuple file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify as rank-below, type A or type B");
  classify_cmd->add_option("--s", s, "Parameter s")->required();
  classify_cmd->add_option("FILE", file, "Tuple file")->required();

  std::string cert_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a classification certificate");
  verify_cmd->add_option("--s", s, "Parameter s")->required();
  verify_cmd->add_option("FILE", file, "Tuple file")->required();
  verify_cmd->add_option("CERT_FILE", cert_file, "Certificate JSON")->required();

  auto* qbasis_cmd = app.add_subcommand("qbasis", "Rational adequate-basis certificate");
  qbasis_cmd->add_option("FILE", file, "Tuple file")->required();

  auto* adequate_cmd = app.add_subcommand("adequate-basis", "Decide existence of an integer adequate basis");
  adequate_cmd->add_option("FILE", file, "Tuple file")->required();

  auto* audit_cmd = app.add_subcommand("audit", "Audit the structural claims on one instance");
  audit_cmd->add_option("--s", s, "Parameter s")->required();
  audit_cmd->add_option("FILE", file, "Tuple file")->required();

  std::string kind;
  std::optional<std::size_t> k;
  std::vector<std::size_t> breaks;
  std::optional<std::size_t> dim;
  std::uint64_t seed = 0;
  unsigned unimodular_bound = 0;
  std::optional<std::uint64_t> permutation_seed;
  bool translate_by_member = false;
  std::string spec_file;
  std::string format = "json";
  auto* generate_cmd = app.add_subcommand("generate", "Generate a type A or type B instance");
  generate_cmd->add_option("--kind", kind, "a or b")->check(CLI::IsMember({"a", "b", "A", "B"}));
  generate_cmd->add_option("--s", s, "Parameter s");
  generate_cmd->add_option("--k", k, "Number of block inverses (type B)");
  generate_cmd->add_option("--breaks", breaks, "Breakpoints a_1,...,a_k (type B)")->delimiter(',');
  generate_cmd->add_option("--dim", dim, "Ambient dimension (default: s-1)");
  generate_cmd->add_option("--seed", seed, "Seed for the unimodular basis");
  generate_cmd->add_option("--unimodular-bound", unimodular_bound, "Max |transvection multiplier|");
  generate_cmd->add_option("--permutation-seed", permutation_seed, "Shuffle positions with this seed");
  generate_cmd->add_flag("--translate-by-member", translate_by_member, "Translate by a tuple value");
  generate_cmd->add_option("--spec", spec_file, "Generator spec JSON (replaces the flags)");
  generate_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  EnumerationJob job;
  std::string out_path;
  bool allow_nonzero = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive verification over a bounded universe");
  enumerate_cmd->add_option("--s", job.s, "Parameter s")->required();
  enumerate_cmd->add_option("--q", job.q, "Tuple length")->required();
  enumerate_cmd->add_option("--dim", job.dim, "Ambient dimension")->required();
  enumerate_cmd->add_option("--bound", job.bound, "Entries in [-B, B]")->required();
  enumerate_cmd->add_option("--jobs", job.workers, "Worker threads");
  enumerate_cmd->add_option("--out", out_path, "Also write the report to this path");
  enumerate_cmd->add_flag("--allow-nonzero", allow_nonzero, "Do not pin a zero element");

  std::vector<std::string> argv_storage{"abtuple"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    const Integer budget = resolve_budget(budget_flag);
    PropertyOptions options{budget, indexed ? SearchMode::indexed : SearchMode::reference, jobs};

    if (*rank_cmd) {
      const GroupTuple t = load_tuple(file);
      const Lattice l = span(t);
      emit(out, Json{{"rank", l.rank()}, {"dim", l.dim()}, {"basis", elements_json(l.basis())}});
      err << "rank " << l.rank() << '\n';
      return kOk;
    }

    if (*property_cmd) {
      const GroupTuple t = load_tuple(file);
      const std::size_t rr = r == 0 ? t.size() : r;
      const PropertyReport report = has_property(t, rr, s, options);
      emit(out, property_json(report));
      err << "(P_{" << rr << "," << s << "}) " << (report.holds ? "holds" : "fails") << '\n';
      return report.holds ? kOk : kNegative;
    }

    if (*classify_cmd) {
      const GroupTuple t = load_tuple(file);
      const Classification c = classify(t, s);
      Json j = classification_json(c);
      if (c.variant() == Variant::unclassified) {
        const bool violation = has_property(t, t.size(), s, options).holds;
        j["lemma_violation"] = violation;
        err << "UNCLASSIFIED: " << c.get<Unclassified>()->reason << '\n';
        if (violation) {
          err << "!!! POTENTIAL COUNTEREXAMPLE: tuple has (P_{q,s}) but matches neither type A nor type B !!!\n";
        }
        emit(out, j);
        return kNegative;
      }
      emit(out, j);
      err << variant_name(c.variant()) << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      const GroupTuple t = load_tuple(file);
      Json cert_json;
      try {
        cert_json = Json::parse(read_file(cert_file));
      } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid certificate JSON: ") + e.what());
      }
      const Classification c = classification_from_json(cert_json);
      const bool valid = c.s == s && verify_classification(t, c);
      emit(out, Json{{"valid", valid}});
      err << (valid ? "certificate verified" : "certificate REJECTED") << '\n';
      return valid ? kOk : kNegative;
    }

    if (*qbasis_cmd) {
      const GroupTuple t = load_tuple(file);
      const QBasisCertificate cert = q_basis_certificate(t);
      emit(out, certificate_json(cert));
      err << "rational basis of rank " << cert.rank() << '\n';
      return kOk;
    }

    if (*adequate_cmd) {
      const GroupTuple t = load_tuple(file);
      const AdequateBasisDecision d = adequate_basis_decide(t);
      emit(out, decision_json(d));
      err << (d.exists ? "adequate basis exists" : "no adequate basis exists") << '\n';
      return d.exists ? kOk : kNegative;
    }

    if (*audit_cmd) {
      const GroupTuple t = load_tuple(file);
      const AuditReport report = audit_claims(t, s, options);
      emit(out, audit_json(report));
      for (const auto& c : report.claims) {
        err << (c.pass ? "  pass " : "  FAIL ") << c.name;
        if (c.axis) err << " (axis " << *c.axis + 1 << ")";
        err << '\n';
      }
      return report.all_pass() ? kOk : kNegative;
    }

    if (*generate_cmd) {
      GeneratorSpec spec;
      if (!spec_file.empty()) {
        Json j;
        try {
          j = Json::parse(read_file(spec_file));
        } catch (const Json::exception& e) {
          throw ParseError(std::string("invalid generator spec JSON: ") + e.what());
        }
        spec = generator_spec_from_json(j);
      } else {
        if (kind.empty() || s == 0) throw ParseError("generate needs --kind and --s (or --spec)");
        spec.s = s;
        spec.kind = (kind == "a" || kind == "A") ? Kind::a : Kind::b;
        spec.dim = dim.value_or(std::max<std::size_t>(s - 1, 1));
        spec.seed = seed;
        spec.unimodular_bound = unimodular_bound;
        spec.permutation_seed = permutation_seed;
        spec.translate_by_member = translate_by_member;
        if (!breaks.empty()) {
          if (k && *k != breaks.size()) throw ParseError("--k does not match the number of --breaks");
          spec.breakpoints = breaks;
        } else if (k && *k > 0) {
          // Seeded choice of k distinct breakpoints in 1..s-1.
          if (*k > s - 1) throw DomainError("type B needs k <= s-1");
          std::vector<std::size_t> pool;
          for (std::size_t a = 1; a + 1 <= s; ++a) pool.push_back(a);
          std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
          std::shuffle(pool.begin(), pool.end(), rng);
          spec.breakpoints.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(*k));
          std::sort(spec.breakpoints.begin(), spec.breakpoints.end());
        }
      }
      const GroupTuple t = generate(spec);
      if (format == "text") {
        out << format_tuple_text(t);
      } else {
        emit(out, tuple_json(t));
      }
      err << "generated " << (spec.kind == Kind::a ? "type A" : "type B") << " instance, q=" << t.size()
          << '\n';
      return kOk;
    }

    if (*enumerate_cmd) {
      job.require_zero = !allow_nonzero;
      job.budget = budget;
      const EnumerationReport report = run_enumeration(job);
      const Json j = enumeration_json(report);
      if (!out_path.empty()) {
        std::ofstream file_out(out_path);
        if (!file_out) throw ParseError("cannot write " + out_path);
        file_out << j.dump(2) << '\n';
        if (!file_out) throw ParseError("failed writing " + out_path);
      }
      emit(out, j);
      err << "visited " << report.visited << " canonical tuples, " << report.qualifying
          << " with property and zero; unclassified " << report.unclassified << ", audit failures "
          << report.audit_failures << '\n';
      if (!report.ok()) {
        err << "!!! " << report.anomalies.size() << " LEMMA COUNTEREXAMPLE CANDIDATE(S) !!!\n";
        return kNegative;
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

}  // namespace abtuple::cli
