// Walks through the library on a handful of small tuples.

#include <abtuple/abtuple.hpp>

#include <iostream>

using namespace abtuple;

int main() {
  const GroupTuple four{{1, 0, 0}, {1, 1, 0}, {1, 2, 2}, {1, 2, 5}};
  std::cout << "rank: " << rank(four) << '\n';
  std::cout << "adequate basis: " << decision_json(adequate_basis_decide(four)).dump() << "\n\n";

  const GroupTuple b{{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}, {-1, -1}};
  std::cout << "(P_{6,3}): " << property_json(has_property(b, 6, 3)).dump() << '\n';
  const Classification c = classify(b, 3);
  std::cout << "classification: " << classification_json(c).dump() << '\n';
  std::cout << "verified: " << std::boolalpha << verify_classification(b, c) << '\n';
  std::cout << "audit: " << (audit_claims(b, 3).all_pass() ? "all claims pass" : "claim failed") << "\n\n";

  GeneratorSpec spec;
  spec.kind = Kind::a;
  spec.s = 5;
  spec.dim = 4;
  spec.seed = 7;
  spec.unimodular_bound = 10;
  spec.permutation_seed = 3;
  spec.translate_by_member = true;
  const GroupTuple a = generate(spec);
  std::cout << "generated type A instance:\n" << format_tuple_text(a);
  std::cout << "classified as " << variant_name(classify(a, 5).variant()) << '\n';
}
