#include "oracles.hpp"

#include <abtuple/classify.hpp>
#include <abtuple/generate.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace abtuple;
using abtuple::testing::elementary_unimodular;

namespace {

using Positions = std::vector<std::size_t>;
using Elements = std::vector<GroupElement>;

const GroupTuple kTypeAS3{{0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}};
const GroupTuple kTypeBS3{{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}, {-1, -1}};

Elements sorted(Elements es) {
  std::sort(es.begin(), es.end());
  return es;
}

GeneratorSpec spec_b(std::size_t s, Positions breaks, std::size_t dim) {
  GeneratorSpec spec;
  spec.kind = Kind::b;
  spec.s = s;
  spec.breakpoints = std::move(breaks);
  spec.dim = dim;
  return spec;
}

Positions random_breakpoints(std::size_t s, std::mt19937_64& rng) {
  Positions out;
  for (std::size_t a = 1; a <= s - 1; ++a) {
    if (rng() % 2) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST(Classify, TypeBKZeroInDimensionOne) {
  const GroupTuple t{{0}, {0}, {0}, {3}};
  const auto c = classify(t, 2);
  const auto* b = c.get<TypeB>();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->k(), 0u);
  EXPECT_EQ(b->basis, (Elements{{3}}));
  EXPECT_EQ(b->scaling, GroupElement({0}));
  EXPECT_TRUE(verify_classification(t, c));
}

TEST(Classify, TypeBWithInverse) {
  const GroupTuple t{{0}, {0}, {2}, {-2}};
  const auto c = classify(t, 2);
  const auto* b = c.get<TypeB>();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->k(), 1u);
  EXPECT_EQ(b->breakpoints, (Positions{1}));
  EXPECT_TRUE(verify_classification(t, c));
}

TEST(Classify, TypeATwins) {
  const auto c = classify(kTypeAS3, 3);
  const auto* a = c.get<TypeA>();
  ASSERT_TRUE(a);
  EXPECT_EQ(sorted(a->basis), sorted({{1, 0}, {0, 1}}));
  EXPECT_EQ(a->scaling, GroupElement({0, 0}));
  EXPECT_TRUE(verify_classification(kTypeAS3, c));
}

TEST(Classify, TypeBBlockInverse) {
  const auto c = classify(kTypeBS3, 3);
  const auto* b = c.get<TypeB>();
  ASSERT_TRUE(b);
  EXPECT_EQ(b->k(), 1u);
  EXPECT_EQ(b->breakpoints, (Positions{2}));
  EXPECT_TRUE(verify_classification(kTypeBS3, c));
  // The block sum of the basis is the negation of the third nonzero value.
  EXPECT_EQ(-(b->basis[0] + b->basis[1]), kTypeBS3[b->permutation[5]]);
}

TEST(Classify, RankBelow) {
  const auto c = classify(GroupTuple{{0}, {0}, {0}}, 2);
  ASSERT_TRUE(c.get<RankBelow>());
  EXPECT_EQ(c.get<RankBelow>()->rank, 0u);
  EXPECT_TRUE(verify_classification(GroupTuple{{0}, {0}, {0}}, c));
}

TEST(Classify, UnclassifiedIsAResult) {
  const auto high = classify(GroupTuple{{0, 0}, {1, 0}, {0, 1}}, 2);
  EXPECT_EQ(high.variant(), Variant::unclassified);
  EXPECT_EQ(high.get<Unclassified>()->rank, 2u);

  const auto odd = classify(GroupTuple{{0}, {0}, {1}, {5}}, 2);
  EXPECT_EQ(odd.variant(), Variant::unclassified);
  EXPECT_FALSE(verify_classification(GroupTuple{{0}, {0}, {1}, {5}}, odd));
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(GroupTuple{{1}, {2}, {3}}, 2), DomainError);
  EXPECT_THROW(classify(GroupTuple{{0}, {0}}, 2), DomainError);
  EXPECT_THROW(classify(GroupTuple{{0}, {0}, {0}, {0}, {0}}, 2), DomainError);
}

TEST(Classify, NonZeroScaling) {
  const GroupTuple shifted = translate(kTypeBS3, {1, 0});
  const auto c = classify(shifted, 3);
  ASSERT_TRUE(c.get<TypeB>());
  EXPECT_EQ(c.get<TypeB>()->scaling, GroupElement({-1, 0}));
  EXPECT_TRUE(verify_classification(shifted, c));
}

TEST(Verify, DoubledBasisVectorRejected) {
  auto c = classify(kTypeAS3, 3);
  auto a = *c.get<TypeA>();
  a.basis[0] = Integer(2) * a.basis[0];
  EXPECT_FALSE(verify_classification(kTypeAS3, {3, a}));
}

TEST(Verify, ShiftedScalingRejected) {
  const auto c = classify(kTypeBS3, 3);
  auto b = *c.get<TypeB>();
  ASSERT_EQ(b.breakpoints, (Positions{2}));
  b.scaling = b.scaling + b.basis[0];
  EXPECT_FALSE(verify_classification(kTypeBS3, {3, b}));
}

TEST(Verify, MalformedCertificatesRejected) {
  const auto c = classify(kTypeBS3, 3);
  auto bad_perm = *c.get<TypeB>();
  bad_perm.permutation[0] = bad_perm.permutation[1];
  EXPECT_FALSE(verify_classification(kTypeBS3, {3, bad_perm}));

  auto bad_breaks = *c.get<TypeB>();
  bad_breaks.breakpoints = {3};
  EXPECT_FALSE(verify_classification(kTypeBS3, {3, bad_breaks}));

  EXPECT_FALSE(verify_classification(kTypeBS3, {3, RankBelow{1}}));
  EXPECT_FALSE(verify_classification(kTypeBS3, {3, Unclassified{2, ""}}));
  EXPECT_FALSE(verify_classification(kTypeBS3, {4, *c.get<TypeB>()}));
}

TEST(Generate, Examples) {
  GeneratorSpec a;
  a.kind = Kind::a;
  a.s = 3;
  a.dim = 2;
  EXPECT_EQ(generate(a), kTypeAS3);
  EXPECT_EQ(generate(spec_b(3, {2}, 2)), kTypeBS3);
  EXPECT_EQ(generate(spec_b(2, {1}, 1)), (GroupTuple{{0}, {0}, {1}, {-1}}));
}

TEST(Generate, InvalidSpecs) {
  GeneratorSpec even_a;
  even_a.kind = Kind::a;
  even_a.s = 4;
  even_a.dim = 3;
  EXPECT_THROW(generate(even_a), DomainError);
  EXPECT_THROW(generate(spec_b(3, {2, 1}, 2)), DomainError);
  EXPECT_THROW(generate(spec_b(3, {3}, 2)), DomainError);
  EXPECT_THROW(generate(spec_b(3, {0}, 2)), DomainError);
  EXPECT_THROW(generate(spec_b(4, {1}, 2)), DomainError);
}

TEST(Generate, DeterministicPerSeed) {
  auto spec = spec_b(4, {1, 3}, 4);
  spec.seed = 99;
  spec.unimodular_bound = 10;
  spec.permutation_seed = 7;
  spec.translate_by_member = true;
  EXPECT_EQ(generate(spec), generate(spec));
  auto other = spec;
  other.seed = 100;
  EXPECT_NE(generate(spec), generate(other));
}

TEST(Rebase, OnBlockInverse) {
  const auto c = classify(kTypeBS3, 3);
  const auto rebased = rebase_type_b(kTypeBS3, c, {3, 5});
  EXPECT_EQ(sorted(rebased.basis), sorted({{1, 0}, {-1, -1}}));
  EXPECT_EQ(rebased.k(), 1u);
  EXPECT_EQ(kTypeBS3[rebased.permutation[5]], GroupElement({0, 1}));
  EXPECT_EQ(-(rebased.basis[0] + rebased.basis[1]), GroupElement({0, 1}));
  EXPECT_TRUE(verify_classification(kTypeBS3, {3, rebased}));
}

TEST(Rebase, OriginalBasisIsStable) {
  const auto c = classify(kTypeBS3, 3);
  const auto* b = c.get<TypeB>();
  Positions original{b->permutation[3], b->permutation[4]};
  const auto rebased = rebase_type_b(kTypeBS3, c, original);
  EXPECT_EQ(sorted(rebased.basis), sorted(b->basis));
  EXPECT_EQ(rebased.breakpoints, b->breakpoints);
  EXPECT_TRUE(verify_classification(kTypeBS3, {3, rebased}));
}

TEST(Rebase, OneDimensional) {
  const GroupTuple t{{0}, {0}, {1}, {-1}};
  const auto rebased = rebase_type_b(t, classify(t, 2), {3});
  EXPECT_EQ(rebased.basis, (Elements{{-1}}));
  EXPECT_EQ(rebased.breakpoints, (Positions{1}));
  EXPECT_EQ(t[rebased.permutation[3]], GroupElement({1}));
  EXPECT_TRUE(verify_classification(t, {2, rebased}));
}

TEST(Rebase, Errors) {
  const GroupTuple k0 = generate(spec_b(3, {}, 2));
  const auto c = classify(k0, 3);
  EXPECT_THROW(rebase_type_b(k0, c, {0, 4}), DomainError);
  EXPECT_THROW(rebase_type_b(k0, c, {4}), DomainError);
  EXPECT_THROW(rebase_type_b(kTypeAS3, classify(kTypeAS3, 3), {2, 4}), DomainError);
}

TEST(ClassifyProperties, RoundTripOnGeneratedInstances) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    GeneratorSpec spec;
    spec.s = 2 + rng() % 4;
    spec.kind = (spec.s % 2 == 1 && rng() % 2) ? Kind::a : Kind::b;
    if (spec.kind == Kind::b) spec.breakpoints = random_breakpoints(spec.s, rng);
    spec.dim = spec.s - 1 + rng() % 2;
    spec.seed = rng();
    spec.unimodular_bound = 10;
    spec.permutation_seed = rng();
    spec.translate_by_member = true;
    const GroupTuple t = generate(spec);
    const auto c = classify(t, spec.s);
    EXPECT_EQ(c.variant(), spec.kind == Kind::a ? Variant::type_a : Variant::type_b);
    EXPECT_TRUE(verify_classification(t, c));
    if (const auto* b = c.get<TypeB>()) EXPECT_EQ(b->k(), spec.breakpoints.size());
  }
}

TEST(ClassifyProperties, Equivariance) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    GeneratorSpec spec;
    spec.s = 3;
    spec.kind = rng() % 2 ? Kind::a : Kind::b;
    if (spec.kind == Kind::b) spec.breakpoints = random_breakpoints(3, rng);
    spec.dim = 2;
    spec.seed = rng();
    spec.unimodular_bound = 3;
    const GroupTuple t = generate(spec);
    const auto base = classify(t, 3).variant();

    Positions order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const GroupTuple moved =
        apply_linear(elementary_unimodular(2, 5, 10, rng), permute(translate(t, t[rng() % t.size()]), order));
    const auto c = classify(moved, 3);
    EXPECT_EQ(c.variant(), base);
    EXPECT_TRUE(verify_classification(moved, c));
  }
}

TEST(ClassifyProperties, AAndBAreExclusive) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    GeneratorSpec spec;
    spec.s = 3 + 2 * (rng() % 2);
    spec.kind = rng() % 2 ? Kind::a : Kind::b;
    if (spec.kind == Kind::b) spec.breakpoints = random_breakpoints(spec.s, rng);
    spec.dim = spec.s - 1;
    spec.seed = rng();
    spec.unimodular_bound = 4;
    spec.permutation_seed = rng();
    const GroupTuple t = generate(spec);
    const Lattice lattice = span(t);
    for (const auto& c : t) {
      const bool a = detail::match_type_a(t, c, spec.s, lattice).has_value();
      const bool b = detail::match_type_b(t, c, spec.s, lattice).has_value();
      EXPECT_FALSE(a && b);
      if (spec.kind == Kind::b) EXPECT_FALSE(a);
      if (spec.kind == Kind::a) EXPECT_FALSE(b);
    }
  }
}

TEST(ClassifyProperties, TypeAHasFullProperty) {
  std::mt19937_64 rng(44);
  for (std::size_t s : {3u, 5u}) {
    for (int trial = 0; trial < 5; ++trial) {
      GeneratorSpec spec;
      spec.kind = Kind::a;
      spec.s = s;
      spec.dim = s - 1;
      spec.seed = rng();
      spec.unimodular_bound = 10;
      spec.permutation_seed = rng();
      const GroupTuple t = generate(spec);
      EXPECT_TRUE(has_property(t, 2 * s, s).holds);
    }
  }
}
