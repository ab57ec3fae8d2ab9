#include <map>
#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "trirep/decomp.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

using Q = Rational;

}  // namespace

TEST(EndomorphismAlgebra, Dimensions) {
  auto a = load_algebra("a2");
  EXPECT_EQ(endomorphism_algebra<Q>(simple_module<Q>(a, 0)).dim(), 1);
  auto sum = direct_sum<Q>({projective_module<Q>(a, 0), projective_module<Q>(a, 1)}, a).module;
  auto e = endomorphism_algebra<Q>(sum);
  // End(P1) + End(P2) + Hom(P2, P1); Hom(P1, P2) = 0 since P2 = S2 is the socle
  EXPECT_EQ(e.dim(), 1 + 1 + hom_dim<Q>(projective_module<Q>(a, 1), projective_module<Q>(a, 0)) +
                         hom_dim<Q>(projective_module<Q>(a, 0), projective_module<Q>(a, 1)));
  EXPECT_EQ(e.dim(), 3);
  // the opposite has the same dimension and reversed products
  for (Index i = 0; i < e.dim(); ++i)
    for (Index j = 0; j < e.dim(); ++j) EXPECT_EQ(e.products[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size(), e.dim());
}

TEST(Radical, SemisimpleIsZero) {
  auto a = load_algebra("a1");
  EXPECT_EQ(radical_of_algebra<Q>(a).cols(), 0);
  // k x k as the endomorphism algebra of two non-isomorphic simples
  auto b = load_algebra("a2");
  auto ss = direct_sum<Q>({simple_module<Q>(b, 0), simple_module<Q>(b, 1)}, b).module;
  EXPECT_EQ(radical_of_algebra<Q>(endomorphism_algebra<Q>(ss)).cols(), 0);
}

TEST(Radical, PathAlgebraA2IsArrowSpan) {
  auto a = load_algebra("a2");
  Mat<Q> r = radical_of_algebra<Q>(a);
  ASSERT_EQ(r.cols(), 1);
  EXPECT_TRUE(r(0, 0).is_zero());
  EXPECT_TRUE(r(1, 0).is_zero());
  EXPECT_FALSE(r(2, 0).is_zero());
}

TEST(Radical, PathAlgebrasAreNonIdempotentSpan) {
  for (const auto& name : {"a3", "d4", "square", "kronecker"}) {
    auto a = load_algebra(name);
    EXPECT_EQ(radical_of_algebra<Q>(a).cols(), a.dim() - a.num_vertices()) << name;
  }
}

TEST(Decompose, RepeatedProjective) {
  auto a = load_algebra("a2");
  auto p = projective_module<Q>(a, 0);
  auto d = decompose<Q>(direct_sum<Q>({p, p}, a).module);
  ASSERT_EQ(d.classes.size(), 1u);
  EXPECT_EQ(d.classes[0].multiplicity(), 2);
  EXPECT_TRUE(d.verify());
}

TEST(Decompose, RegularModuleA2) {
  auto a = load_algebra("a2");
  auto d = decompose<Q>(regular_module<Q>(a));
  ASSERT_EQ(d.pieces.size(), 2u);
  EXPECT_EQ(d.pieces[0].module.dimension_vector(), (std::vector<Index>{0, 1}));
  EXPECT_EQ(d.pieces[1].module.dimension_vector(), (std::vector<Index>{1, 1}));
  EXPECT_TRUE(d.verify());
}

TEST(Decompose, SimpleIsItself) {
  auto a = load_algebra("d4");
  for (int v = 0; v < a.num_vertices(); ++v) {
    auto d = decompose<Q>(simple_module<Q>(a, v));
    ASSERT_EQ(d.classes.size(), 1u);
    EXPECT_EQ(d.classes[0].multiplicity(), 1);
    EXPECT_TRUE(is_indecomposable<Q>(simple_module<Q>(a, v)));
  }
}

TEST(Decompose, ProjectivesArePrimitive) {
  for (const auto& name : {"a3", "d4", "square", "kronecker", "e6"}) {
    auto a = load_algebra(name);
    for (int v = 0; v < a.num_vertices(); ++v) EXPECT_TRUE(is_indecomposable<Q>(projective_module<Q>(a, v))) << name;
    auto d = decompose<Q>(regular_module<Q>(a));
    EXPECT_EQ(static_cast<int>(d.classes.size()), a.num_vertices()) << name;
    EXPECT_TRUE(d.verify());
  }
}

TEST(Decompose, KrullSchmidtUnderBaseChange) {
  std::mt19937 rng(2024);
  for (const auto& name : {"a3", "d4", "square"}) {
    auto a = load_algebra(name);
    std::vector<Module<Q>> corpus = standard_modules<Q>(a);
    corpus.push_back(regular_module<Q>(a));
    corpus.push_back(coregular_module<Q>(a));
    corpus.push_back(direct_sum<Q>({regular_module<Q>(a), coregular_module<Q>(a)}, a).module);
    for (const auto& m : corpus) {
      auto base = signature(decompose<Q>(m));
      for (int trial = 0; trial < 20; ++trial) {
        auto d = decompose<Q>(random_base_change(m, rng));
        EXPECT_TRUE(d.verify());
        EXPECT_EQ(signature(d), base) << name;
      }
    }
  }
}

TEST(Decompose, WitnessImagesReconstruct) {
  auto a = load_algebra("square");
  auto m = direct_sum<Q>({regular_module<Q>(a), coregular_module<Q>(a)}, a).module;
  auto d = decompose<Q>(m);
  std::vector<Module<Q>> parts;
  for (const auto& p : d.pieces) parts.push_back(p.module);
  auto rebuilt = direct_sum<Q>(parts, a);
  Morphism<Q> phi = Morphism<Q>::zero(rebuilt.module, m);
  for (std::size_t i = 0; i < parts.size(); ++i)
    phi = phi + compose<Q>(d.pieces[i].inclusion, rebuilt.projections[i]);
  EXPECT_TRUE(phi.is_iso());
  EXPECT_TRUE(phi.is_intertwining());
}

TEST(IsoTest, Identity) {
  auto a = load_algebra("square");
  auto m = regular_module<Q>(a);
  auto f = iso_test<Q>(m, m);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->is_iso());
}

TEST(IsoTest, DifferentDimensionVectors) {
  auto a = load_algebra("a2");
  EXPECT_FALSE(iso_test<Q>(projective_module<Q>(a, 0), simple_module<Q>(a, 0)).has_value());
}

TEST(IsoTest, NecessaryConditions) {
  std::mt19937 rng(5);
  auto a = load_algebra("d4");
  auto corpus = standard_modules<Q>(a);
  for (const auto& m : corpus)
    for (const auto& n : corpus) {
      auto f = iso_test<Q>(m, n);
      if (!f) continue;
      EXPECT_EQ(m.dimension_vector(), n.dimension_vector());
      EXPECT_EQ(hom_dim<Q>(m, m), hom_dim<Q>(n, n));
    }
  // a module and a twisted copy of it
  for (const auto& m : corpus) {
    auto twisted = random_base_change(m, rng);
    auto f = iso_test<Q>(m, twisted);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->is_intertwining());
  }
}

TEST(IsoTest, ProjectiveInjectiveOverA2) {
  auto a = load_algebra("a2");
  EXPECT_TRUE(iso_test<Q>(projective_module<Q>(a, 0), injective_module<Q>(a, 1)).has_value());
  EXPECT_FALSE(iso_test<Q>(projective_module<Q>(a, 1), injective_module<Q>(a, 0)).has_value());
}

TEST(PrimeField, DecompositionCounts) {
  auto q = load_quiver(data_file("square"));
  auto a = path_algebra<Q>(q);
  auto b = path_algebra<F101>(q);
  auto mq = direct_sum<Q>({regular_module<Q>(a), coregular_module<Q>(a)}, a).module;
  auto mb = direct_sum<F101>({regular_module<F101>(b), coregular_module<F101>(b)}, b).module;
  auto dq = decompose<Q>(mq);
  auto db = decompose<F101>(mb);
  EXPECT_TRUE(db.verify());
  EXPECT_EQ(signature(dq), signature(db));
}
