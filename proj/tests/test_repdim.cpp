#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "trirep/artheory.hpp"
#include "trirep/decomp.hpp"
#include "trirep/repdim.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

using Q = Rational;

GeneratorBundle<Q> bundle_of(const std::vector<Module<Q>>& parts) {
  GeneratorBundle<Q> g;
  g.summands = Subcategory<Q>(parts.at(0).algebra());
  for (std::size_t i = 0; i < parts.size(); ++i) g.summands.add(parts[i], "M" + std::to_string(i));
  return g;
}

std::vector<Module<Q>> projectives(const Algebra<Q>& a) {
  std::vector<Module<Q>> out;
  for (int v = 0; v < a.num_vertices(); ++v) out.push_back(projective_module<Q>(a, v));
  return out;
}

bool summands_in(const Module<Q>& m, const Subcategory<Q>& s) { return m.is_zero() || s.contains_summands(m); }

}  // namespace

TEST(Resolution, ObjectsOfTheBundleHaveLengthZero) {
  Algebra<Q> a = load_algebra("a3");
  ARQuiver<Q> ind = knit_ar_quiver<Q>(a);
  GeneratorBundle<Q> g = additive_generator<Q>(ind);
  for (const auto& x : ind.vertices) {
    auto r = add_m_resolution<Q>(g, x, 0);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->length(), 0);
    EXPECT_TRUE(r->differentials[0].is_iso());
  }
  BoundReport rep = repdim_bound<Q>(g, ind, 0, true);
  ASSERT_TRUE(rep.n_star);
  EXPECT_EQ(*rep.n_star, 0);
  EXPECT_EQ(*rep.gldim_bound(), 2);
  EXPECT_TRUE(rep.established());
  ASSERT_TRUE(rep.direct_gldim);
  EXPECT_LE(*rep.direct_gldim, 2);
}

TEST(Resolution, ProjectiveBundleGivesProjectiveResolutions) {
  for (const auto& name : {"a3", "d4", "square"}) {
    Algebra<Q> a = load_algebra(name);
    GeneratorBundle<Q> g = bundle_of(projectives(a));
    EXPECT_TRUE(g.is_generator());
    for (int v = 0; v < a.num_vertices(); ++v) {
      Module<Q> s = simple_module<Q>(a, v);
      auto r = add_m_resolution<Q>(g, s, 5);
      ASSERT_TRUE(r) << name;
      EXPECT_EQ(r->length(), proj_dim<Q>(s)) << name;
      EXPECT_TRUE(r->exact);
      EXPECT_TRUE(r->hom_exact);
      // the first term is the projective cover
      EXPECT_EQ(r->terms[0].dim(), projective_cover<Q>(s).cover.module.dim());
    }
  }
}

TEST(Resolution, MaxlenIsRespected) {
  Algebra<Q> a = load_algebra("a3");
  GeneratorBundle<Q> g = bundle_of(projectives(a));
  EXPECT_FALSE(add_m_resolution<Q>(g, simple_module<Q>(a, 0), 0));
  EXPECT_TRUE(add_m_resolution<Q>(g, simple_module<Q>(a, 0), 1));
}

TEST(Resolution, A2WithAllIndecomposables) {
  Algebra<Q> a = load_algebra("a2");
  GeneratorBundle<Q> g = bundle_of({projective_module<Q>(a, 1), projective_module<Q>(a, 0), simple_module<Q>(a, 0)});
  BoundReport rep = repdim_bound<Q>(g, knit_ar_quiver<Q>(a), 1, true);
  ASSERT_TRUE(rep.direct_gldim);
  EXPECT_LE(*rep.direct_gldim, 2);
  EXPECT_EQ(*rep.n_star, 0);
}

TEST(Approximation, KernelLiesInAddT) {
  Algebra<Q> a = load_algebra("a3");
  ARQuiver<Q> ind = knit_ar_quiver<Q>(a);
  for (const auto& t : tilting_modules<Q>(ind)) {
    Subcategory<Q> add_t = t.add();
    for (const auto& x : ind.vertices) {
      Approximation<Q> ap = minimal_right_approximation<Q>(add_t, x);
      EXPECT_TRUE(is_right_approximation<Q>(add_t, ap.map));
      EXPECT_TRUE(is_right_minimal<Q>(ap.map));
      EXPECT_TRUE(summands_in(kernel<Q>(ap.map).module, add_t)) << t.id;
    }
  }
}

TEST(Approximation, KernelInAddTForConvexTilting) {
  // DT over B is a convex tilting module; approximate with DT + DB
  Algebra<Q> a = load_algebra("a3");
  ARQuiver<Q> ind = knit_ar_quiver<Q>(a);
  for (const auto& t : tilting_modules<Q>(ind)) {
    TiltingData<Q> d = tilting_data<Q>(t);
    const Algebra<Q>& b = d.endo.algebra;
    Subcategory<Q> m = d.dual_tilt.add();
    m.add_summands(coregular_module<Q>(b), "DB");
    Subcategory<Q> add_t = d.dual_tilt.add();
    for (const auto& x : knit_ar_quiver<Q>(b).vertices) {
      Approximation<Q> ap = minimal_right_approximation<Q>(m, x);
      if (ap.map.rank() != x.dim()) continue;  // x not generated by M
      EXPECT_TRUE(summands_in(kernel<Q>(ap.map).module, add_t)) << t.id;
    }
  }
}

TEST(Approximation, MinimalLeftByDuality) {
  Algebra<Q> a = load_algebra("a3");
  ARQuiver<Q> ind = knit_ar_quiver<Q>(a);
  Subcategory<Q> inj(a);
  for (int v = 0; v < a.num_vertices(); ++v) inj.add(injective_module<Q>(a, v), "I");
  for (const auto& x : ind.vertices) {
    Approximation<Q> ap = minimal_left_approximation<Q>(inj, x);
    EXPECT_EQ(ap.map.rank(), x.dim());
    // injective envelope: socle dimension count of summands
    EXPECT_EQ(ap.map.target().dim(), dual_module<Q>(projective_cover<Q>(dual_module<Q>(x)).cover.module).dim());
  }
}

TEST(Generators, MorBundleOverField) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("a1"));
  GeneratorBundle<Q> g = generator_thm31<Q>(t2);
  EXPECT_EQ(g.summands.size(), 3);
  EXPECT_TRUE(g.is_generator());
  EXPECT_TRUE(g.is_cogenerator());
}

TEST(Generators, MorBundleBoundOnA2A3) {
  for (const auto& name : {"a2", "a3"}) {
    TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra(name));
    GeneratorBundle<Q> g = generator_thm31<Q>(t2);
    EXPECT_TRUE(g.is_generator() && g.is_cogenerator()) << name;
    BoundReport rep = repdim_bound<Q>(g, knit_ar_quiver<Q>(t2.algebra), 1, true);
    EXPECT_TRUE(rep.established()) << name;
    ASSERT_TRUE(rep.n_star);
    EXPECT_LE(*rep.n_star, 1);
    EXPECT_LE(*rep.direct_gldim, 3);
    EXPECT_TRUE(rep.consistent());
  }
}

TEST(Generators, MorBundleRoutesAgree) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("a3"));
  GeneratorBundle<Q> k = generator_thm31<Q>(t2, MorRoute::Knitting);
  GeneratorBundle<Q> p = generator_thm31<Q>(t2, MorRoute::Presentations);
  ASSERT_EQ(k.summands.size(), p.summands.size());
  for (const auto& m : k.summands.objects) EXPECT_TRUE(p.summands.contains(m));
}

TEST(Generators, ProjInjBundleKronecker) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("kronecker"));
  GeneratorBundle<Q> g = generator_thm32<Q>(t2);
  // oracle: 4 projectives + 4 injectives minus the projective-injectives
  int overlap = 0;
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w)
      overlap += static_cast<bool>(iso_test<Q>(projective_module<Q>(t2.algebra, v), injective_module<Q>(t2.algebra, w)));
  EXPECT_EQ(g.summands.size(), 8 - overlap);
  EXPECT_EQ(overlap, proj_injectives<Q>(t2.algebra).size());
  EXPECT_TRUE(g.is_generator() && g.is_cogenerator());
}

TEST(Generators, ProjInjBundleSmallSample) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("kronecker"));
  GeneratorBundle<Q> g = generator_thm32<Q>(t2);
  ARQuiver<Q> ind = knit_ar_quiver<Q>(t2.algebra, KnitOptions{200, 5});
  std::vector<Module<Q>> sample;
  std::vector<std::string> ids;
  for (int v = 0; v < ind.exact_vertices; ++v)
    if (ind.vertices[static_cast<std::size_t>(v)].dim() <= 5) {
      sample.push_back(ind.vertices[static_cast<std::size_t>(v)]);
      ids.push_back(ind.id(v));
    }
  ASSERT_FALSE(sample.empty());
  BoundReport rep = repdim_bound<Q>(g, sample, ids, 2, true, false);
  EXPECT_TRUE(rep.established());
  EXPECT_LE(*rep.n_star, 2);
}

TEST(Generators, BlockBundleOverField) {
  Algebra<Q> k = load_algebra("a1");
  TiltingData<Q> d = tilting_data<Q>(*is_tilting<Q>(regular_module<Q>(k)));
  BarTilting<Q> bar = bar_tilting<Q>(d);
  GeneratorBundle<Q> g = generator_thm47<Q>(d, bar.block);
  EXPECT_EQ(g.summands.size(), 3);
}

TEST(Generators, BlockBundleLengthByTilting) {
  // length-2 resolutions occur for two tilting modules of linear A3; there the
  // kernel's B-coordinate leaves add DT
  const std::set<std::string> long_cases = {"M1+M4+M5", "M2+M4+M5"};
  for (const auto& name : {"a2", "a3"}) {
    Algebra<Q> a = load_algebra(name);
    for (const auto& t : tilting_modules<Q>(knit_ar_quiver<Q>(a))) {
      TiltingData<Q> d = tilting_data<Q>(t);
      BarTilting<Q> bar = bar_tilting<Q>(d);
      GeneratorBundle<Q> g = generator_thm47<Q>(d, bar.block);
      EXPECT_TRUE(g.is_generator()) << t.id;
      EXPECT_TRUE(g.is_cogenerator()) << t.id;
      ARQuiver<Q> ind = knit_ar_quiver<Q>(bar.block.algebra);
      BoundReport rep = repdim_bound<Q>(g, ind, 2, false);
      ASSERT_TRUE(rep.established()) << name << " " << t.id;
      const bool expect_long = std::string(name) == "a3" && long_cases.count(t.id);
      if (expect_long)
        EXPECT_EQ(*rep.n_star, 2) << t.id;
      else
        EXPECT_LE(*rep.n_star, 1) << name << " " << t.id;
      if (!expect_long) continue;
      Subcategory<Q> add_dt = d.dual_tilt.add();
      for (int v = 0; v < ind.size(); ++v) {
        auto r = add_m_resolution<Q>(g, ind.vertices[static_cast<std::size_t>(v)], 2);
        if (r->length() < 2) continue;
        TripleModule<Q> k = unflatten<Q>(bar.block, kernel<Q>(r->differentials[0]).module);
        EXPECT_FALSE(add_dt.contains_summands(k.y)) << t.id;
      }
    }
  }
}
