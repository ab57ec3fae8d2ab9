#include <functional>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "trirep/homological.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

using Q = Rational;

// Number of paths (including trivial ones) by depth-first enumeration.
std::size_t count_paths(const Quiver& q) {
  std::function<std::size_t(int)> from = [&](int v) {
    std::size_t c = 1;
    for (const auto& a : q.arrows)
      if (a.from == v) c += from(a.to);
    return c;
  };
  std::size_t total = 0;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) total += from(static_cast<int>(v));
  return total;
}

// Euler form of a quiver on dimension vectors.
long euler_form(const Quiver& q, const std::vector<Index>& x, const std::vector<Index>& y) {
  long s = 0;
  for (std::size_t v = 0; v < x.size(); ++v) s += static_cast<long>(x[v] * y[v]);
  for (const auto& a : q.arrows) s -= static_cast<long>(x[static_cast<std::size_t>(a.from)] * y[static_cast<std::size_t>(a.to)]);
  return s;
}

std::vector<Module<Q>> corpus_modules(const Algebra<Q>& a) {
  auto out = standard_modules<Q>(a);
  out.push_back(regular_module<Q>(a));
  out.push_back(coregular_module<Q>(a));
  return out;
}

const std::vector<std::string> kHereditary = {"a1", "a2", "a3", "a4", "d4", "kronecker"};

}  // namespace

TEST(PathAlgebra, A2Basis) {
  auto a = load_algebra("a2");
  ASSERT_EQ(a.dim(), 3);
  EXPECT_EQ(a.basis_label(0), "e_1");
  EXPECT_EQ(a.basis_label(1), "e_2");
  EXPECT_EQ(a.basis_label(2), "a");
  EXPECT_TRUE(a.check_associativity());
}

TEST(PathAlgebra, DimensionsMatchPathCount) {
  for (const auto& name : kHereditary) {
    auto q = load_quiver(data_file(name));
    auto a = path_algebra<Q>(q);
    EXPECT_EQ(static_cast<std::size_t>(a.dim()), count_paths(q.quiver)) << name;
  }
  EXPECT_EQ(load_algebra("a3").dim(), 6);
}

TEST(PathAlgebra, CommutativeSquare) {
  auto q = load_quiver(data_file("square"));
  auto a = path_algebra<Q>(q);
  // ten paths, one independent relation
  EXPECT_EQ(count_paths(q.quiver), 10u);
  EXPECT_EQ(a.dim(), 9);
  EXPECT_TRUE(a.check_associativity());
  auto rels = extract_relations<Q>(a);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(rels[0].size(), 2u);
}

TEST(PathAlgebra, RejectsCycles) {
  QuiverPresentation q;
  q.quiver.vertices = {"1", "2"};
  q.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  EXPECT_THROW(path_algebra<Q>(q), InputError);
}

TEST(PathAlgebra, RejectsShortRelation) {
  auto q = load_quiver(data_file("a3"));
  q.relations.push_back({{{"a"}, Q(1)}});
  EXPECT_THROW(path_algebra<Q>(q), InputError);
}

TEST(PathAlgebra, ZeroRelation) {
  auto q = load_quiver(data_file("a3"));
  q.relations.push_back({{{"a", "b"}, Q(1)}});
  auto a = path_algebra<Q>(q);
  EXPECT_EQ(a.dim(), 5);
  EXPECT_EQ(global_dimension<Q>(a), 2);
}

TEST(Opposite, Involution) {
  auto a = load_algebra("square");
  auto op = a.opposite();
  auto back = op.opposite();
  EXPECT_TRUE(back.same_as(a));
  ASSERT_EQ(back.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const auto* p = a.product(i, j);
      const auto* r = back.product(i, j);
      ASSERT_EQ(p == nullptr, r == nullptr);
      if (p) {
        ASSERT_EQ(p->size(), r->size());
        for (std::size_t k = 0; k < p->size(); ++k) {
          EXPECT_EQ((*p)[k].index, (*r)[k].index);
          EXPECT_EQ((*p)[k].coeff, (*r)[k].coeff);
        }
      }
    }
}

TEST(Opposite, CommutativeUnchanged) {
  auto a = load_algebra("a1");
  auto op = a.opposite();
  ASSERT_EQ(op.dim(), 1);
  ASSERT_NE(op.product(0, 0), nullptr);
  EXPECT_EQ(op.product(0, 0)->at(0).coeff, Q(1));
}

TEST(Opposite, A2IsReversedArrow) {
  auto op = load_algebra("a2").opposite();
  QuiverPresentation rev;
  rev.quiver.vertices = {"1", "2"};
  rev.quiver.arrows = {{"a", 1, 0}};
  auto b = path_algebra<Q>(rev);
  // same labels, arrow now runs 2 -> 1, and a = e_2 a e_1 in both
  ASSERT_EQ(op.dim(), b.dim());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(op.basis_label(i), b.basis_label(i));
    EXPECT_EQ(op.source(i), b.source(i));
    EXPECT_EQ(op.target(i), b.target(i));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(op.product(i, j) == nullptr, b.product(i, j) == nullptr);
  }
}

TEST(Modules, ProjectiveInjectiveSimpleA2) {
  auto a = load_algebra("a2");
  EXPECT_EQ(projective_module<Q>(a, 0).dimension_vector(), (std::vector<Index>{1, 1}));
  EXPECT_EQ(projective_module<Q>(a, 1).dimension_vector(), (std::vector<Index>{0, 1}));
  EXPECT_EQ(injective_module<Q>(a, 0).dimension_vector(), (std::vector<Index>{1, 0}));
  EXPECT_EQ(injective_module<Q>(a, 1).dimension_vector(), (std::vector<Index>{1, 1}));
  EXPECT_TRUE(projective_module<Q>(a, 0).satisfies_relations());
  EXPECT_TRUE(injective_module<Q>(a, 1).satisfies_relations());
}

TEST(Modules, ProjectivesOfSquareSatisfyRelations) {
  auto a = load_algebra("square");
  for (const auto& m : corpus_modules(a)) EXPECT_TRUE(m.satisfies_relations());
  EXPECT_EQ(projective_module<Q>(a, 0).dimension_vector(), (std::vector<Index>{1, 1, 1, 1}));
}

TEST(Hom, YonedaOnCorpus) {
  for (const auto& name : {"a2", "a3", "d4", "kronecker", "square"}) {
    auto a = load_algebra(name);
    for (const auto& m : corpus_modules(a))
      for (int v = 0; v < a.num_vertices(); ++v) EXPECT_EQ(hom_dim<Q>(projective_module<Q>(a, v), m), m.dim_at(v)) << name;
  }
}

TEST(Hom, SmallCases) {
  auto a = load_algebra("a2");
  EXPECT_EQ(hom_space<Q>(simple_module<Q>(a, 0), simple_module<Q>(a, 1)).size(), 0u);
  auto p1 = projective_module<Q>(a, 0);
  auto h = hom_space<Q>(p1, p1);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_TRUE(h[0].is_intertwining());
  EXPECT_TRUE(h[0].is_iso());
}

TEST(Hom, BasisIsIntertwining) {
  auto a = load_algebra("square");
  auto ms = corpus_modules(a);
  for (const auto& x : ms)
    for (const auto& y : ms)
      for (const auto& f : hom_space<Q>(x, y)) EXPECT_TRUE(f.is_intertwining());
}

TEST(Kernel, IdentityHasZeroKernel) {
  auto a = load_algebra("a3");
  auto p = projective_module<Q>(a, 0);
  EXPECT_TRUE(kernel<Q>(Morphism<Q>::identity(p)).module.is_zero());
}

TEST(Kernel, ProjectiveOntoSimple) {
  auto a = load_algebra("a2");
  auto p1 = projective_module<Q>(a, 0);
  auto s1 = simple_module<Q>(a, 0);
  auto h = hom_space<Q>(p1, s1);
  ASSERT_EQ(h.size(), 1u);
  auto k = kernel<Q>(h[0]);
  EXPECT_EQ(k.module.dimension_vector(), (std::vector<Index>{0, 1}));
  EXPECT_TRUE(compose<Q>(h[0], k.inclusion).is_zero());
  auto c = cokernel<Q>(h[0]);
  EXPECT_TRUE(c.module.is_zero());
}

TEST(Kernel, RankNullityOnRandomMaps) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto a = load_algebra("d4");
  auto ms = corpus_modules(a);
  for (const auto& x : ms)
    for (const auto& y : ms) {
      auto h = hom_space<Q>(x, y);
      if (h.empty()) continue;
      Vec<Q> c(static_cast<Index>(h.size()));
      for (Index i = 0; i < c.size(); ++i) c(i) = Q(d(rng));
      auto f = linear_combination<Q>(h, c, x, y);
      auto k = kernel<Q>(f);
      auto im = image<Q>(f);
      auto ck = cokernel<Q>(f);
      EXPECT_EQ(k.module.dim() + im.module.dim(), x.dim());
      EXPECT_EQ(im.module.dim(), f.rank());
      EXPECT_EQ(ck.module.dim() + im.module.dim(), y.dim());
      EXPECT_TRUE(compose<Q>(f, k.inclusion).is_zero());
      EXPECT_TRUE(compose<Q>(ck.projection, f).is_zero());
      EXPECT_TRUE(im.onto.is_intertwining());
      EXPECT_TRUE(im.inclusion.is_intertwining());
    }
}

TEST(Duality, SimpleProjectiveInjective) {
  auto a = load_algebra("a3");
  for (int v = 0; v < a.num_vertices(); ++v) {
    auto ds = dual_module<Q>(simple_module<Q>(a, v));
    EXPECT_TRUE(ds.algebra().same_as(a.opposite()));
    EXPECT_EQ(ds.dimension_vector(), simple_module<Q>(a.opposite(), v).dimension_vector());
    auto dp = dual_module<Q>(projective_module<Q>(a, v));
    auto iop = injective_module<Q>(a.opposite(), v);
    EXPECT_EQ(dp.dimension_vector(), iop.dimension_vector());
    EXPECT_EQ(hom_dim<Q>(dp, iop), hom_dim<Q>(iop, iop));
  }
}

TEST(Duality, TwiceIsIdentity) {
  auto a = load_algebra("square");
  for (const auto& m : corpus_modules(a)) {
    auto dd = dual_module<Q>(dual_module<Q>(m));
    EXPECT_TRUE(dd.algebra().same_as(a));
    EXPECT_EQ(dd.dimension_vector(), m.dimension_vector());
    for (int g = 0; g < a.num_generators(); ++g) EXPECT_EQ(dd.generator(g), m.generator(g));
  }
}

TEST(Duality, HomDimensions) {
  for (const auto& name : {"a3", "kronecker", "square"}) {
    auto a = load_algebra(name);
    auto ms = corpus_modules(a);
    for (const auto& x : ms)
      for (const auto& y : ms)
        EXPECT_EQ(hom_dim<Q>(x, y), hom_dim<Q>(dual_module<Q>(y), dual_module<Q>(x))) << name;
  }
}

TEST(Presentation, Projective) {
  auto a = load_algebra("a3");
  auto p = minimal_projective_presentation<Q>(projective_module<Q>(a, 1));
  EXPECT_EQ(p.p0.tops, (std::vector<int>{1}));
  EXPECT_TRUE(p.p1.tops.empty());
}

TEST(Presentation, SimpleSourceOfA2) {
  auto a = load_algebra("a2");
  auto p = minimal_projective_presentation<Q>(simple_module<Q>(a, 0));
  EXPECT_EQ(p.p0.tops, (std::vector<int>{0}));
  EXPECT_EQ(p.p1.tops, (std::vector<int>{1}));
  EXPECT_TRUE(compose<Q>(p.eps, p.d1).is_zero());
}

TEST(Presentation, CoverMultiplicitiesAreTop) {
  auto a = load_algebra("square");
  for (const auto& m : corpus_modules(a)) {
    auto p = minimal_projective_presentation<Q>(m);
    std::vector<Index> mult(static_cast<std::size_t>(a.num_vertices()), 0);
    for (int v : p.p0.tops) ++mult[static_cast<std::size_t>(v)];
    EXPECT_EQ(mult, top_dims<Q>(m));
    EXPECT_EQ(p.eps.rank(), m.dim());
    // kernel of the cover lies in the radical of P0
    auto rad = radical_subspaces<Q>(p.p0.module);
    auto k = kernel<Q>(p.eps);
    for (int v = 0; v < a.num_vertices(); ++v)
      EXPECT_TRUE(in_column_space<Q>(rad[static_cast<std::size_t>(v)], k.inclusion.block(v)));
  }
}

TEST(Ext, BasicValues) {
  auto a2 = load_algebra("a2");
  EXPECT_EQ(ext_dim<Q>(1, simple_module<Q>(a2, 0), simple_module<Q>(a2, 1)), 1);
  EXPECT_EQ(ext_dim<Q>(1, simple_module<Q>(a2, 1), simple_module<Q>(a2, 0)), 0);
  auto a3 = load_algebra("a3");
  auto ms = corpus_modules(a3);
  for (const auto& x : ms)
    for (const auto& y : ms) {
      EXPECT_EQ(ext_dim<Q>(2, x, y), 0);
      EXPECT_EQ(ext_dim<Q>(0, x, y), hom_dim<Q>(x, y));
    }
  for (int v = 0; v < a3.num_vertices(); ++v)
    for (const auto& y : ms) EXPECT_EQ(ext_dim<Q>(1, projective_module<Q>(a3, v), y), 0);
}

TEST(Ext, EulerFormOverHereditary) {
  for (const auto& name : {"a3", "d4", "kronecker"}) {
    auto q = load_quiver(data_file(name));
    auto a = path_algebra<Q>(q);
    auto ms = corpus_modules(a);
    for (const auto& x : ms)
      for (const auto& y : ms) {
        long lhs = static_cast<long>(hom_dim<Q>(x, y)) - static_cast<long>(ext_dim<Q>(1, x, y));
        EXPECT_EQ(lhs, euler_form(q.quiver, x.dimension_vector(), y.dimension_vector())) << name;
      }
  }
}

TEST(GlobalDimension, Hereditary) {
  for (const auto& name : kHereditary) EXPECT_LE(global_dimension<Q>(load_algebra(name)), 1) << name;
  EXPECT_EQ(global_dimension<Q>(load_algebra("a1")), 0);
}

TEST(GlobalDimension, CommutativeSquare) {
  auto a = load_algebra("square");
  EXPECT_EQ(proj_dim<Q>(simple_module<Q>(a, 0)), 2);
  EXPECT_EQ(global_dimension<Q>(a), 2);
  EXPECT_EQ(inj_dim<Q>(simple_module<Q>(a, 3)), 2);
}

TEST(Resolution, ComposesToZeroAndAlternatingSum) {
  auto a = load_algebra("square");
  for (const auto& m : corpus_modules(a)) {
    auto r = minimal_projective_resolution<Q>(m);
    ASSERT_TRUE(r.complete);
    long alt = 0;
    for (std::size_t i = 0; i < r.terms.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long>(r.terms[i].module.dim());
    EXPECT_EQ(alt, static_cast<long>(m.dim()));
    if (!r.differentials.empty()) EXPECT_TRUE(compose<Q>(r.augmentation, r.differentials[0]).is_zero());
    for (std::size_t i = 1; i < r.differentials.size(); ++i)
      EXPECT_TRUE(compose<Q>(r.differentials[i - 1], r.differentials[i]).is_zero());
  }
}

TEST(PrimeField, AgreesOnSmallInvariants) {
  auto q = load_quiver(data_file("square"));
  auto a = path_algebra<Q>(q);
  auto b = path_algebra<F101>(q);
  EXPECT_EQ(a.dim(), b.dim());
  EXPECT_EQ(global_dimension<Q>(a), global_dimension<F101>(b));
  for (int v = 0; v < a.num_vertices(); ++v)
    for (int w = 0; w < a.num_vertices(); ++w)
      EXPECT_EQ(hom_dim<Q>(injective_module<Q>(a, v), projective_module<Q>(a, w)),
                hom_dim<F101>(injective_module<F101>(b, v), projective_module<F101>(b, w)));
}

TEST(Io, ModuleRoundTrip) {
  auto a = load_algebra("square");
  for (const auto& m : corpus_modules(a)) {
    auto back = module_from_json<Q>(module_to_json<Q>(m), a);
    EXPECT_EQ(back.dimension_vector(), m.dimension_vector());
    for (int g = 0; g < a.num_generators(); ++g) EXPECT_EQ(back.generator(g), m.generator(g));
  }
}

TEST(Io, QuiverRoundTrip) {
  auto q = load_quiver(data_file("square"));
  auto again = quiver_from_json(quiver_to_json(q));
  EXPECT_EQ(path_algebra<Q>(again).fingerprint(), path_algebra<Q>(q).fingerprint());
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(quiver_from_json(Json::parse(R"({"arrows": []})")), InputError);
  EXPECT_THROW(quiver_from_json(Json::parse(R"({"vertices": ["1"], "arrows": [{"label": "a", "from": "1", "to": "9"}]})")),
               InputError);
}
