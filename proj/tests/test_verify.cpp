#include <gtest/gtest.h>

#include "corpus.hpp"
#include "trirep/verify.hpp"

using namespace trirep;
using namespace trirep::testing;

namespace {

using Q = Rational;

QuiverPresentation corpus_quiver(const std::string& name) { return load_quiver(data_file(name)); }

Algebra<Q> e6_gamma() {
  QuiverPresentation q = e6_quiver();
  Algebra<Q> a = path_algebra<Q>(q);
  const int c = q.quiver.vertex_index("c");
  Subcategory<Q> s(a);
  s.add(inverse_ar_translate<Q>(simple_module<Q>(a, c)), "t");
  for (int v = 0; v < a.num_vertices(); ++v) s.add(projective_module<Q>(a, v), "P" + std::to_string(v));
  return auslander_algebra<Q>(s, "Gamma");
}

}  // namespace

TEST(Status, ExitCodesAndCombination) {
  EXPECT_EQ(exit_code(Status::Verified), 0);
  EXPECT_EQ(exit_code(Status::Refuted), 1);
  EXPECT_EQ(exit_code(Status::Inconclusive), 2);
  EXPECT_EQ(combine({Status::Verified, Status::Inconclusive}), Status::Inconclusive);
  EXPECT_EQ(combine({Status::Inconclusive, Status::Refuted, Status::Verified}), Status::Refuted);
  EXPECT_EQ(combine({}), Status::Verified);
}

TEST(Report, DeterministicWithoutTiming) {
  CheckOptions o;
  const Json first = thm31_report<Q>(corpus_quiver("a2"), o).to_json(false);
  const Json second = thm31_report<Q>(corpus_quiver("a2"), o).to_json(false);
  EXPECT_EQ(first.dump(), second.dump());
  EXPECT_FALSE(first.contains("seconds"));
  EXPECT_TRUE(thm31_report<Q>(corpus_quiver("a2"), o).to_json(true).contains("seconds"));
  EXPECT_EQ(first["status"], "verified");
  EXPECT_EQ(first["details"]["bound"], 3);
}

TEST(Report, DigestFollowsInputs) {
  Json a = {{"x", 1}};
  Json b = {{"x", 2}};
  EXPECT_EQ(inputs_digest(a), inputs_digest(a));
  EXPECT_NE(inputs_digest(a), inputs_digest(b));
  EXPECT_EQ(inputs_digest(a).size(), 16u);
}

TEST(Report, JobsDoNotChangeOutput) {
  CheckOptions serial, parallel;
  parallel.jobs = 4;
  for (const auto& report : {lemma43_report<Q>, thm41_report<Q>, thm47_report<Q>}) {
    EXPECT_EQ(report(corpus_quiver("a3"), serial).to_json(false).dump(),
              report(corpus_quiver("a3"), parallel).to_json(false).dump());
  }
}

TEST(Report, UnknownTiltingIsAnInputError) {
  CheckOptions o;
  o.tilting = "M0+M99";
  EXPECT_THROW(lemma43_report<Q>(corpus_quiver("a2"), o), InputError);
  o.tilting = "M0+M2";
  Report r = lemma43_report<Q>(corpus_quiver("a2"), o);
  EXPECT_EQ(r.details["tiltings"].size(), 1u);
}

TEST(Report, FieldCheckMismatchRefutes) {
  Report r, p;
  r.status = p.status = Status::Verified;
  r.invariants["count"] = 3;
  p.invariants["count"] = 3;
  attach_field_check(r, p);
  EXPECT_EQ(r.status, Status::Verified);
  EXPECT_TRUE(r.details["field_check"]["agree"].get<bool>());
  p.invariants["count"] = 4;
  attach_field_check(r, p);
  EXPECT_EQ(r.status, Status::Refuted);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(TitsForm, HereditaryValues) {
  Algebra<Q> a2 = load_algebra("a2");
  EXPECT_EQ(tits_form<Q>(a2, {1, 1}), 1);
  EXPECT_EQ(tits_form<Q>(a2, {1, 0}), 1);
  EXPECT_FALSE(tits_form_witness<Q>(load_algebra("a3"), 3));
  EXPECT_FALSE(tits_form_witness<Q>(load_algebra("d4"), 2));
  auto w = tits_form_witness<Q>(load_algebra("kronecker"), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<Index>{1, 1}));
}

TEST(TitsForm, RelationsCount) {
  // commutative square: the relation adds back the corner-to-corner term
  Algebra<Q> sq = load_algebra("square");
  const Index no_relation = 4 - 4;
  EXPECT_EQ(tits_form<Q>(sq, {1, 1, 1, 1}), no_relation + 1);
}

TEST(TitsForm, T2OfD4IsNotWeaklyPositive) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("d4"));
  auto w = tits_form_witness<Q>(t2.algebra, 2);
  ASSERT_TRUE(w);
  EXPECT_LE(tits_form<Q>(t2.algebra, *w), 0);
  EXPECT_FALSE(tits_form_witness<Q>(t2_algebra<Q>(load_algebra("a3")).algebra, 2));
}

TEST(E6, BundledFileMatchesBuiltInQuiver) {
  QuiverPresentation file = corpus_quiver("e6");
  QuiverPresentation built = e6_quiver();
  EXPECT_EQ(file.quiver.vertices, built.quiver.vertices);
  ASSERT_EQ(file.quiver.arrows.size(), built.quiver.arrows.size());
  for (std::size_t i = 0; i < file.quiver.arrows.size(); ++i) {
    EXPECT_EQ(file.quiver.arrows[i].from, built.quiver.arrows[i].from);
    EXPECT_EQ(file.quiver.arrows[i].to, built.quiver.arrows[i].to);
  }
}

TEST(E6, ReportStructure) {
  Report r = e6_report<Q>(CheckOptions{});
  EXPECT_EQ(r.status, Status::Inconclusive);
  EXPECT_TRUE(r.details["structure_verified"].get<bool>());
  EXPECT_EQ(r.details["gamma"]["vertices"], 7);
  EXPECT_EQ(r.details["gamma"]["relations"], 1);
  EXPECT_EQ(r.details["gamma_knitting"]["verdict"], "inconclusive-infinite");
}

TEST(BoundedKnitting, OversizeModulesDoNotStopTheRest) {
  TriangularAlgebra<Q> t2 = t2_algebra<Q>(load_algebra("kronecker"));
  ARQuiver<Q> ind = knit_ar_quiver<Q>(t2.algebra, KnitOptions{300, 8});
  EXPECT_FALSE(ind.complete());
  int small = 0;
  for (int v = 0; v < ind.exact_vertices; ++v) small += ind.vertices[static_cast<std::size_t>(v)].dim() <= 8;
  // more than the 8 projective and injective vertices
  EXPECT_GT(small, 8);
  for (int v = 0; v < ind.exact_vertices; ++v)
    EXPECT_TRUE(decompose<Q>(ind.vertices[static_cast<std::size_t>(v)]).pieces.size() == 1);
}

TEST(BoundedKnitting, DimensionOverflowStopsCleanly) {
  ARQuiver<Q> ind = knit_ar_quiver<Q>(e6_gamma(), KnitOptions{5000, 24});
  EXPECT_FALSE(ind.complete());
  EXPECT_TRUE(ind.dimension_overflow);
  for (const auto& d : ind.dims)
    for (Index x : d) EXPECT_GE(x, 0);
  EXPECT_GT(ind.size(), 500);
  EXPECT_TRUE(ind.verify());
}
