#include "trirep/repdim.hpp"

#include <algorithm>

#include "trirep/homological.hpp"

namespace trirep {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Thm31:
      return "thm31";
    case Provenance::Thm32:
      return "thm32";
    case Provenance::Thm47:
      return "thm47";
    case Provenance::Additive:
      return "additive";
    case Provenance::Custom:
      break;
  }
  return "custom";
}

template <class F>
bool GeneratorBundle<F>::is_generator() const {
  for (int v = 0; v < owner().num_vertices(); ++v)
    if (!summands.contains(projective_module<F>(owner(), v))) return false;
  return true;
}

template <class F>
bool GeneratorBundle<F>::is_cogenerator() const {
  for (int v = 0; v < owner().num_vertices(); ++v)
    if (!summands.contains(injective_module<F>(owner(), v))) return false;
  return true;
}

template <class F>
std::optional<Resolution<F>> add_m_resolution(const GeneratorBundle<F>& m, const Module<F>& x, int maxlen) {
  Resolution<F> r;
  r.target = x;
  Module<F> current = x;
  std::optional<Morphism<F>> into_previous;
  for (int i = 0;; ++i) {
    Approximation<F> ap = minimal_right_approximation<F>(m.summands, current);
    if (ap.map.rank() != current.dim()) return std::nullopt;
    r.terms.push_back(ap.map.source());
    r.term_summands.push_back(ap.summands);
    r.differentials.push_back(into_previous ? compose<F>(*into_previous, ap.map) : ap.map);
    SubModule<F> k = kernel<F>(ap.map);
    if (k.module.is_zero()) break;
    if (i == maxlen) return std::nullopt;
    current = k.module;
    into_previous = k.inclusion;
  }
  r.exact = is_exact<F>(r);
  r.hom_exact = is_hom_exact<F>(m, r);
  return r;
}

template <class F>
bool is_exact(const Resolution<F>& r) {
  const std::size_t n = r.terms.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!compose<F>(r.differentials[i], r.differentials[i + 1]).is_zero()) return false;
  if (r.differentials[0].rank() != r.target.dim()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Index next = i + 1 < n ? r.differentials[i + 1].rank() : 0;
    if (r.terms[i].dim() != r.differentials[i].rank() + next) return false;
  }
  return true;
}

template <class F>
bool is_hom_exact(const GeneratorBundle<F>& m, const Resolution<F>& r) {
  const std::size_t n = r.terms.size();
  for (const auto& u : m.summands.objects) {
    std::vector<Index> ranks;
    for (const auto& d : r.differentials) ranks.push_back(induced_hom_rank<F>(u, d));
    if (ranks[0] != hom_dim<F>(u, r.target)) return false;
    for (std::size_t i = 0; i < n; ++i) {
      Index next = i + 1 < n ? ranks[i + 1] : 0;
      if (hom_dim<F>(u, r.terms[i]) != ranks[i] + next) return false;
    }
  }
  return true;
}

bool BoundReport::established() const {
  return n_star.has_value() && std::all_of(rows.begin(), rows.end(), [](const ResolutionRow& r) {
           return r.exact && r.hom_exact;
         });
}

template <class F>
BoundReport repdim_bound(const GeneratorBundle<F>& m, const std::vector<Module<F>>& modules,
                         const std::vector<std::string>& ids, int maxlen, bool sample, bool direct_gldim) {
  BoundReport rep;
  rep.provenance = provenance_name(m.provenance);
  rep.bundle_size = m.summands.size();
  rep.maxlen = maxlen;
  rep.sample = sample;
  int worst = 0;
  bool all = true;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    ResolutionRow row;
    row.id = ids[i];
    row.dims = modules[i].dimension_vector();
    if (auto r = add_m_resolution<F>(m, modules[i], maxlen)) {
      row.length = r->length();
      row.exact = r->exact;
      row.hom_exact = r->hom_exact;
      worst = std::max(worst, r->length());
    } else {
      all = false;
    }
    rep.rows.push_back(std::move(row));
  }
  if (all) rep.n_star = worst;
  if (direct_gldim) {
    CategoryAlgebra<F> e = category_algebra<F>(m.summands.objects, m.summands.ids, "End(M)");
    rep.direct_gldim = global_dimension<F>(e.algebra);
  }
  return rep;
}

template <class F>
BoundReport repdim_bound(const GeneratorBundle<F>& m, const ARQuiver<F>& ind, int maxlen, bool direct_gldim) {
  if (!ind.complete()) throw std::invalid_argument("repdim_bound: knitting incomplete");
  std::vector<std::string> ids;
  for (int v = 0; v < ind.size(); ++v) ids.push_back(ind.id(v));
  return repdim_bound<F>(m, ind.vertices, ids, maxlen, false, direct_gldim);
}

template <class F>
GeneratorBundle<F> additive_generator(const ARQuiver<F>& ind) {
  if (!ind.complete()) throw std::invalid_argument("additive_generator: knitting incomplete");
  GeneratorBundle<F> g;
  g.summands = Subcategory<F>(ind.algebra);
  for (int v = 0; v < ind.size(); ++v) g.summands.add(ind.vertices[sz(v)], ind.id(v));
  g.provenance = Provenance::Additive;
  return g;
}

template <class F>
GeneratorBundle<F> generator_thm31(const TriangularAlgebra<F>& t2, MorRoute route) {
  GeneratorBundle<F> g;
  g.summands = mor_generator<F>(t2, MorKind::AddA, route);
  Subcategory<F> inj = mor_generator<F>(t2, MorKind::AddDA, route);
  for (int i = 0; i < inj.size(); ++i) g.summands.add(inj.objects[sz(i)], inj.ids[sz(i)]);
  g.provenance = Provenance::Thm31;
  return g;
}

template <class F>
GeneratorBundle<F> generator_thm32(const TriangularAlgebra<F>& t2) {
  GeneratorBundle<F> g;
  g.summands = Subcategory<F>(t2.algebra);
  for (int v = 0; v < t2.algebra.num_vertices(); ++v)
    g.summands.add(projective_module<F>(t2.algebra, v), "P" + t2.algebra.vertex_label(v));
  for (int v = 0; v < t2.algebra.num_vertices(); ++v)
    g.summands.add(injective_module<F>(t2.algebra, v), "I" + t2.algebra.vertex_label(v));
  g.provenance = Provenance::Thm32;
  return g;
}

template <class F>
GeneratorBundle<F> generator_thm47(const TiltingData<F>& t, const TriangularAlgebra<F>& block) {
  const Algebra<F>& a = t.tilt.owner;
  const Algebra<F>& b = t.endo.algebra;
  if (!block.x_side.same_as(a) || !block.y_side.same_as(b))
    throw std::invalid_argument("generator_thm47: block algebra does not match the tilting data");
  GeneratorBundle<F> g;
  g.summands = Subcategory<F>(block.algebra);
  g.provenance = Provenance::Thm47;
  auto add = [&](const TripleModule<F>& tr, const std::string& family) {
    if (!is_valid_triple<F>(block, tr)) throw std::logic_error("generator_thm47: " + family + " is not a module");
    Module<F> m = flatten<F>(block, tr);
    if (!m.is_zero()) g.summands.add_summands(m, family);
  };
  TriangularAlgebra<F> t2 = t2_algebra<F>(a);
  Subcategory<F> mor = mor_generator<F>(t2, MorKind::AddA, MorRoute::Presentations);
  for (const auto& obj : mor.objects) add(induced_triple<F>(block, triple_map<F>(t2, unflatten<F>(t2, obj))), "(P1,DT2,f)");
  const Module<F> zero_a = Module<F>::zero(a), zero_b = Module<F>::zero(b);
  for (int j = 0; j < b.num_vertices(); ++j)
    add(unflatten<F>(block, injective_module<F>(block.algebra, block.y_vertex(j))), "(T,DB,id)");
  for (int i = 0; i < a.num_vertices(); ++i)
    add(unflatten<F>(block, injective_module<F>(block.algebra, block.x_vertex(i))), "(DA,0,0)");
  add(split_triple<F>(block, zero_a, coregular_module<F>(b)), "(0,DB,0)");
  add(split_triple<F>(block, zero_a, t.dual_tilt.module()), "(0,DT,0)");
  add(split_triple<F>(block, t.tilt.module(), zero_b), "(T,0,0)");
  for (int j = 0; j < b.num_vertices(); ++j)
    add(unflatten<F>(block, projective_module<F>(block.algebra, block.y_vertex(j))), "(0,B,0)");
  return g;
}

#define TRIREP_INSTANTIATE(F)                                                                                 \
  template struct GeneratorBundle<F>;                                                                         \
  template std::optional<Resolution<F>> add_m_resolution<F>(const GeneratorBundle<F>&, const Module<F>&, int); \
  template bool is_exact<F>(const Resolution<F>&);                                                            \
  template bool is_hom_exact<F>(const GeneratorBundle<F>&, const Resolution<F>&);                             \
  template BoundReport repdim_bound<F>(const GeneratorBundle<F>&, const std::vector<Module<F>>&,              \
                                       const std::vector<std::string>&, int, bool, bool);                     \
  template BoundReport repdim_bound<F>(const GeneratorBundle<F>&, const ARQuiver<F>&, int, bool);            \
  template GeneratorBundle<F> additive_generator<F>(const ARQuiver<F>&);                                      \
  template GeneratorBundle<F> generator_thm31<F>(const TriangularAlgebra<F>&, MorRoute);                      \
  template GeneratorBundle<F> generator_thm32<F>(const TriangularAlgebra<F>&);                                \
  template GeneratorBundle<F> generator_thm47<F>(const TiltingData<F>&, const TriangularAlgebra<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
