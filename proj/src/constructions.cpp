#include "trirep/constructions.hpp"

#include <cstdio>
#include <map>

#include "trirep/decomp.hpp"
#include "trirep/homological.hpp"

namespace trirep {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Action of a homogeneous element of e_s A e_t as a dims[t] x dims[s] matrix.
template <class F>
Mat<F> element_action(const Module<F>& m, const Element<F>& e, int s, int t) {
  Mat<F> out = zeros<F>(m.dim_at(t), m.dim_at(s));
  for (const auto& term : e) out += m.block_action(term.index) * term.coeff;
  return out;
}

}  // namespace

template <class F>
bool TriangularAlgebra<F>::is_t2() const {
  if (!x_side.same_as(y_side) || bimodule.dim() != x_side.dim()) return false;
  for (int b = 0; b < x_side.dim(); ++b)
    if (bimodule.left_vertex[sz(b)] != x_side.source(b) || bimodule.right_vertex[sz(b)] != x_side.target(b))
      return false;
  return true;
}

template <class F>
TriangularAlgebra<F> triangular_matrix_algebra(const Algebra<F>& b, const Algebra<F>& a, const Bimodule<F>& m,
                                               const std::string& name) {
  if (!m.left.same_as(a) || !m.right.same_as(b))
    throw std::invalid_argument("triangular_matrix_algebra: bimodule owners do not match");
  TriangularAlgebra<F> t;
  t.x_side = a;
  t.y_side = b;
  t.bimodule = m;
  const int nb = b.num_vertices(), db = b.dim(), dm = static_cast<int>(m.dim()), da = a.dim();

  StructureSpec<F> spec;
  spec.name = name;
  for (int v = 0; v < nb; ++v) spec.vertex_labels.push_back(b.vertex_label(v) + "'");
  for (int v = 0; v < a.num_vertices(); ++v) spec.vertex_labels.push_back(a.vertex_label(v));
  for (int x = 0; x < db; ++x) {
    spec.basis_labels.push_back(b.basis_label(x) + "'");
    spec.source.push_back(b.source(x));
    spec.target.push_back(b.target(x));
  }
  for (int k = 0; k < dm; ++k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "m%d", k);
    spec.basis_labels.push_back(buf);
    spec.source.push_back(nb + m.left_vertex[sz(k)]);
    spec.target.push_back(m.right_vertex[sz(k)]);
  }
  for (int x = 0; x < da; ++x) {
    spec.basis_labels.push_back(a.basis_label(x));
    spec.source.push_back(nb + a.source(x));
    spec.target.push_back(nb + a.target(x));
  }
  for (int v = 0; v < nb; ++v) spec.idempotents.push_back(v);
  for (int v = 0; v < a.num_vertices(); ++v) spec.idempotents.push_back(db + dm + v);

  std::map<int, Mat<F>> left_cache, right_cache;
  auto shifted = [](const Element<F>* p, int offset) {
    Element<F> e;
    if (p)
      for (const auto& term : *p) e.push_back({term.index + offset, term.coeff});
    return e;
  };
  auto column = [&](const Mat<F>& act, int k, int offset) {
    Element<F> e;
    for (Index r = 0; r < act.rows(); ++r)
      if (!is_zero(act(r, k))) e.push_back({static_cast<int>(r) + offset, act(r, k)});
    return e;
  };
  spec.multiply = [&](int x, int y) -> Element<F> {
    if (spec.target[sz(x)] != spec.source[sz(y)]) return {};
    const bool xb = x < db, xm = x >= db && x < db + dm, xa = x >= db + dm;
    const bool yb = y < db, ym = y >= db && y < db + dm, ya = y >= db + dm;
    if (xb && yb) return shifted(b.product(x, y), 0);
    if (xa && ya) return shifted(a.product(x - db - dm, y - db - dm), db + dm);
    if (xm && yb) {
      auto it = right_cache.find(y);
      if (it == right_cache.end()) it = right_cache.emplace(y, m.right_action(y)).first;
      return column(it->second, x - db, db);
    }
    if (xa && ym) {
      const int ax = x - db - dm;
      auto it = left_cache.find(ax);
      if (it == left_cache.end()) it = left_cache.emplace(ax, m.left_action(ax)).first;
      return column(it->second, y - db, db);
    }
    return {};
  };
  Rebased<F> r = rebase_to_monomial<F>(spec);
  t.algebra = r.algebra;
  t.new_in_old = std::move(r.new_in_old);
  t.old_in_new = std::move(r.old_in_new);
  return t;
}

template <class F>
TriangularAlgebra<F> t2_algebra(const Algebra<F>& a) {
  return triangular_matrix_algebra<F>(a, a, regular_bimodule<F>(a), "T2(" + a.name() + ")");
}

template <class F>
TriangularAlgebra<F> duplicated_algebra(const Algebra<F>& a) {
  return triangular_matrix_algebra<F>(a, a, dual_bimodule<F>(regular_bimodule<F>(a)), a.name() + "^(1)");
}

template <class F>
bool is_valid_triple(const TriangularAlgebra<F>& t, const TripleModule<F>& m) {
  const Bimodule<F>& bm = t.bimodule;
  if (!m.x.algebra().same_as(t.x_side) || !m.y.algebra().same_as(t.y_side)) return false;
  if (static_cast<Index>(m.phi.size()) != bm.dim()) return false;
  for (Index k = 0; k < bm.dim(); ++k) {
    const Mat<F>& p = m.phi[static_cast<std::size_t>(k)];
    if (p.rows() != m.y.dim_at(bm.right_vertex[static_cast<std::size_t>(k)]) ||
        p.cols() != m.x.dim_at(bm.left_vertex[static_cast<std::size_t>(k)]))
      return false;
  }
  // phi_k X(g) = phi_{g m_k} and Y(h) phi_k = phi_{m_k h}
  for (int g = 0; g < t.x_side.num_generators(); ++g) {
    const int s = t.x_side.generator_source(g), tg = t.x_side.generator_target(g);
    const Mat<F>& act = bm.left_gen[sz(g)];
    for (Index k = 0; k < bm.dim(); ++k) {
      if (bm.left_vertex[static_cast<std::size_t>(k)] != tg) continue;
      Mat<F> lhs = multiply<F>(m.phi[static_cast<std::size_t>(k)], m.x.generator(g));
      Mat<F> rhs = zeros<F>(lhs.rows(), m.x.dim_at(s));
      for (Index l = 0; l < bm.dim(); ++l)
        if (!is_zero(act(l, k))) rhs += m.phi[static_cast<std::size_t>(l)] * act(l, k);
      if (lhs != rhs) return false;
    }
  }
  for (int h = 0; h < t.y_side.num_generators(); ++h) {
    const int s = t.y_side.generator_source(h), th = t.y_side.generator_target(h);
    const Mat<F>& act = bm.right_gen[sz(h)];
    for (Index k = 0; k < bm.dim(); ++k) {
      if (bm.right_vertex[static_cast<std::size_t>(k)] != s) continue;
      Mat<F> lhs = multiply<F>(m.y.generator(h), m.phi[static_cast<std::size_t>(k)]);
      Mat<F> rhs = zeros<F>(m.y.dim_at(th), lhs.cols());
      for (Index l = 0; l < bm.dim(); ++l)
        if (!is_zero(act(l, k))) rhs += m.phi[static_cast<std::size_t>(l)] * act(l, k);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

template <class F>
Module<F> flatten(const TriangularAlgebra<F>& t, const TripleModule<F>& m) {
  if (!m.x.algebra().same_as(t.x_side) || !m.y.algebra().same_as(t.y_side))
    throw std::invalid_argument("flatten: owner mismatch");
  const Algebra<F>& l = t.algebra;
  const int nb = t.y_side.num_vertices();
  const int db = t.y_side.dim(), dm = static_cast<int>(t.bimodule.dim());
  std::vector<Index> dims;
  for (int v = 0; v < l.num_vertices(); ++v) dims.push_back(v < nb ? m.y.dim_at(v) : m.x.dim_at(v - nb));
  std::vector<Mat<F>> gens;
  for (int g = 0; g < l.num_generators(); ++g) {
    const int s = l.generator_source(g), tg = l.generator_target(g);
    Mat<F> act = zeros<F>(dims[sz(tg)], dims[sz(s)]);
    for (const auto& term : t.new_in_old[sz(l.generator_basis(g))]) {
      const int o = term.index;
      if (o < db)
        act += m.y.block_action(o) * term.coeff;
      else if (o < db + dm)
        act += m.phi[sz(o - db)] * term.coeff;
      else
        act += m.x.block_action(o - db - dm) * term.coeff;
    }
    gens.push_back(std::move(act));
  }
  return Module<F>(l, std::move(dims), std::move(gens));
}

template <class F>
TripleModule<F> unflatten(const TriangularAlgebra<F>& t, const Module<F>& m) {
  if (!m.algebra().same_as(t.algebra)) throw std::invalid_argument("unflatten: owner mismatch");
  const int nb = t.y_side.num_vertices();
  auto side = [&](const Algebra<F>& a, int vertex_offset, auto old_index) {
    std::vector<Index> dims;
    for (int v = 0; v < a.num_vertices(); ++v) dims.push_back(m.dim_at(v + vertex_offset));
    std::vector<Mat<F>> gens;
    for (int g = 0; g < a.num_generators(); ++g) {
      const int gb = a.generator_basis(g);
      gens.push_back(element_action<F>(m, t.old_in_new[sz(old_index(gb))], a.source(gb) + vertex_offset,
                                       a.target(gb) + vertex_offset));
    }
    return Module<F>(a, std::move(dims), std::move(gens));
  };
  TripleModule<F> out;
  out.y = side(t.y_side, 0, [&](int b) { return t.y_old(b); });
  out.x = side(t.x_side, nb, [&](int b) { return t.x_old(b); });
  for (Index k = 0; k < t.bimodule.dim(); ++k) {
    const int i = t.bimodule.left_vertex[static_cast<std::size_t>(k)];
    const int j = t.bimodule.right_vertex[static_cast<std::size_t>(k)];
    out.phi.push_back(element_action<F>(m, t.old_in_new[sz(t.m_old(static_cast<int>(k)))], nb + i, j));
  }
  return out;
}

template <class F>
TripleModule<F> triple_from_map(const TriangularAlgebra<F>& t, const Morphism<F>& f) {
  if (!t.is_t2()) throw std::invalid_argument("triple_from_map: not a T2 algebra");
  TripleModule<F> out{f.source(), f.target(), {}};
  for (int b = 0; b < t.x_side.dim(); ++b)
    out.phi.push_back(multiply<F>(f.target().block_action(b), f.block(t.x_side.source(b))));
  return out;
}

template <class F>
Morphism<F> triple_map(const TriangularAlgebra<F>& t, const TripleModule<F>& m) {
  if (!t.is_t2()) throw std::invalid_argument("triple_map: not a T2 algebra");
  std::vector<Mat<F>> blocks(m.phi.begin(), m.phi.begin() + t.x_side.num_vertices());
  return Morphism<F>(m.x, m.y, std::move(blocks));
}

template <class F>
TripleModule<F> induced_triple(const TriangularAlgebra<F>& t, const Morphism<F>& f) {
  const Algebra<F>& a = t.x_side;
  const Bimodule<F>& bm = t.bimodule;
  ProjectiveCover<F> pc = projective_cover<F>(f.target());
  if (pc.cover.module.dim() != f.target().dim()) throw std::invalid_argument("induced_triple: target not projective");
  std::vector<Mat<F>> inv;
  for (const auto& blk : pc.epi.blocks()) inv.push_back(*inverse<F>(blk));
  Morphism<F> h = compose<F>(Morphism<F>(f.target(), pc.cover.module, std::move(inv)), f);
  const std::vector<int>& tops = pc.cover.tops;

  // Y = sum of e_top M; coordinate of m_k inside summand l at its right vertex
  std::vector<Module<F>> parts;
  std::vector<std::vector<Index>> local(tops.size(), std::vector<Index>(static_cast<std::size_t>(bm.dim()), -1));
  for (std::size_t l = 0; l < tops.size(); ++l) {
    parts.push_back(bm.restrict_left(tops[l]));
    std::vector<Index> count(sz(t.y_side.num_vertices()), 0);
    for (Index k = 0; k < bm.dim(); ++k)
      if (bm.left_vertex[static_cast<std::size_t>(k)] == tops[l])
        local[l][static_cast<std::size_t>(k)] = count[sz(bm.right_vertex[static_cast<std::size_t>(k)])]++;
  }
  // summands are stacked in order at every vertex
  std::vector<std::vector<Index>> offsets(tops.size(), std::vector<Index>(sz(t.y_side.num_vertices()), 0));
  for (std::size_t l = 1; l < tops.size(); ++l)
    for (int v = 0; v < t.y_side.num_vertices(); ++v) offsets[l][sz(v)] = offsets[l - 1][sz(v)] + parts[l - 1].dim_at(v);
  DirectSum<F> y = direct_sum<F>(parts, t.y_side);
  TripleModule<F> out{f.source(), y.module, {}};
  std::map<int, Mat<F>> left_cache;
  for (Index k = 0; k < bm.dim(); ++k) {
    const int i = bm.left_vertex[static_cast<std::size_t>(k)], j = bm.right_vertex[static_cast<std::size_t>(k)];
    // image of the cover basis element a (in summand l) under - (x) m_k, as a column of Y e_j
    Mat<F> tensor_col = zeros<F>(y.module.dim_at(j), pc.cover.module.dim_at(i));
    for (std::size_t l = 0; l < tops.size(); ++l)
      for (int b : a.block(tops[l], i)) {
        auto it = left_cache.find(b);
        if (it == left_cache.end()) it = left_cache.emplace(b, bm.left_action(b)).first;
        const Index col = pc.cover.position(static_cast<int>(l), b);
        for (Index r = 0; r < bm.dim(); ++r) {
          if (is_zero(it->second(r, k))) continue;
          tensor_col(offsets[l][sz(j)] + local[l][static_cast<std::size_t>(r)], col) += it->second(r, k);
        }
      }
    out.phi.push_back(multiply<F>(tensor_col, h.block(i)));
  }
  return out;
}

template <class F>
TripleModule<F> split_triple(const TriangularAlgebra<F>& t, const Module<F>& x, const Module<F>& y) {
  TripleModule<F> out{x, y, {}};
  for (Index k = 0; k < t.bimodule.dim(); ++k)
    out.phi.push_back(zeros<F>(y.dim_at(t.bimodule.right_vertex[static_cast<std::size_t>(k)]),
                               x.dim_at(t.bimodule.left_vertex[static_cast<std::size_t>(k)])));
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
std::optional<int> Subcategory<F>::find(const Module<F>& m) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].dimension_vector() == m.dimension_vector() && indecomposable_iso<F>(objects[i], m))
      return static_cast<int>(i);
  return std::nullopt;
}

template <class F>
int Subcategory<F>::add(const Module<F>& m, const std::string& id) {
  if (!owner.valid()) owner = m.algebra();
  if (!m.algebra().same_as(owner)) throw std::invalid_argument("Subcategory: owner mismatch");
  if (auto i = find(m)) return *i;
  objects.push_back(m);
  ids.push_back(id);
  return size() - 1;
}

template <class F>
void Subcategory<F>::add_summands(const Module<F>& m, const std::string& prefix) {
  if (m.is_zero()) return;
  Decomposition<F> d = decompose<F>(m);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const std::string id = d.classes.size() == 1 ? prefix : prefix + "." + std::to_string(c);
    add(d.pieces[sz(d.classes[c].representative)].module, id);
  }
}

template <class F>
bool Subcategory<F>::contains_summands(const Module<F>& m) const {
  if (m.is_zero()) return true;
  Decomposition<F> d = decompose<F>(m);
  for (const auto& c : d.classes)
    if (!contains(d.pieces[sz(c.representative)].module)) return false;
  return true;
}

template <class F>
Module<F> Subcategory<F>::sum() const {
  if (objects.empty()) return Module<F>::zero(owner);
  return direct_sum<F>(objects, owner).module;
}

template <class F>
Subcategory<F> proj_injectives(const Algebra<F>& a) {
  Subcategory<F> s(a);
  for (int v = 0; v < a.num_vertices(); ++v) {
    Module<F> p = projective_module<F>(a, v);
    if (is_injective<F>(p)) s.add(p, "P" + a.vertex_label(v));
  }
  return s;
}

namespace {

template <class F>
bool in_mor_category(const TripleModule<F>& tr, MorKind which) {
  auto ok = [&](const Module<F>& m) {
    return m.is_zero() || (which == MorKind::AddA ? is_projective<F>(m) : is_injective<F>(m));
  };
  return ok(tr.x) && ok(tr.y);
}

}  // namespace

template <class F>
Subcategory<F> mor_generator(const TriangularAlgebra<F>& t2, MorKind which, MorRoute route, int cutoff) {
  if (!t2.is_t2()) throw std::invalid_argument("mor_generator: not a T2 algebra");
  const Algebra<F>& a = t2.x_side;
  const std::string tag = which == MorKind::AddA ? "P" : "I";
  Subcategory<F> s(t2.algebra);
  if (route == MorRoute::Knitting) {
    ARQuiver<F> q = knit_ar_quiver<F>(t2.algebra, KnitOptions{cutoff, 0});
    if (!q.complete()) throw KnittingIncomplete("mor_generator: knitting of " + t2.algebra.name() + " exceeded the cutoff");
    for (int v = 0; v < q.size(); ++v)
      if (in_mor_category<F>(unflatten<F>(t2, q.vertices[sz(v)]), which)) s.add(q.vertices[sz(v)], q.id(v));
    return s;
  }
  const Module<F> zero = Module<F>::zero(a);
  for (int v = 0; v < a.num_vertices(); ++v) {
    Module<F> p = which == MorKind::AddA ? projective_module<F>(a, v) : injective_module<F>(a, v);
    const std::string name = tag + a.vertex_label(v);
    s.add(flatten<F>(t2, split_triple<F>(t2, p, zero)), "(" + name + ",0)");
    s.add(flatten<F>(t2, split_triple<F>(t2, zero, p)), "(0," + name + ")");
    s.add(flatten<F>(t2, triple_from_map<F>(t2, Morphism<F>::identity(p))), "(" + name + "," + name + ")");
  }
  ARQuiver<F> q = knit_ar_quiver<F>(a, KnitOptions{cutoff, 0});
  if (!q.complete()) throw KnittingIncomplete("mor_generator: " + a.name() + " is not representation-finite");
  for (int v = 0; v < q.size(); ++v) {
    const Module<F>& x = q.vertices[sz(v)];
    Morphism<F> f;
    if (which == MorKind::AddA) {
      if (q.projective[sz(v)]) continue;
      f = minimal_projective_presentation<F>(x).d1;
    } else {
      if (q.injective[sz(v)]) continue;
      // dual of a minimal presentation of DX: 0 -> X -> I0 -> I1
      Presentation<F> p = minimal_projective_presentation<F>(dual_module<F>(x));
      f = dual_morphism<F>(p.d1, dual_module<F>(p.d1.source()), dual_module<F>(p.d1.target()));
    }
    s.add_summands(flatten<F>(t2, triple_from_map<F>(t2, f)), "pres(" + q.id(v) + ")");
  }
  return s;
}

template <class F>
Algebra<F> auslander_algebra(const Subcategory<F>& s, const std::string& name) {
  return category_algebra<F>(s.objects, s.ids, name).algebra.opposite();
}

#define TRIREP_INSTANTIATE(F)                                                                                        \
  template struct TriangularAlgebra<F>;                                                                              \
  template struct Subcategory<F>;                                                                                    \
  template TriangularAlgebra<F> triangular_matrix_algebra<F>(const Algebra<F>&, const Algebra<F>&, const Bimodule<F>&, \
                                                             const std::string&);                                    \
  template TriangularAlgebra<F> t2_algebra<F>(const Algebra<F>&);                                                    \
  template TriangularAlgebra<F> duplicated_algebra<F>(const Algebra<F>&);                                            \
  template bool is_valid_triple<F>(const TriangularAlgebra<F>&, const TripleModule<F>&);                            \
  template Module<F> flatten<F>(const TriangularAlgebra<F>&, const TripleModule<F>&);                                \
  template TripleModule<F> unflatten<F>(const TriangularAlgebra<F>&, const Module<F>&);                              \
  template TripleModule<F> triple_from_map<F>(const TriangularAlgebra<F>&, const Morphism<F>&);                      \
  template Morphism<F> triple_map<F>(const TriangularAlgebra<F>&, const TripleModule<F>&);                         \
  template TripleModule<F> induced_triple<F>(const TriangularAlgebra<F>&, const Morphism<F>&);                      \
  template TripleModule<F> split_triple<F>(const TriangularAlgebra<F>&, const Module<F>&, const Module<F>&);         \
  template Subcategory<F> proj_injectives<F>(const Algebra<F>&);                                                     \
  template Subcategory<F> mor_generator<F>(const TriangularAlgebra<F>&, MorKind, MorRoute, int);                    \
  template Algebra<F> auslander_algebra<F>(const Subcategory<F>&, const std::string&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
