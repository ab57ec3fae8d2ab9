#include "trirep/bimodule.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "trirep/decomp.hpp"

namespace trirep {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

template <class F>
Mat<F> side_projection(const std::vector<int>& vertex, int v) {
  const Index n = static_cast<Index>(vertex.size());
  Mat<F> m = zeros<F>(n, n);
  for (Index k = 0; k < n; ++k)
    if (vertex[sz(k)] == v) m(k, k) = F(1);
  return m;
}

template <class F>
Mat<F> submatrix(const Mat<F>& m, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  Mat<F> out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<Index>(i), static_cast<Index>(j)) = m(rows[i], cols[j]);
  return out;
}

}  // namespace

template <class F>
Mat<F> Bimodule<F>::left_action(int a) const {
  const auto& w = left.word(a);
  if (w.empty()) return side_projection<F>(left_vertex, left.source(a));
  Mat<F> m = left_gen[sz(w.back())];
  for (std::size_t i = w.size() - 1; i-- > 0;) m = multiply<F>(left_gen[sz(w[i])], m);
  return m;
}

template <class F>
Mat<F> Bimodule<F>::right_action(int b) const {
  const auto& w = right.word(b);
  if (w.empty()) return side_projection<F>(right_vertex, right.source(b));
  Mat<F> m = right_gen[sz(w[0])];
  for (std::size_t i = 1; i < w.size(); ++i) m = multiply<F>(right_gen[sz(w[i])], m);
  return m;
}

template <class F>
std::vector<Index> Bimodule<F>::left_indices(int v) const {
  std::vector<Index> out;
  for (int r = 0; r < right.num_vertices(); ++r)
    for (Index k = 0; k < dim(); ++k)
      if (left_vertex[sz(k)] == v && right_vertex[sz(k)] == r) out.push_back(k);
  return out;
}

template <class F>
std::vector<Index> Bimodule<F>::right_indices(int w) const {
  std::vector<Index> out;
  for (int l = 0; l < left.num_vertices(); ++l)
    for (Index k = 0; k < dim(); ++k)
      if (right_vertex[sz(k)] == w && left_vertex[sz(k)] == l) out.push_back(k);
  return out;
}

namespace {

// Indices of e_v M e_r for every right vertex r (v < 0: all left vertices).
template <class F>
std::vector<std::vector<Index>> split_by_right(const Bimodule<F>& m, int v) {
  std::vector<std::vector<Index>> out(sz(m.right.num_vertices()));
  for (Index k = 0; k < m.dim(); ++k)
    if (v < 0 || m.left_vertex[sz(k)] == v) out[sz(m.right_vertex[sz(k)])].push_back(k);
  return out;
}

template <class F>
Module<F> module_on(const Bimodule<F>& m, const std::vector<std::vector<Index>>& idx) {
  std::vector<Index> dims;
  for (const auto& i : idx) dims.push_back(static_cast<Index>(i.size()));
  std::vector<Mat<F>> gens;
  for (int h = 0; h < m.right.num_generators(); ++h)
    gens.push_back(submatrix<F>(m.right_gen[sz(h)], idx[sz(m.right.generator_target(h))], idx[sz(m.right.generator_source(h))]));
  return Module<F>(m.right, std::move(dims), std::move(gens));
}

}  // namespace

template <class F>
Module<F> Bimodule<F>::restrict_left(int v) const {
  return module_on<F>(*this, split_by_right<F>(*this, v));
}

template <class F>
Module<F> Bimodule<F>::as_right_module() const {
  return module_on<F>(*this, split_by_right<F>(*this, -1));
}

template <class F>
Morphism<F> Bimodule<F>::left_map(int a) const {
  const int u = left.source(a), w = left.target(a);
  auto rows = split_by_right<F>(*this, u);
  auto cols = split_by_right<F>(*this, w);
  Mat<F> act = left_action(a);
  std::vector<Mat<F>> blocks;
  for (int r = 0; r < right.num_vertices(); ++r) blocks.push_back(submatrix<F>(act, rows[sz(r)], cols[sz(r)]));
  return Morphism<F>(module_on<F>(*this, cols), module_on<F>(*this, rows), std::move(blocks));
}

template <class F>
bool Bimodule<F>::check() const {
  if (static_cast<int>(left_gen.size()) != left.num_generators() || static_cast<int>(right_gen.size()) != right.num_generators())
    return false;
  for (const auto& l : left_gen)
    for (const auto& r : right_gen)
      if (multiply<F>(l, r) != multiply<F>(r, l)) return false;
  // homogeneity on both sides
  for (int g = 0; g < left.num_generators(); ++g) {
    Mat<F> m = left_gen[sz(g)];
    for (Index i = 0; i < dim(); ++i)
      for (Index j = 0; j < dim(); ++j)
        if (!is_zero(m(i, j)) && (left_vertex[sz(i)] != left.generator_source(g) ||
                                  left_vertex[sz(j)] != left.generator_target(g) || right_vertex[sz(i)] != right_vertex[sz(j)]))
          return false;
  }
  for (int h = 0; h < right.num_generators(); ++h) {
    Mat<F> m = right_gen[sz(h)];
    for (Index i = 0; i < dim(); ++i)
      for (Index j = 0; j < dim(); ++j)
        if (!is_zero(m(i, j)) && (right_vertex[sz(j)] != right.generator_source(h) ||
                                  right_vertex[sz(i)] != right.generator_target(h) || left_vertex[sz(i)] != left_vertex[sz(j)]))
          return false;
  }
  if (!as_right_module().satisfies_relations()) return false;
  return dual_bimodule<F>(*this).as_right_module().satisfies_relations();
}

template <class F>
Bimodule<F> regular_bimodule(const Algebra<F>& a) {
  Bimodule<F> m;
  m.left = a;
  m.right = a;
  const int n = a.dim();
  for (int b = 0; b < n; ++b) {
    m.left_vertex.push_back(a.source(b));
    m.right_vertex.push_back(a.target(b));
  }
  for (int g = 0; g < a.num_generators(); ++g) {
    const int gb = a.generator_basis(g);
    Mat<F> l = zeros<F>(n, n), r = zeros<F>(n, n);
    for (int b = 0; b < n; ++b) {
      if (const Element<F>* p = a.product(gb, b))
        for (const auto& t : *p) l(t.index, b) += t.coeff;
      if (const Element<F>* p = a.product(b, gb))
        for (const auto& t : *p) r(t.index, b) += t.coeff;
    }
    m.left_gen.push_back(std::move(l));
    m.right_gen.push_back(std::move(r));
  }
  return m;
}

template <class F>
Bimodule<F> dual_bimodule(const Bimodule<F>& m) {
  Bimodule<F> d;
  d.left = m.right;
  d.right = m.left;
  d.left_vertex = m.right_vertex;
  d.right_vertex = m.left_vertex;
  for (const auto& r : m.right_gen) d.left_gen.push_back(r.transpose());
  for (const auto& l : m.left_gen) d.right_gen.push_back(l.transpose());
  return d;
}

// ---------------------------------------------------------------------------

template <class F>
Element<F> CategoryAlgebra<F>::element_of(int i, int j, const Morphism<F>& f) const {
  const int n = static_cast<int>(objects.size());
  const std::size_t blk = sz(i * n + j);
  Element<F> out;
  if (old_block[blk].empty()) return out;
  Vec<F> c = old_coords[blk](f);
  Vec<F> acc = Vec<F>::Constant(algebra.dim(), F(0));
  for (std::size_t k = 0; k < old_block[blk].size(); ++k) {
    if (is_zero(c(static_cast<Index>(k)))) continue;
    for (const auto& t : old_in_new[sz(old_block[blk][k])]) acc(t.index) += c(static_cast<Index>(k)) * t.coeff;
  }
  return element_from_dense<F>(acc);
}

template <class F>
Bimodule<F> CategoryAlgebra<F>::bimodule() const {
  Bimodule<F> m;
  m.left = algebra;
  m.right = objects.at(0).algebra();
  std::vector<Index> off;
  Index total = 0;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    off.push_back(total);
    for (int v = 0; v < m.right.num_vertices(); ++v)
      for (Index r = 0; r < objects[i].dim_at(v); ++r) {
        m.left_vertex.push_back(static_cast<int>(i));
        m.right_vertex.push_back(v);
      }
    total += objects[i].dim();
  }
  for (int h = 0; h < m.right.num_generators(); ++h) {
    Mat<F> r = zeros<F>(total, total);
    const int s = m.right.generator_source(h), t = m.right.generator_target(h);
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const auto& o = objects[i];
      r.block(off[i] + o.offset(t), off[i] + o.offset(s), o.dim_at(t), o.dim_at(s)) = o.generator(h);
    }
    m.right_gen.push_back(std::move(r));
  }
  for (int g = 0; g < algebra.num_generators(); ++g) {
    Mat<F> l = zeros<F>(total, total);
    const int gb = algebra.generator_basis(g);
    const int s = algebra.source(gb), t = algebra.target(gb);
    const Morphism<F>& f = realization[sz(gb)];
    const auto& os = objects[sz(s)];
    const auto& ot = objects[sz(t)];
    for (int v = 0; v < m.right.num_vertices(); ++v)
      l.block(off[sz(s)] + os.offset(v), off[sz(t)] + ot.offset(v), os.dim_at(v), ot.dim_at(v)) = f.block(v);
    m.left_gen.push_back(std::move(l));
  }
  return m;
}

template <class F>
CategoryAlgebra<F> category_algebra(const std::vector<Module<F>>& objects, const std::vector<std::string>& names,
                                    const std::string& name) {
  const int n = static_cast<int>(objects.size());
  if (n == 0) throw std::invalid_argument("category_algebra: no objects");
  CategoryAlgebra<F> c;
  c.objects = objects;
  c.names = names;
  c.old_block.assign(sz(n * n), {});
  c.old_coords.resize(sz(n * n));
  std::vector<Morphism<F>> old;
  StructureSpec<F> spec;
  spec.name = name;
  spec.vertex_labels = names;
  spec.idempotents.assign(sz(n), -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Morphism<F>> basis;
      if (i == j) {
        EndomorphismAlgebra<F> e = endomorphism_algebra<F>(objects[sz(i)]);
        Mat<F> rad = radical_of_algebra<F>(e);
        if (rad.cols() != e.dim() - 1)
          throw SchurViolation("category_algebra: End(" + names[sz(i)] + ")/rad has dimension " +
                               std::to_string(e.dim() - rad.cols()));
        basis.push_back(Morphism<F>::identity(objects[sz(i)]));
        for (Index k = 0; k < rad.cols(); ++k) basis.push_back(e.realize(rad.col(k)));
      } else {
        basis = hom_space<F>(objects[sz(j)], objects[sz(i)]);
      }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const int idx = static_cast<int>(old.size());
        c.old_block[sz(i * n + j)].push_back(idx);
        if (i == j && k == 0) {
          spec.idempotents[sz(i)] = idx;
          spec.basis_labels.push_back("e_" + names[sz(i)]);
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "x%04d", idx);
          spec.basis_labels.push_back(buf);
        }
        spec.source.push_back(i);
        spec.target.push_back(j);
        old.push_back(basis[k]);
      }
      if (!basis.empty()) c.old_coords[sz(i * n + j)] = HomCoordinates<F>(basis);
    }
  spec.multiply = [&](int x, int y) -> Element<F> {
    const int i = spec.source[sz(x)], j = spec.target[sz(x)];
    const int l = spec.target[sz(y)];
    if (spec.source[sz(y)] != j) return {};
    const std::size_t blk = sz(i * n + l);
    if (c.old_block[blk].empty()) return {};
    Vec<F> coords = c.old_coords[blk](compose<F>(old[sz(x)], old[sz(y)]));
    Element<F> e;
    for (std::size_t k = 0; k < c.old_block[blk].size(); ++k)
      if (!is_zero(coords(static_cast<Index>(k)))) e.push_back({c.old_block[blk][k], coords(static_cast<Index>(k))});
    std::sort(e.begin(), e.end(), [](const Term<F>& a, const Term<F>& b) { return a.index < b.index; });
    return e;
  };
  Rebased<F> r = rebase_to_monomial<F>(spec);
  c.algebra = r.algebra;
  c.old_in_new = r.old_in_new;
  for (int b = 0; b < c.algebra.dim(); ++b) {
    const int s = c.algebra.source(b), t = c.algebra.target(b);
    Morphism<F> f = Morphism<F>::zero(objects[sz(t)], objects[sz(s)]);
    for (const auto& term : r.new_in_old[sz(b)]) f = f + old[sz(term.index)].scaled(term.coeff);
    c.realization.push_back(std::move(f));
  }
  return c;
}

// ---------------------------------------------------------------------------

template <class F>
HomFunctorValue<F> hom_functor(const Bimodule<F>& t, const Module<F>& x) {
  if (!t.right.same_as(x.algebra())) throw std::invalid_argument("hom_functor: owner mismatch");
  HomFunctorValue<F> out;
  const int nb = t.left.num_vertices();
  std::vector<Index> dims;
  for (int v = 0; v < nb; ++v) {
    out.bases.push_back(hom_space<F>(t.restrict_left(v), x));
    out.coords.emplace_back(out.bases.back());
    dims.push_back(static_cast<Index>(out.bases.back().size()));
  }
  std::vector<Mat<F>> gens;
  for (int g = 0; g < t.left.num_generators(); ++g) {
    const int s = t.left.generator_source(g), tt = t.left.generator_target(g);
    Morphism<F> lg = t.left_map(t.left.generator_basis(g));  // e_tt T -> e_s T
    Mat<F> m(dims[sz(tt)], dims[sz(s)]);
    for (std::size_t k = 0; k < out.bases[sz(s)].size(); ++k) {
      Morphism<F> f = compose<F>(out.bases[sz(s)][k], lg);
      if (dims[sz(tt)] > 0) m.col(static_cast<Index>(k)) = out.coords[sz(tt)](f);
    }
    gens.push_back(std::move(m));
  }
  out.module = Module<F>(t.left, std::move(dims), std::move(gens));
  return out;
}

template <class F>
Morphism<F> hom_functor_map(const HomFunctorValue<F>& from, const HomFunctorValue<F>& to, const Morphism<F>& phi) {
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < from.bases.size(); ++v) {
    Mat<F> m(static_cast<Index>(to.bases[v].size()), static_cast<Index>(from.bases[v].size()));
    for (std::size_t k = 0; k < from.bases[v].size(); ++k)
      if (m.rows() > 0) m.col(static_cast<Index>(k)) = to.coords[v](compose<F>(phi, from.bases[v][k]));
    blocks.push_back(std::move(m));
  }
  return Morphism<F>(from.module, to.module, std::move(blocks));
}

namespace {

template <class F>
DirectSum<F> tensor_free(const FreeModule<F>& p, const Bimodule<F>& t, std::map<int, Module<F>>& pieces) {
  std::vector<Module<F>> parts;
  for (int v : p.tops) {
    auto it = pieces.find(v);
    if (it == pieces.end()) it = pieces.emplace(v, t.restrict_left(v)).first;
    parts.push_back(it->second);
  }
  return direct_sum<F>(parts, t.right);
}

// (d: next -> from) (x) T.
template <class F>
Morphism<F> tensor_map(const FreeModule<F>& from, const DirectSum<F>& from_t, const FreeModule<F>& next,
                       const DirectSum<F>& next_t, const Morphism<F>& d, const Bimodule<F>& t,
                       std::map<int, Morphism<F>>& lmaps) {
  const Algebra<F>& b = t.left;
  Morphism<F> out = Morphism<F>::zero(next_t.module, from_t.module);
  for (std::size_t l = 0; l < next.tops.size(); ++l) {
    const int w = next.tops[l];
    Vec<F> y = generator_image<F>(next, d, static_cast<int>(l));
    for (std::size_t k = 0; k < from.tops.size(); ++k) {
      const int v = from.tops[k];
      for (int e : b.block(v, w)) {
        const F& c = y(from.base[k][sz(w)] + b.block_position(e));
        if (is_zero(c)) continue;
        auto it = lmaps.find(e);
        if (it == lmaps.end()) it = lmaps.emplace(e, t.left_map(e)).first;
        Morphism<F> piece = compose<F>(from_t.injections[k], compose<F>(it->second.scaled(c), next_t.projections[l]));
        out = out + piece;
      }
    }
  }
  return out;
}

}  // namespace

template <class F>
Module<F> tensor_functor(const Module<F>& y, const Bimodule<F>& t) {
  if (!t.left.same_as(y.algebra())) throw std::invalid_argument("tensor_functor: owner mismatch");
  if (y.is_zero()) return Module<F>::zero(t.right);
  Presentation<F> p = minimal_projective_presentation<F>(y);
  std::map<int, Module<F>> pieces;
  std::map<int, Morphism<F>> lmaps;
  DirectSum<F> p0 = tensor_free<F>(p.p0, t, pieces);
  if (p.p1.tops.empty()) return p0.module;
  DirectSum<F> p1 = tensor_free<F>(p.p1, t, pieces);
  return cokernel<F>(tensor_map<F>(p.p0, p0, p.p1, p1, p.d1, t, lmaps)).module;
}

template <class F>
Index tor1_dim(const Module<F>& y, const Bimodule<F>& t) {
  if (!t.left.same_as(y.algebra())) throw std::invalid_argument("tor1: owner mismatch");
  if (y.is_zero()) return 0;
  ProjectiveResolution<F> r = minimal_projective_resolution<F>(y, 3);
  if (r.terms.size() < 2) return 0;
  std::map<int, Module<F>> pieces;
  std::map<int, Morphism<F>> lmaps;
  DirectSum<F> p0 = tensor_free<F>(r.terms[0], t, pieces);
  DirectSum<F> p1 = tensor_free<F>(r.terms[1], t, pieces);
  Index ker = p1.module.dim() - tensor_map<F>(r.terms[0], p0, r.terms[1], p1, r.differentials[0], t, lmaps).rank();
  if (r.terms.size() < 3) return ker;
  DirectSum<F> p2 = tensor_free<F>(r.terms[2], t, pieces);
  return ker - tensor_map<F>(r.terms[1], p1, r.terms[2], p2, r.differentials[1], t, lmaps).rank();
}

#define TRIREP_INSTANTIATE(F)                                                                                    \
  template struct Bimodule<F>;                                                                                   \
  template struct CategoryAlgebra<F>;                                                                            \
  template Bimodule<F> regular_bimodule<F>(const Algebra<F>&);                                                   \
  template Bimodule<F> dual_bimodule<F>(const Bimodule<F>&);                                                     \
  template CategoryAlgebra<F> category_algebra<F>(const std::vector<Module<F>>&, const std::vector<std::string>&, \
                                                  const std::string&);                                           \
  template HomFunctorValue<F> hom_functor<F>(const Bimodule<F>&, const Module<F>&);                              \
  template Morphism<F> hom_functor_map<F>(const HomFunctorValue<F>&, const HomFunctorValue<F>&, const Morphism<F>&); \
  template Module<F> tensor_functor<F>(const Module<F>&, const Bimodule<F>&);                                    \
  template Index tor1_dim<F>(const Module<F>&, const Bimodule<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
