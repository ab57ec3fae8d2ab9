#include "trirep/artheory.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <tuple>

namespace trirep {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Index total(const std::vector<Index>& d) { return std::accumulate(d.begin(), d.end(), Index{0}); }
}  // namespace

std::string dimension_string(const std::vector<Index>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

template <class F>
Module<F> transpose(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  Algebra<F> op = a.opposite();
  if (m.is_zero()) return Module<F>::zero(op);
  Presentation<F> p = minimal_projective_presentation<F>(m);
  if (p.p1.tops.empty()) return Module<F>::zero(op);
  FreeModule<F> f0 = free_module<F>(op, p.p0.tops);
  FreeModule<F> f1 = free_module<F>(op, p.p1.tops);
  // Hom(d1, A): the generator of summand k goes to sum_b c_{k,b} b^op in
  // summand l, where d1(gen_l) = sum_{k,b} c_{k,b} b in summand k.
  std::vector<Vec<F>> images;
  for (std::size_t k = 0; k < p.p0.tops.size(); ++k) {
    const int v = p.p0.tops[k];
    Vec<F> img = Vec<F>::Constant(f1.module.dim_at(v), F(0));
    for (std::size_t l = 0; l < p.p1.tops.size(); ++l) {
      const int w = p.p1.tops[l];
      Vec<F> y = generator_image<F>(p.p1, p.d1, static_cast<int>(l));
      for (int b : a.block(v, w)) {
        const F& c = y(p.p0.base[k][sz(w)] + a.block_position(b));
        if (!is_zero(c)) img(f1.base[l][sz(v)] + op.block_position(b)) += c;
      }
    }
    images.push_back(std::move(img));
  }
  return cokernel<F>(map_from_free<F>(f0, f1.module, images)).module;
}

template <class F>
Module<F> ar_translate(const Module<F>& m) {
  return dual_module<F>(transpose<F>(m));
}

template <class F>
Module<F> inverse_ar_translate(const Module<F>& m) {
  return transpose<F>(dual_module<F>(m));
}

template <class F>
AlmostSplitSequence<F> almost_split_sequence(const Module<F>& z, std::optional<Module<F>> tau_z) {
  Module<F> tz = tau_z ? *tau_z : ar_translate<F>(z);
  if (tz.is_zero()) throw NotAlmostSplit("almost_split_sequence: module is projective");
  ExtGroup<F> ext = ext_group<F>(1, z, tz);
  if (ext.dim == 0) throw NotAlmostSplit("almost_split_sequence: Ext^1(z, tau z) vanishes");
  const auto& res = ext.resolution;
  const FreeModule<F>& p0 = res.terms[0];
  const FreeModule<F>& p1 = res.terms[1];
  const Morphism<F>& d0 = res.differentials[0];
  const Morphism<F>& eps = res.augmentation;

  // Socle of Ext^1(z, tau z) under pull-back along rad End(z).
  EndomorphismAlgebra<F> end = endomorphism_algebra<F>(z);
  Mat<F> rad = radical_of_algebra<F>(end);
  const Index r = ext.dim;
  const Index b = ext.coboundaries.cols();
  Mat<F> both(ext.representatives.rows(), b + r);
  if (b > 0) both.leftCols(b) = ext.coboundaries;
  both.rightCols(r) = ext.representatives;
  std::vector<Mat<F>> conditions;
  for (Index k = 0; k < rad.cols(); ++k) {
    Morphism<F> f = end.realize(rad.col(k));
    Morphism<F> f0 = lift_to_free<F>(p0, compose<F>(f, eps), eps);
    Morphism<F> f1 = lift_to_free<F>(p1, compose<F>(f0, d0), d0);
    Mat<F> pull = induced_hom_map<F>(p1, p1, f1, tz);
    auto coords = solve<F>(both, multiply<F>(pull, ext.representatives));
    if (!coords) throw std::logic_error("almost_split_sequence: pull-back left the cocycles");
    conditions.push_back(coords->bottomRows(r));
  }
  Vec<F> xi;
  if (conditions.empty()) {
    xi = ext.representatives.col(0);
  } else {
    Mat<F> soc = kernel_basis<F>(vstack<F>(conditions, r));
    if (soc.cols() == 0) throw std::logic_error("almost_split_sequence: empty Ext socle");
    xi = multiply<F>(ext.representatives, Vec<F>(soc.col(0)));
  }

  // Push out 0 -> im d0 -> P0 -> z -> 0 along xi.
  Morphism<F> xim = yoneda_morphism<F>(p1, tz, xi);
  DirectSum<F> ds = direct_sum<F>({tz, p0.module}, z.algebra());
  Morphism<F> rel = compose<F>(ds.injections[0], xim) - compose<F>(ds.injections[1], d0);
  QuotientModule<F> e = cokernel<F>(rel);
  AlmostSplitSequence<F> out;
  out.left = tz;
  out.middle = e.module;
  out.right = z;
  out.inclusion = compose<F>(e.projection, ds.injections[0]);
  out.projection = factor_through_epi<F>(e.projection, compose<F>(eps, ds.projections[1]));

  // Non-split: no section of the projection.
  std::vector<Morphism<F>> sections = hom_space<F>(z, e.module);
  if (!sections.empty()) {
    Mat<F> id = Morphism<F>::identity(z).matrix();
    Mat<F> cols(id.size(), static_cast<Index>(sections.size()));
    for (std::size_t i = 0; i < sections.size(); ++i) {
      Mat<F> c = compose<F>(out.projection, sections[i]).matrix();
      cols.col(static_cast<Index>(i)) = Eigen::Map<Vec<F>>(c.data(), c.size());
    }
    if (solve<F>(cols, Mat<F>(Eigen::Map<Vec<F>>(id.data(), id.size()))))
      throw std::logic_error("almost_split_sequence: constructed sequence splits");
  }
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
std::string ARQuiver<F>::id(int v) const {
  return "M" + std::to_string(v);
}

template <class F>
std::optional<int> ARQuiver<F>::find(const Module<F>& m) const {
  for (int i = 0; i < exact_vertices; ++i) {
    if (dims[sz(i)] != m.dimension_vector()) continue;
    if (!same_invariants<F>(vertices[sz(i)], m)) continue;
    if (indecomposable_iso<F>(vertices[sz(i)], m)) return i;
  }
  return std::nullopt;
}

template <class F>
bool ARQuiver<F>::verify() const {
  for (const auto& mesh : meshes) {
    std::vector<Index> sum = dims[sz(mesh.left)];
    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += dims[sz(mesh.right)][v];
    std::vector<Index> mid(sum.size(), 0);
    for (const auto& [w, mult] : mesh.middle) {
      for (std::size_t v = 0; v < sum.size(); ++v) mid[v] += mult * dims[sz(w)][v];
      auto in = arrows.find({mesh.left, w});
      auto out = arrows.find({w, mesh.right});
      if (in == arrows.end() || out == arrows.end() || in->second != mult || out->second != mult) return false;
    }
    if (mid != sum) return false;
  }
  return true;
}

namespace {

template <class F>
class Knitter {
 public:
  Knitter(const Algebra<F>& a, const KnitOptions& o) : opts_(o) { q_.algebra = a; }

  ARQuiver<F> run() {
    const Algebra<F>& a = q_.algebra;
    const int n = a.num_vertices();
    try {
      for (int v = 0; v < n; ++v) q_.projective[sz(add(projective_module<F>(a, v)))] = 1;
      for (int v = 0; v < n; ++v) q_.injective[sz(add(injective_module<F>(a, v)))] = 1;
      // a vertex whose neighbours would exceed the exact limit is left
      // unfinished; the others keep knitting exactly
      for (std::size_t i = 0; i < q_.vertices.size(); ++i)
        if (!process(static_cast<int>(i))) switched_ = true;
    } catch (const Cutoff&) {
      q_.certificate = Certificate::CutoffExceeded;
    }
    q_.exact_vertices = static_cast<int>(q_.vertices.size());
    if (switched_) {
      q_.certificate = Certificate::CutoffExceeded;
      try {
        continue_on_dimensions();
      } catch (const Cutoff&) {
      }
    }
    canonicalize();
    return std::move(q_);
  }

 private:
  struct Cutoff {};

  int new_vertex(std::vector<Index> d) {
    if (static_cast<int>(q_.dims.size()) >= opts_.cutoff) throw Cutoff{};
    q_.dims.push_back(std::move(d));
    q_.projective.push_back(0);
    q_.injective.push_back(0);
    q_.tau.push_back(-1);
    q_.tau_inverse.push_back(-1);
    done_.push_back(0);
    return static_cast<int>(q_.dims.size()) - 1;
  }

  int add(const Module<F>& m) {
    q_.exact_vertices = static_cast<int>(q_.vertices.size());
    if (auto i = q_.find(m)) return *i;
    const int i = new_vertex(m.dimension_vector());
    q_.vertices.push_back(m);
    q_.exact_vertices = static_cast<int>(q_.vertices.size());
    return i;
  }

  bool too_big(const Module<F>& m) const { return opts_.exact_dim_limit > 0 && m.dim() > opts_.exact_dim_limit; }

  void set_arrow(int from, int to, int mult) {
    int& slot = q_.arrows[{from, to}];
    slot = std::max(slot, mult);
  }

  std::vector<std::pair<int, int>> pieces(const Module<F>& m) {
    std::vector<std::pair<int, int>> out;
    if (m.is_zero()) return out;
    Decomposition<F> d = decompose<F>(m);
    for (const auto& c : d.classes) out.push_back({add(d.pieces[sz(c.representative)].module), c.multiplicity()});
    return out;
  }

  // False when a module past the exact limit would be needed.
  bool process(int i) {
    const Module<F> x = q_.vertices[sz(i)];
    if (q_.projective[sz(i)]) {
      SubModule<F> rad = submodule<F>(x, radical_subspaces<F>(x));
      for (const auto& [j, mult] : pieces(rad.module)) set_arrow(j, i, mult);
    }
    if (q_.injective[sz(i)]) {
      QuotientModule<F> top = quotient_module<F>(x, socle_subspaces<F>(x));
      for (const auto& [j, mult] : pieces(top.module)) set_arrow(i, j, mult);
    }
    bool finished = true;
    if (!q_.projective[sz(i)] && q_.tau[sz(i)] < 0) {
      Module<F> t = ar_translate<F>(x);
      if (too_big(t)) {
        finished = false;
      } else {
        const int j = add(t);
        q_.tau[sz(i)] = j;
        q_.tau_inverse[sz(j)] = i;
      }
    }
    if (!q_.injective[sz(i)]) {
      int zi = q_.tau_inverse[sz(i)];
      if (zi < 0) {
        Module<F> z = inverse_ar_translate<F>(x);
        if (too_big(z)) return false;
        zi = add(z);
        q_.tau_inverse[sz(i)] = zi;
        q_.tau[sz(zi)] = i;
      }
      AlmostSplitSequence<F> s = almost_split_sequence<F>(q_.vertices[sz(zi)], x);
      Mesh mesh{i, zi, pieces(s.middle)};
      for (const auto& [w, mult] : mesh.middle) {
        set_arrow(i, w, mult);
        set_arrow(w, zi, mult);
      }
      q_.meshes.push_back(std::move(mesh));
    }
    if (!finished) return false;
    done_[sz(i)] = 1;
    return true;
  }

  struct Overflow {};

  static Index checked_add(Index x, Index y) {
    Index r;
    if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
    return r;
  }

  // The translate of `pick` on dimension vectors from its neighbours on one
  // side: sum of neighbours minus pick. Nullopt at the end of a component.
  std::optional<std::vector<Index>> translate_dims(int pick, const std::vector<std::pair<int, int>>& side) const {
    std::vector<Index> d(q_.dims[sz(pick)].size(), 0);
    for (const auto& [w, mult] : side)
      for (std::size_t v = 0; v < d.size(); ++v) {
        Index term;
        if (__builtin_mul_overflow(static_cast<Index>(mult), q_.dims[sz(w)][v], &term)) throw Overflow{};
        d[v] = checked_add(d[v], term);
      }
    bool positive = false;
    for (std::size_t v = 0; v < d.size(); ++v) {
      d[v] -= q_.dims[sz(pick)][v];
      if (d[v] < 0) return std::nullopt;
      positive = positive || d[v] > 0;
    }
    if (!positive) return std::nullopt;
    return d;
  }

  // A vertex has its successors fixed once its own tau^-1 mesh exists, and
  // its predecessors once the mesh ending at it exists.
  bool right_done(int v) const { return done_[sz(v)] || q_.injective[sz(v)]; }
  bool left_done(int v) const {
    return left_done_[sz(v)] || q_.projective[sz(v)] || (q_.tau[sz(v)] >= 0 && done_[sz(q_.tau[sz(v)])]);
  }

  // Knitting on dimension vectors in both directions: tau^-1 X once every
  // predecessor of X is finished, tau X once every successor is. Injectivity
  // and projectivity of the new vertices are unknown, so nothing here is
  // ever certified. Stops when an entry leaves the 64-bit range.
  void continue_on_dimensions() {
    left_done_.resize(done_.size(), 0);
    try {
      while (step_on_dimensions()) {
      }
    } catch (const Overflow&) {
      q_.dimension_overflow = true;
    }
  }

  bool step_on_dimensions() {
    const int n = q_.size();
    left_done_.resize(sz(n), 0);
    std::vector<char> right_blocked(sz(n), 0), left_blocked(sz(n), 0);
    for (const auto& [e, mult] : q_.arrows) {
      if (!right_done(e.first)) right_blocked[sz(e.second)] = 1;
      if (!left_done(e.second)) left_blocked[sz(e.first)] = 1;
    }
    for (int i = 0; i < n; ++i) {
      if (!right_done(i) && !right_blocked[sz(i)]) {
        knit_right(i);
        return true;
      }
      if (!left_done(i) && !left_blocked[sz(i)]) {
        knit_left(i);
        return true;
      }
    }
    return false;
  }

  void knit_right(int pick) {
    std::vector<std::pair<int, int>> middle;
    for (const auto& [e, mult] : q_.arrows)
      if (e.first == pick) middle.push_back({e.second, mult});
    auto d = translate_dims(pick, middle);
    done_[sz(pick)] = 1;
    if (!d) return;
    const int z = q_.tau_inverse[sz(pick)] >= 0 ? q_.tau_inverse[sz(pick)] : new_vertex(*d);
    left_done_.resize(done_.size(), 0);
    q_.tau_inverse[sz(pick)] = z;
    q_.tau[sz(z)] = pick;
    for (const auto& [w, mult] : middle) set_arrow(w, z, mult);
    q_.meshes.push_back({pick, z, middle});
  }

  void knit_left(int pick) {
    std::vector<std::pair<int, int>> middle;
    for (const auto& [e, mult] : q_.arrows)
      if (e.second == pick) middle.push_back({e.first, mult});
    auto d = translate_dims(pick, middle);
    left_done_[sz(pick)] = 1;
    if (!d) return;
    const int z = q_.tau[sz(pick)] >= 0 ? q_.tau[sz(pick)] : new_vertex(*d);
    left_done_.resize(done_.size(), 0);
    done_[sz(z)] = 1;
    q_.tau[sz(pick)] = z;
    q_.tau_inverse[sz(z)] = pick;
    for (const auto& [w, mult] : middle) set_arrow(z, w, mult);
    q_.meshes.push_back({z, pick, middle});
  }

  // Exact vertices sorted by (total dimension, dimension vector, discovery);
  // dimension-only vertices keep discovery order after them.
  void canonicalize() {
    const int n = q_.size();
    std::vector<int> order(sz(n));
    std::iota(order.begin(), order.end(), 0);
    const int ex = q_.exact_vertices;
    std::stable_sort(order.begin(), order.begin() + ex, [&](int x, int y) {
      const auto& dx = q_.dims[sz(x)];
      const auto& dy = q_.dims[sz(y)];
      if (total(dx) != total(dy)) return total(dx) < total(dy);
      return dx < dy;
    });
    std::vector<int> pos(sz(n));
    for (int i = 0; i < n; ++i) pos[sz(order[sz(i)])] = i;
    auto remap = [&](int v) { return v < 0 ? -1 : pos[sz(v)]; };
    ARQuiver<F> r;
    r.algebra = q_.algebra;
    r.certificate = q_.certificate;
    r.exact_vertices = ex;
    r.dimension_overflow = q_.dimension_overflow;
    for (int i = 0; i < n; ++i) {
      const int o = order[sz(i)];
      if (i < ex) r.vertices.push_back(q_.vertices[sz(o)]);
      r.dims.push_back(q_.dims[sz(o)]);
      r.projective.push_back(q_.projective[sz(o)]);
      r.injective.push_back(q_.injective[sz(o)]);
      r.tau.push_back(remap(q_.tau[sz(o)]));
      r.tau_inverse.push_back(remap(q_.tau_inverse[sz(o)]));
    }
    for (const auto& [e, mult] : q_.arrows) r.arrows[{remap(e.first), remap(e.second)}] = mult;
    for (const auto& m : q_.meshes) {
      Mesh mm{remap(m.left), remap(m.right), {}};
      for (const auto& [w, mult] : m.middle) mm.middle.push_back({remap(w), mult});
      std::sort(mm.middle.begin(), mm.middle.end());
      r.meshes.push_back(std::move(mm));
    }
    std::sort(r.meshes.begin(), r.meshes.end(), [](const Mesh& x, const Mesh& y) {
      return std::tie(x.right, x.left) < std::tie(y.right, y.left);
    });
    q_ = std::move(r);
  }

  KnitOptions opts_;
  ARQuiver<F> q_;
  std::vector<char> done_, left_done_;
  bool switched_ = false;
};

}  // namespace

template <class F>
ARQuiver<F> knit_ar_quiver(const Algebra<F>& a, const KnitOptions& opts) {
  if (opts.cutoff < a.num_vertices()) throw std::invalid_argument("knit_ar_quiver: cutoff below the number of vertices");
  return Knitter<F>(a, opts).run();
}

template <class F>
std::optional<int> representation_finite_count(const Algebra<F>& a, int cutoff) {
  KnitOptions o;
  o.cutoff = cutoff;
  ARQuiver<F> q = knit_ar_quiver<F>(a, o);
  if (!q.complete()) return std::nullopt;
  return q.size();
}

template <class F>
std::string ar_quiver_dot(const ARQuiver<F>& q) {
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int v = 0; v < q.size(); ++v) {
    os << "  " << q.id(v) << " [label=\"" << dimension_string(q.dims[sz(v)]) << "\"";
    if (q.projective[sz(v)] && q.injective[sz(v)])
      os << ", peripheries=3";
    else if (q.projective[sz(v)] || q.injective[sz(v)])
      os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& [e, mult] : q.arrows) {
    os << "  " << q.id(e.first) << " -> " << q.id(e.second);
    if (mult > 1) os << " [label=\"" << mult << "\"]";
    os << ";\n";
  }
  for (int v = 0; v < q.size(); ++v)
    if (q.tau[sz(v)] >= 0)
      os << "  " << q.id(v) << " -> " << q.id(q.tau[sz(v)]) << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

#define TRIREP_INSTANTIATE(F)                                                                            \
  template Module<F> transpose<F>(const Module<F>&);                                                     \
  template Module<F> ar_translate<F>(const Module<F>&);                                                  \
  template Module<F> inverse_ar_translate<F>(const Module<F>&);                                          \
  template AlmostSplitSequence<F> almost_split_sequence<F>(const Module<F>&, std::optional<Module<F>>); \
  template struct ARQuiver<F>;                                                                           \
  template ARQuiver<F> knit_ar_quiver<F>(const Algebra<F>&, const KnitOptions&);                         \
  template std::optional<int> representation_finite_count<F>(const Algebra<F>&, int);                    \
  template std::string ar_quiver_dot<F>(const ARQuiver<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
