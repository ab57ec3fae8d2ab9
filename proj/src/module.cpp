#include "trirep/module.hpp"

#include <stdexcept>

namespace trirep {

namespace {
std::size_t sz(Index i) { return static_cast<std::size_t>(i); }
std::size_t sz(int i) { return static_cast<std::size_t>(i); }
}  // namespace

template <class F>
Module<F>::Module(Algebra<F> a, std::vector<Index> dims, std::vector<Mat<F>> gens) {
  auto d = std::make_shared<detail::ModuleData<F>>();
  if (static_cast<int>(dims.size()) != a.num_vertices()) throw std::invalid_argument("module: dimension vector length");
  if (static_cast<int>(gens.size()) != a.num_generators()) throw std::invalid_argument("module: generator count");
  for (int g = 0; g < a.num_generators(); ++g) {
    const Mat<F>& m = gens[sz(g)];
    if (m.rows() != dims[sz(a.generator_target(g))] || m.cols() != dims[sz(a.generator_source(g))])
      throw std::invalid_argument("module: generator matrix has the wrong shape for " + a.generator_label(g));
  }
  d->algebra = std::move(a);
  d->dims = std::move(dims);
  d->offsets.resize(d->dims.size());
  Index off = 0;
  for (std::size_t v = 0; v < d->dims.size(); ++v) {
    d->offsets[v] = off;
    off += d->dims[v];
  }
  d->total = off;
  d->gens = std::move(gens);
  d_ = std::move(d);
}

template <class F>
Module<F> Module<F>::zero(const Algebra<F>& a) {
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g) gens.push_back(Mat<F>(0, 0));
  return Module<F>(a, std::vector<Index>(sz(a.num_vertices()), 0), std::move(gens));
}

template <class F>
Mat<F> Module<F>::block_action(int b) const {
  const Algebra<F>& a = algebra();
  const auto& w = a.word(b);
  if (w.empty()) return identity<F>(dim_at(a.source(b)));
  Mat<F> m = generator(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) m = multiply<F>(generator(w[i]), m);
  return m;
}

template <class F>
Mat<F> Module<F>::action(int b) const {
  const Algebra<F>& a = algebra();
  Mat<F> m = zeros<F>(dim(), dim());
  int s = a.source(b), t = a.target(b);
  m.block(offset(t), offset(s), dim_at(t), dim_at(s)) = block_action(b);
  return m;
}

template <class F>
bool Module<F>::satisfies_relations() const {
  const Algebra<F>& a = algebra();
  std::vector<Mat<F>> act;
  for (int b = 0; b < a.dim(); ++b) act.push_back(block_action(b));
  for (int i = 0; i < a.dim(); ++i)
    for (int g = 0; g < a.num_generators(); ++g) {
      int j = a.generator_basis(g);
      if (a.target(i) != a.source(j)) continue;
      Mat<F> lhs = multiply<F>(generator(g), act[sz(i)]);
      Mat<F> rhs = zeros<F>(lhs.rows(), lhs.cols());
      if (const Element<F>* p = a.product(i, j))
        for (const auto& t : *p) rhs += act[sz(t.index)] * t.coeff;
      if (lhs != rhs) return false;
    }
  return true;
}

template <class F>
Module<F> Module<F>::change_basis(const std::vector<Mat<F>>& p) const {
  const Algebra<F>& a = algebra();
  std::vector<Mat<F>> inv;
  for (const auto& m : p) inv.push_back(*inverse<F>(m));
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g)
    gens.push_back(multiply<F>(multiply<F>(p[sz(a.generator_target(g))], generator(g)), inv[sz(a.generator_source(g))]));
  return Module<F>(a, dimension_vector(), std::move(gens));
}

// ---------------------------------------------------------------------------

template <class F>
Morphism<F>::Morphism(Module<F> source, Module<F> target, std::vector<Mat<F>> blocks)
    : src_(std::move(source)), tgt_(std::move(target)), blocks_(std::move(blocks)) {
  const int n = src_.algebra().num_vertices();
  if (static_cast<int>(blocks_.size()) != n) throw std::invalid_argument("morphism: block count");
  for (int v = 0; v < n; ++v)
    if (blocks_[sz(v)].rows() != tgt_.dim_at(v) || blocks_[sz(v)].cols() != src_.dim_at(v))
      throw std::invalid_argument("morphism: block shape");
}

template <class F>
Morphism<F> Morphism<F>::zero(const Module<F>& s, const Module<F>& t) {
  std::vector<Mat<F>> b;
  for (int v = 0; v < s.algebra().num_vertices(); ++v) b.push_back(zeros<F>(t.dim_at(v), s.dim_at(v)));
  return Morphism(s, t, std::move(b));
}

template <class F>
Morphism<F> Morphism<F>::identity(const Module<F>& m) {
  std::vector<Mat<F>> b;
  for (int v = 0; v < m.algebra().num_vertices(); ++v) b.push_back(trirep::identity<F>(m.dim_at(v)));
  return Morphism(m, m, std::move(b));
}

template <class F>
Mat<F> Morphism<F>::matrix() const {
  return block_diagonal<F>(blocks_);
}

template <class F>
bool Morphism<F>::is_zero() const {
  for (const auto& b : blocks_)
    if (!trirep::is_zero<F>(b)) return false;
  return true;
}

template <class F>
Index Morphism<F>::rank() const {
  Index r = 0;
  for (const auto& b : blocks_) r += trirep::rank<F>(b);
  return r;
}

template <class F>
bool Morphism<F>::is_iso() const {
  for (const auto& b : blocks_)
    if (!is_invertible<F>(b)) return false;
  return true;
}

template <class F>
bool Morphism<F>::is_intertwining() const {
  const Algebra<F>& a = src_.algebra();
  for (int g = 0; g < a.num_generators(); ++g) {
    int s = a.generator_source(g), t = a.generator_target(g);
    if (multiply<F>(tgt_.generator(g), blocks_[sz(s)]) != multiply<F>(blocks_[sz(t)], src_.generator(g))) return false;
  }
  return true;
}

template <class F>
Morphism<F> Morphism<F>::operator+(const Morphism& o) const {
  std::vector<Mat<F>> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] + o.blocks_[v]);
  return Morphism(src_, tgt_, std::move(b));
}

template <class F>
Morphism<F> Morphism<F>::operator-(const Morphism& o) const {
  std::vector<Mat<F>> b;
  for (std::size_t v = 0; v < blocks_.size(); ++v) b.push_back(blocks_[v] - o.blocks_[v]);
  return Morphism(src_, tgt_, std::move(b));
}

template <class F>
Morphism<F> Morphism<F>::scaled(const F& c) const {
  std::vector<Mat<F>> b;
  for (const auto& m : blocks_) b.push_back(m * c);
  return Morphism(src_, tgt_, std::move(b));
}

template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  std::vector<Mat<F>> b;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) b.push_back(multiply<F>(g.blocks()[v], f.blocks()[v]));
  return Morphism<F>(f.source(), g.target(), std::move(b));
}

template <class F>
Morphism<F> linear_combination(const std::vector<Morphism<F>>& basis, const Vec<F>& coeffs,
                               const Module<F>& source, const Module<F>& target) {
  Morphism<F> out = Morphism<F>::zero(source, target);
  std::vector<Mat<F>> b = out.blocks();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const F& c = coeffs(static_cast<Index>(k));
    if (is_zero(c)) continue;
    for (std::size_t v = 0; v < b.size(); ++v) b[v] += basis[k].blocks()[v] * c;
  }
  return Morphism<F>(source, target, std::move(b));
}

// ---------------------------------------------------------------------------

template <class F>
Index FreeModule<F>::position(int k, int b) const {
  const Algebra<F>& a = module.algebra();
  return base[sz(k)][sz(a.target(b))] + a.block_position(b);
}

template <class F>
FreeModule<F> free_module(const Algebra<F>& a, std::vector<int> tops) {
  const int n = a.num_vertices();
  FreeModule<F> p;
  p.tops = std::move(tops);
  std::vector<Index> dims(sz(n), 0);
  for (int v : p.tops) {
    std::vector<Index> base(sz(n));
    for (int w = 0; w < n; ++w) {
      base[sz(w)] = dims[sz(w)];
      dims[sz(w)] += static_cast<Index>(a.block(v, w).size());
    }
    p.base.push_back(std::move(base));
  }
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g) {
    int s = a.generator_source(g), t = a.generator_target(g), gb = a.generator_basis(g);
    Mat<F> m = zeros<F>(dims[sz(t)], dims[sz(s)]);
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
      int v = p.tops[k];
      for (int b : a.block(v, s)) {
        const Element<F>* prod = a.product(b, gb);
        if (!prod) continue;
        for (const auto& term : *prod)
          m(p.base[k][sz(t)] + a.block_position(term.index), p.base[k][sz(s)] + a.block_position(b)) += term.coeff;
      }
    }
    gens.push_back(std::move(m));
  }
  p.module = Module<F>(a, std::move(dims), std::move(gens));
  return p;
}

template <class F>
Morphism<F> map_from_free(const FreeModule<F>& p, const Module<F>& target, const std::vector<Vec<F>>& images) {
  const Algebra<F>& a = target.algebra();
  const int n = a.num_vertices();
  std::vector<Mat<F>> blocks;
  for (int w = 0; w < n; ++w) blocks.push_back(zeros<F>(target.dim_at(w), p.module.dim_at(w)));
  for (std::size_t k = 0; k < p.tops.size(); ++k) {
    int v = p.tops[k];
    const Vec<F>& x = images[k];
    if (is_zero_matrix<F>(x)) continue;
    for (int w = 0; w < n; ++w)
      for (int b : a.block(v, w)) blocks[sz(w)].col(p.base[k][sz(w)] + a.block_position(b)) = multiply<F>(target.block_action(b), x);
  }
  return Morphism<F>(p.module, target, std::move(blocks));
}

template <class F>
Vec<F> generator_image(const FreeModule<F>& p, const Morphism<F>& f, int k) {
  int v = p.tops[sz(k)];
  return f.block(v).col(p.base[sz(k)][sz(v)] + p.module.algebra().block_position(v));
}

template <class F>
Module<F> projective_module(const Algebra<F>& a, int v) {
  return free_module<F>(a, {v}).module;
}

template <class F>
Module<F> dual_module(const Module<F>& m) {
  Algebra<F> op = m.algebra().opposite();
  std::vector<Mat<F>> gens;
  for (int g = 0; g < op.num_generators(); ++g) gens.push_back(m.generator(g).transpose());
  return Module<F>(op, m.dimension_vector(), std::move(gens));
}

template <class F>
Morphism<F> dual_morphism(const Morphism<F>& f, const Module<F>& dual_source, const Module<F>& dual_target) {
  // D(f): D(target) -> D(source).
  std::vector<Mat<F>> b;
  for (const auto& m : f.blocks()) b.push_back(m.transpose());
  return Morphism<F>(dual_target, dual_source, std::move(b));
}

template <class F>
Module<F> injective_module(const Algebra<F>& a, int v) {
  return dual_module<F>(projective_module<F>(a.opposite(), v));
}

template <class F>
Module<F> simple_module(const Algebra<F>& a, int v) {
  std::vector<Index> dims(sz(a.num_vertices()), 0);
  dims[sz(v)] = 1;
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g)
    gens.push_back(zeros<F>(dims[sz(a.generator_target(g))], dims[sz(a.generator_source(g))]));
  return Module<F>(a, std::move(dims), std::move(gens));
}

template <class F>
Module<F> regular_module(const Algebra<F>& a) {
  std::vector<int> tops;
  for (int v = 0; v < a.num_vertices(); ++v) tops.push_back(v);
  return free_module<F>(a, tops).module;
}

template <class F>
Module<F> coregular_module(const Algebra<F>& a) {
  return dual_module<F>(regular_module<F>(a.opposite()));
}

template <class F>
DirectSum<F> direct_sum(const std::vector<Module<F>>& parts, const Algebra<F>& a) {
  const int n = a.num_vertices();
  DirectSum<F> out;
  std::vector<Index> dims(sz(n), 0);
  for (const auto& p : parts)
    for (int v = 0; v < n; ++v) dims[sz(v)] += p.dim_at(v);
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g) {
    std::vector<Mat<F>> blocks;
    for (const auto& p : parts) blocks.push_back(p.generator(g));
    gens.push_back(block_diagonal<F>(blocks));
  }
  out.module = Module<F>(a, dims, std::move(gens));
  std::vector<Index> off(sz(n), 0);
  for (const auto& p : parts) {
    std::vector<Mat<F>> inj, proj;
    for (int v = 0; v < n; ++v) {
      Mat<F> i = zeros<F>(dims[sz(v)], p.dim_at(v));
      i.block(off[sz(v)], 0, p.dim_at(v), p.dim_at(v)) = identity<F>(p.dim_at(v));
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[sz(v)] += p.dim_at(v);
    }
    out.injections.emplace_back(p, out.module, std::move(inj));
    out.projections.emplace_back(out.module, p, std::move(proj));
  }
  return out;
}

template <class F>
SubModule<F> submodule(const Module<F>& m, const std::vector<Mat<F>>& bases) {
  const Algebra<F>& a = m.algebra();
  std::vector<Index> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g) {
    int s = a.generator_source(g), t = a.generator_target(g);
    Mat<F> img = multiply<F>(m.generator(g), bases[sz(s)]);
    auto coords = solve<F>(bases[sz(t)], img);
    if (!coords) throw std::logic_error("submodule: subspace not closed under " + a.generator_label(g));
    gens.push_back(std::move(*coords));
  }
  SubModule<F> out;
  out.module = Module<F>(a, std::move(dims), std::move(gens));
  out.inclusion = Morphism<F>(out.module, m, bases);
  return out;
}

template <class F>
QuotientModule<F> quotient_module(const Module<F>& m, const std::vector<Mat<F>>& sub) {
  const Algebra<F>& a = m.algebra();
  const int n = a.num_vertices();
  std::vector<Quotient<F>> q;
  std::vector<Index> dims;
  for (int v = 0; v < n; ++v) {
    q.push_back(quotient_by<F>(sub[sz(v)], m.dim_at(v)));
    dims.push_back(q.back().dim());
  }
  std::vector<Mat<F>> gens;
  for (int g = 0; g < a.num_generators(); ++g) {
    int s = a.generator_source(g), t = a.generator_target(g);
    gens.push_back(multiply<F>(multiply<F>(q[sz(t)].projection, m.generator(g)), q[sz(s)].section));
  }
  QuotientModule<F> out;
  out.module = Module<F>(a, std::move(dims), std::move(gens));
  std::vector<Mat<F>> proj;
  for (int v = 0; v < n; ++v) proj.push_back(q[sz(v)].projection);
  out.projection = Morphism<F>(m, out.module, std::move(proj));
  return out;
}

template <class F>
SubModule<F> kernel(const Morphism<F>& f) {
  std::vector<Mat<F>> bases;
  for (const auto& b : f.blocks()) bases.push_back(kernel_basis<F>(b));
  return submodule<F>(f.source(), bases);
}

template <class F>
QuotientModule<F> cokernel(const Morphism<F>& f) {
  return quotient_module<F>(f.target(), f.blocks());
}

template <class F>
ImageFactorization<F> image(const Morphism<F>& f) {
  std::vector<Mat<F>> bases;
  for (const auto& b : f.blocks()) bases.push_back(column_basis<F>(b));
  SubModule<F> sub = submodule<F>(f.target(), bases);
  std::vector<Mat<F>> onto;
  for (std::size_t v = 0; v < bases.size(); ++v) onto.push_back(*solve<F>(bases[v], f.blocks()[v]));
  return {sub.module, Morphism<F>(f.source(), sub.module, std::move(onto)), sub.inclusion};
}

template <class F>
std::vector<Mat<F>> radical_subspaces(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  const int n = a.num_vertices();
  std::vector<std::vector<Mat<F>>> parts(sz(n));
  for (int g = 0; g < a.num_generators(); ++g) parts[sz(a.generator_target(g))].push_back(m.generator(g));
  std::vector<Mat<F>> out;
  for (int v = 0; v < n; ++v) {
    if (parts[sz(v)].empty()) {
      out.push_back(Mat<F>(m.dim_at(v), 0));
    } else {
      out.push_back(column_basis<F>(hstack<F>(parts[sz(v)], m.dim_at(v))));
    }
  }
  return out;
}

template <class F>
std::vector<Mat<F>> socle_subspaces(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  const int n = a.num_vertices();
  std::vector<std::vector<Mat<F>>> parts(sz(n));
  for (int g = 0; g < a.num_generators(); ++g) parts[sz(a.generator_source(g))].push_back(m.generator(g));
  std::vector<Mat<F>> out;
  for (int v = 0; v < n; ++v) {
    if (parts[sz(v)].empty()) {
      out.push_back(identity<F>(m.dim_at(v)));
    } else {
      out.push_back(kernel_basis<F>(vstack<F>(parts[sz(v)], m.dim_at(v))));
    }
  }
  return out;
}

template <class F>
std::vector<Index> top_dims(const Module<F>& m) {
  auto r = radical_subspaces<F>(m);
  std::vector<Index> out;
  for (std::size_t v = 0; v < r.size(); ++v) out.push_back(m.dim_at(static_cast<int>(v)) - r[v].cols());
  return out;
}

template <class F>
std::vector<Index> socle_dims(const Module<F>& m) {
  auto s = socle_subspaces<F>(m);
  std::vector<Index> out;
  for (const auto& b : s) out.push_back(b.cols());
  return out;
}

namespace {

// Unknowns: phi_v (n_v x m_v) stored column-major, vertex after vertex.
// One sparse equation per entry of ng * phi_s - phi_t * mg, fed straight
// into the echelon form.
template <class F>
SparseEchelon<F> hom_system(const Module<F>& m, const Module<F>& n, std::vector<Index>& var_off) {
  const Algebra<F>& a = m.algebra();
  if (!a.same_as(n.algebra())) throw std::invalid_argument("hom_space: owner mismatch");
  const int nv = a.num_vertices();
  var_off.assign(sz(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) var_off[sz(v) + 1] = var_off[sz(v)] + n.dim_at(v) * m.dim_at(v);
  SparseEchelon<F> sys(var_off.back());
  for (int g = 0; g < a.num_generators(); ++g) {
    int s = a.generator_source(g), t = a.generator_target(g);
    const Mat<F>& ng = n.generator(g);  // n_t x n_s
    const Mat<F>& mg = m.generator(g);  // m_t x m_s
    const Index nt = n.dim_at(t), ns = n.dim_at(s), mt = m.dim_at(t), ms = m.dim_at(s);
    for (Index i = 0; i < nt; ++i)
      for (Index j = 0; j < ms; ++j) {
        SparseRow<F> row;
        for (Index k = 0; k < ns; ++k)
          if (!is_zero(ng(i, k))) row.push_back({var_off[sz(s)] + k + j * ns, ng(i, k)});
        for (Index k = 0; k < mt; ++k)
          if (!is_zero(mg(k, j))) row.push_back({var_off[sz(t)] + i + k * nt, -mg(k, j)});
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        // s == t (loops) can put two terms on one unknown
        SparseRow<F> merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
            if (is_zero(merged.back().second)) merged.pop_back();
          } else {
            merged.push_back(std::move(e));
          }
        }
        sys.add(std::move(merged));
      }
  }
  return sys;
}

}  // namespace

template <class F>
std::vector<Morphism<F>> hom_space(const Module<F>& m, const Module<F>& n) {
  std::vector<Index> off;
  SparseEchelon<F> sys = hom_system<F>(m, n, off);
  Mat<F> ker = sys.kernel();
  const int nv = m.algebra().num_vertices();
  std::vector<Morphism<F>> out;
  for (Index c = 0; c < ker.cols(); ++c) {
    std::vector<Mat<F>> blocks;
    for (int v = 0; v < nv; ++v) {
      Mat<F> b(n.dim_at(v), m.dim_at(v));
      for (Index j = 0; j < m.dim_at(v); ++j)
        for (Index i = 0; i < n.dim_at(v); ++i) b(i, j) = ker(off[sz(v)] + i + j * n.dim_at(v), c);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

template <class F>
Index hom_dim(const Module<F>& m, const Module<F>& n) {
  std::vector<Index> off;
  SparseEchelon<F> sys = hom_system<F>(m, n, off);
  return sys.cols() - sys.rank();
}

template <class F>
HomCoordinates<F>::HomCoordinates(const std::vector<Morphism<F>>& basis) {
  if (basis.empty()) return;
  const auto& blocks0 = basis[0].blocks();
  std::vector<Entry> all;
  for (std::size_t v = 0; v < blocks0.size(); ++v)
    for (Index j = 0; j < blocks0[v].cols(); ++j)
      for (Index i = 0; i < blocks0[v].rows(); ++i) all.push_back({static_cast<int>(v), i, j});
  Mat<F> flat(static_cast<Index>(basis.size()), static_cast<Index>(all.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t e = 0; e < all.size(); ++e)
      flat(static_cast<Index>(k), static_cast<Index>(e)) = basis[k].blocks()[sz(all[e].vertex)](all[e].row, all[e].col);
  Echelon<F> ech = rref<F>(flat);
  if (ech.rank() != static_cast<Index>(basis.size())) throw std::logic_error("HomCoordinates: dependent basis");
  Mat<F> sub(ech.rank(), ech.rank());
  for (Index i = 0; i < ech.rank(); ++i) {
    entries_.push_back(all[sz(ech.pivots[sz(i)])]);
    sub.col(i) = flat.col(ech.pivots[sz(i)]);
  }
  // coords^T * sub = values^T  =>  coords = sub^-T values.
  inv_ = inverse<F>(Mat<F>(sub.transpose())).value();
}

template <class F>
Vec<F> HomCoordinates<F>::operator()(const Morphism<F>& f) const {
  Vec<F> vals(static_cast<Index>(entries_.size()));
  for (std::size_t e = 0; e < entries_.size(); ++e) vals(static_cast<Index>(e)) = f.blocks()[sz(entries_[e].vertex)](entries_[e].row, entries_[e].col);
  return multiply<F>(inv_, vals);
}

template <class F>
Module<F> convert_module(const Module<Rational>& m, const Algebra<F>& a) {
  std::vector<Mat<F>> gens;
  for (const auto& g : m.generators()) gens.push_back(convert_matrix<F>(g));
  return Module<F>(a, m.dimension_vector(), std::move(gens));
}

#define TRIREP_INSTANTIATE(F)                                                                          \
  template class Module<F>;                                                                            \
  template class Morphism<F>;                                                                          \
  template class HomCoordinates<F>;                                                                    \
  template struct FreeModule<F>;                                                                       \
  template Morphism<F> compose<F>(const Morphism<F>&, const Morphism<F>&);                             \
  template Morphism<F> linear_combination<F>(const std::vector<Morphism<F>>&, const Vec<F>&,          \
                                             const Module<F>&, const Module<F>&);                      \
  template FreeModule<F> free_module<F>(const Algebra<F>&, std::vector<int>);                          \
  template Morphism<F> map_from_free<F>(const FreeModule<F>&, const Module<F>&, const std::vector<Vec<F>>&); \
  template Vec<F> generator_image<F>(const FreeModule<F>&, const Morphism<F>&, int);                  \
  template Module<F> projective_module<F>(const Algebra<F>&, int);                                     \
  template Module<F> injective_module<F>(const Algebra<F>&, int);                                      \
  template Module<F> simple_module<F>(const Algebra<F>&, int);                                         \
  template Module<F> regular_module<F>(const Algebra<F>&);                                             \
  template Module<F> coregular_module<F>(const Algebra<F>&);                                           \
  template Module<F> dual_module<F>(const Module<F>&);                                                 \
  template Morphism<F> dual_morphism<F>(const Morphism<F>&, const Module<F>&, const Module<F>&);       \
  template DirectSum<F> direct_sum<F>(const std::vector<Module<F>>&, const Algebra<F>&);               \
  template SubModule<F> submodule<F>(const Module<F>&, const std::vector<Mat<F>>&);                    \
  template QuotientModule<F> quotient_module<F>(const Module<F>&, const std::vector<Mat<F>>&);         \
  template SubModule<F> kernel<F>(const Morphism<F>&);                                                 \
  template QuotientModule<F> cokernel<F>(const Morphism<F>&);                                          \
  template ImageFactorization<F> image<F>(const Morphism<F>&);                                         \
  template std::vector<Mat<F>> radical_subspaces<F>(const Module<F>&);                                 \
  template std::vector<Mat<F>> socle_subspaces<F>(const Module<F>&);                                   \
  template std::vector<Index> top_dims<F>(const Module<F>&);                                           \
  template std::vector<Index> socle_dims<F>(const Module<F>&);                                         \
  template std::vector<Morphism<F>> hom_space<F>(const Module<F>&, const Module<F>&);                  \
  template Index hom_dim<F>(const Module<F>&, const Module<F>&);                                       \
  template Module<F> convert_module<F>(const Module<Rational>&, const Algebra<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
