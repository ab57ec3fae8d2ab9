#include "trirep/homological.hpp"

#include <algorithm>

namespace trirep {

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }
}  // namespace

template <class F>
int ProjectiveResolution<F>::length() const {
  int len = -1;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!terms[i].tops.empty()) len = static_cast<int>(i);
  return len;
}

template <class F>
ProjectiveCover<F> projective_cover(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  const int n = a.num_vertices();
  auto rad = radical_subspaces<F>(m);
  std::vector<int> tops;
  std::vector<Vec<F>> images;
  for (int v = 0; v < n; ++v) {
    Quotient<F> q = quotient_by<F>(rad[sz(v)], m.dim_at(v));
    for (Index c = 0; c < q.dim(); ++c) {
      tops.push_back(v);
      images.push_back(q.section.col(c));
    }
  }
  ProjectiveCover<F> out;
  out.cover = free_module<F>(a, tops);
  out.epi = map_from_free<F>(out.cover, m, images);
  return out;
}

template <class F>
Presentation<F> minimal_projective_presentation(const Module<F>& m) {
  Presentation<F> out;
  ProjectiveCover<F> c0 = projective_cover<F>(m);
  SubModule<F> k = kernel<F>(c0.epi);
  ProjectiveCover<F> c1 = projective_cover<F>(k.module);
  out.p0 = std::move(c0.cover);
  out.eps = std::move(c0.epi);
  out.p1 = std::move(c1.cover);
  out.d1 = compose<F>(k.inclusion, c1.epi);
  return out;
}

template <class F>
ProjectiveResolution<F> minimal_projective_resolution(const Module<F>& m, int max_terms) {
  const bool bounded = max_terms >= 0;
  const int limit = bounded ? max_terms : m.algebra().dim() + 2;
  ProjectiveResolution<F> out;
  if (limit == 0) return out;
  ProjectiveCover<F> c = projective_cover<F>(m);
  out.terms.push_back(c.cover);
  out.augmentation = c.epi;
  Morphism<F> prev = c.epi;
  while (true) {
    SubModule<F> k = kernel<F>(prev);
    if (k.module.is_zero()) {
      out.complete = true;
      return out;
    }
    if (static_cast<int>(out.terms.size()) >= limit) {
      if (bounded) return out;
      throw ResolutionTooLong("projective resolution exceeds the algebra-dimension safety bound");
    }
    ProjectiveCover<F> ck = projective_cover<F>(k.module);
    Morphism<F> d = compose<F>(k.inclusion, ck.epi);
    out.terms.push_back(ck.cover);
    out.differentials.push_back(d);
    prev = d;
  }
}

template <class F>
Morphism<F> lift_to_free(const FreeModule<F>& p, const Morphism<F>& h, const Morphism<F>& epi) {
  std::vector<Vec<F>> images;
  for (std::size_t k = 0; k < p.tops.size(); ++k) {
    const int v = p.tops[k];
    Vec<F> y = generator_image<F>(p, h, static_cast<int>(k));
    auto x = solve<F>(epi.block(v), Mat<F>(y));
    if (!x) throw std::invalid_argument("lift_to_free: map does not factor");
    images.push_back(x->col(0));
  }
  return map_from_free<F>(p, epi.source(), images);
}

template <class F>
Morphism<F> factor_through_epi(const Morphism<F>& epi, const Morphism<F>& h) {
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < epi.blocks().size(); ++v) {
    auto x = solve<F>(Mat<F>(epi.blocks()[v].transpose()), Mat<F>(h.blocks()[v].transpose()));
    if (!x) throw std::invalid_argument("factor_through_epi: map does not factor");
    blocks.push_back(x->transpose());
  }
  return Morphism<F>(epi.target(), h.target(), std::move(blocks));
}

template <class F>
bool is_projective(const Module<F>& m) {
  return projective_cover<F>(m).cover.module.dim() == m.dim();
}

template <class F>
bool is_injective(const Module<F>& m) {
  return is_projective<F>(dual_module<F>(m));
}

template <class F>
int proj_dim(const Module<F>& m) {
  return minimal_projective_resolution<F>(m).length();
}

template <class F>
int inj_dim(const Module<F>& m) {
  return proj_dim<F>(dual_module<F>(m));
}

template <class F>
int global_dimension(const Algebra<F>& a) {
  int g = 0;
  for (int v = 0; v < a.num_vertices(); ++v) g = std::max(g, proj_dim<F>(simple_module<F>(a, v)));
  return g;
}

template <class F>
Index yoneda_dim(const FreeModule<F>& p, const Module<F>& x) {
  Index d = 0;
  for (int v : p.tops) d += x.dim_at(v);
  return d;
}

template <class F>
Mat<F> induced_hom_map(const FreeModule<F>& from, const FreeModule<F>& next, const Morphism<F>& d, const Module<F>& x) {
  const Algebra<F>& a = x.algebra();
  std::vector<Index> off_from, off_next;
  Index cols = 0, rows = 0;
  for (int v : from.tops) {
    off_from.push_back(cols);
    cols += x.dim_at(v);
  }
  for (int w : next.tops) {
    off_next.push_back(rows);
    rows += x.dim_at(w);
  }
  Mat<F> out = zeros<F>(rows, cols);
  std::vector<Mat<F>> act(sz(a.dim()));
  std::vector<char> have(sz(a.dim()), 0);
  for (std::size_t l = 0; l < next.tops.size(); ++l) {
    const int w = next.tops[l];
    Vec<F> y = generator_image<F>(next, d, static_cast<int>(l));
    for (std::size_t k = 0; k < from.tops.size(); ++k) {
      const int v = from.tops[k];
      for (int b : a.block(v, w)) {
        const F& c = y(from.base[k][sz(w)] + a.block_position(b));
        if (is_zero(c)) continue;
        if (!have[sz(b)]) {
          act[sz(b)] = x.block_action(b);
          have[sz(b)] = 1;
        }
        out.block(off_next[l], off_from[k], x.dim_at(w), x.dim_at(v)) += act[sz(b)] * c;
      }
    }
  }
  return out;
}

template <class F>
Morphism<F> yoneda_morphism(const FreeModule<F>& p, const Module<F>& x, const Vec<F>& coords) {
  std::vector<Vec<F>> images;
  Index off = 0;
  for (int v : p.tops) {
    images.push_back(coords.segment(off, x.dim_at(v)));
    off += x.dim_at(v);
  }
  return map_from_free<F>(p, x, images);
}

template <class F>
ExtGroup<F> ext_group(int n, const Module<F>& m, const Module<F>& x) {
  if (n < 0) throw std::invalid_argument("ext_group: negative degree");
  ExtGroup<F> out;
  out.degree = n;
  out.resolution = minimal_projective_resolution<F>(m, n + 2);
  const auto& res = out.resolution;
  if (static_cast<int>(res.terms.size()) <= n) {
    out.cocycles = Mat<F>(0, 0);
    out.coboundaries = Mat<F>(0, 0);
    out.representatives = Mat<F>(0, 0);
    return out;
  }
  const FreeModule<F>& pn = res.terms[sz(n)];
  const Index hn = yoneda_dim<F>(pn, x);
  Mat<F> z;
  if (static_cast<int>(res.terms.size()) > n + 1) {
    z = kernel_basis<F>(induced_hom_map<F>(pn, res.terms[sz(n + 1)], res.differentials[sz(n)], x));
  } else {
    z = identity<F>(hn);
  }
  Mat<F> b(hn, 0);
  if (n > 0) {
    Mat<F> prev = induced_hom_map<F>(res.terms[sz(n - 1)], pn, res.differentials[sz(n - 1)], x);
    b = column_basis<F>(prev);
  }
  out.cocycles = z;
  out.coboundaries = b;
  // Complete B to Z with columns of Z.
  Mat<F> both(hn, b.cols() + z.cols());
  both << b, z;
  std::vector<Index> extra;
  for (Index p : sparse_rows<F>(both).pivots())
    if (p >= b.cols()) extra.push_back(p - b.cols());
  out.representatives = Mat<F>(hn, static_cast<Index>(extra.size()));
  for (std::size_t i = 0; i < extra.size(); ++i) out.representatives.col(static_cast<Index>(i)) = z.col(extra[i]);
  out.dim = static_cast<Index>(extra.size());
  return out;
}

template <class F>
Index ext_dim(int n, const Module<F>& m, const Module<F>& x) {
  return ext_group<F>(n, m, x).dim;
}

#define TRIREP_INSTANTIATE(F)                                                                        \
  template struct ProjectiveResolution<F>;                                                           \
  template ProjectiveCover<F> projective_cover<F>(const Module<F>&);                                 \
  template Presentation<F> minimal_projective_presentation<F>(const Module<F>&);                     \
  template ProjectiveResolution<F> minimal_projective_resolution<F>(const Module<F>&, int);           \
  template Morphism<F> lift_to_free<F>(const FreeModule<F>&, const Morphism<F>&, const Morphism<F>&); \
  template Morphism<F> factor_through_epi<F>(const Morphism<F>&, const Morphism<F>&);                \
  template bool is_projective<F>(const Module<F>&);                                                  \
  template bool is_injective<F>(const Module<F>&);                                                   \
  template int proj_dim<F>(const Module<F>&);                                                        \
  template int inj_dim<F>(const Module<F>&);                                                         \
  template int global_dimension<F>(const Algebra<F>&);                                               \
  template Index yoneda_dim<F>(const FreeModule<F>&, const Module<F>&);                              \
  template Mat<F> induced_hom_map<F>(const FreeModule<F>&, const FreeModule<F>&, const Morphism<F>&, \
                                     const Module<F>&);                                              \
  template Morphism<F> yoneda_morphism<F>(const FreeModule<F>&, const Module<F>&, const Vec<F>&);   \
  template ExtGroup<F> ext_group<F>(int, const Module<F>&, const Module<F>&);                        \
  template Index ext_dim<F>(int, const Module<F>&, const Module<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
