#include "trirep/approximation.hpp"

#include <map>
#include <set>

#include "trirep/decomp.hpp"

namespace trirep {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

template <class F>
Vec<F> flat(const Morphism<F>& f) {
  Index n = 0;
  for (const auto& b : f.blocks()) n += b.size();
  Vec<F> v(n);
  Index k = 0;
  for (const auto& b : f.blocks())
    for (Index c = 0; c < b.cols(); ++c)
      for (Index r = 0; r < b.rows(); ++r) v(k++) = b(r, c);
  return v;
}

template <class F>
Index span_rank(const std::vector<Vec<F>>& vs) {
  if (vs.empty()) return 0;
  Mat<F> m(vs[0].size(), static_cast<Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Index>(i)) = vs[i];
  return rank<F>(m);
}

// Sum of the components over the direct sum of their sources.
template <class F>
Approximation<F> assemble(const Subcategory<F>& m, const Module<F>& x, const std::vector<int>& objs,
                          const std::vector<Morphism<F>>& comps) {
  Approximation<F> out;
  out.summands = objs;
  if (objs.empty()) {
    Module<F> zero = Module<F>::zero(x.algebra());
    out.map = Morphism<F>::zero(zero, x);
    return out;
  }
  std::vector<Module<F>> parts;
  for (int i : objs) parts.push_back(m.objects[sz(i)]);
  DirectSum<F> d = direct_sum<F>(parts, x.algebra());
  Morphism<F> f = Morphism<F>::zero(d.module, x);
  for (std::size_t c = 0; c < comps.size(); ++c) f = f + compose<F>(comps[c], d.projections[c]);
  out.map = f;
  return out;
}

// A nonzero summand isomorphic to some candidate lies in ker f.
template <class F>
bool kernel_has_summand(const Morphism<F>& f, const std::vector<Module<F>>& candidates) {
  SubModule<F> ker = kernel<F>(f);
  if (ker.module.is_zero()) return false;
  for (const auto& c : candidates) {
    auto into = hom_space<F>(c, ker.module);
    if (into.empty()) continue;
    auto back = hom_space<F>(f.source(), c);
    for (const auto& a : into) {
      Morphism<F> a_in = compose<F>(ker.inclusion, a);
      for (const auto& b : back)
        if (compose<F>(b, a_in).is_iso()) return true;
    }
  }
  return false;
}

}  // namespace

template <class F>
Index induced_hom_rank(const Module<F>& u, const Morphism<F>& f) {
  std::vector<Vec<F>> vs;
  for (const auto& h : hom_space<F>(u, f.source())) vs.push_back(flat<F>(compose<F>(f, h)));
  return span_rank<F>(vs);
}

template <class F>
bool is_right_approximation(const Subcategory<F>& m, const Morphism<F>& f) {
  for (const auto& u : m.objects)
    if (induced_hom_rank<F>(u, f) != hom_dim<F>(u, f.target())) return false;
  return true;
}

template <class F>
bool is_right_minimal(const Morphism<F>& f) {
  if (f.source().is_zero()) return true;
  Decomposition<F> d = decompose<F>(f.source());
  std::vector<Module<F>> reps;
  for (const auto& c : d.classes) reps.push_back(d.pieces[sz(c.representative)].module);
  return !kernel_has_summand<F>(f, reps);
}

template <class F>
Approximation<F> right_approximation(const Subcategory<F>& m, const Module<F>& x) {
  std::vector<int> objs;
  std::vector<Morphism<F>> comps;
  for (int i = 0; i < m.size(); ++i)
    for (auto& h : hom_space<F>(m.objects[sz(i)], x)) {
      objs.push_back(i);
      comps.push_back(std::move(h));
    }
  return assemble<F>(m, x, objs, comps);
}

template <class F>
Approximation<F> minimal_right_approximation(const Subcategory<F>& m, const Module<F>& x) {
  const int n = m.size();
  std::vector<int> objs;
  std::vector<Morphism<F>> comps;
  for (int i = 0; i < n; ++i)
    for (auto& h : hom_space<F>(m.objects[sz(i)], x)) {
      objs.push_back(i);
      comps.push_back(std::move(h));
    }
  // images[j][c]: f o (Hom(M_j, copy c)) flattened
  std::vector<std::vector<std::vector<Vec<F>>>> images(sz(n), std::vector<std::vector<Vec<F>>>(comps.size()));
  std::vector<Index> target_dim(sz(n));
  std::map<std::pair<int, int>, std::vector<Morphism<F>>> homs;
  for (int j = 0; j < n; ++j) {
    target_dim[sz(j)] = hom_dim<F>(m.objects[sz(j)], x);
    if (target_dim[sz(j)] == 0) continue;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto key = std::make_pair(j, objs[c]);
      auto it = homs.find(key);
      if (it == homs.end()) it = homs.emplace(key, hom_space<F>(m.objects[sz(j)], m.objects[sz(objs[c])])).first;
      for (const auto& g : it->second) images[sz(j)][c].push_back(flat<F>(compose<F>(comps[c], g)));
    }
  }
  std::vector<char> keep(comps.size(), 1);
  auto onto = [&]() {
    for (int j = 0; j < n; ++j) {
      if (target_dim[sz(j)] == 0) continue;
      std::vector<Vec<F>> vs;
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (keep[c]) vs.insert(vs.end(), images[sz(j)][c].begin(), images[sz(j)][c].end());
      if (span_rank<F>(vs) != target_dim[sz(j)]) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < comps.size(); ++c) {
    keep[c] = 0;
    if (!onto()) keep[c] = 1;
  }
  std::vector<int> kept_objs;
  std::vector<Morphism<F>> kept;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (keep[c]) {
      kept_objs.push_back(objs[c]);
      kept.push_back(comps[c]);
    }
  Approximation<F> out = assemble<F>(m, x, kept_objs, kept);
  std::vector<Module<F>> reps;
  for (int i : std::set<int>(kept_objs.begin(), kept_objs.end())) reps.push_back(m.objects[sz(i)]);
  if (kernel_has_summand<F>(out.map, reps))
    throw std::logic_error("minimal_right_approximation: greedy result is not right minimal");
  return out;
}

template <class F>
Subcategory<F> dual_subcategory(const Subcategory<F>& m) {
  Subcategory<F> d(m.owner.opposite());
  for (int i = 0; i < m.size(); ++i) {
    d.objects.push_back(dual_module<F>(m.objects[sz(i)]));
    d.ids.push_back("D" + m.ids[sz(i)]);
  }
  return d;
}

template <class F>
Approximation<F> minimal_left_approximation(const Subcategory<F>& m, const Module<F>& x) {
  Approximation<F> r = minimal_right_approximation<F>(dual_subcategory<F>(m), dual_module<F>(x));
  std::vector<Mat<F>> blocks;
  for (const auto& b : r.map.blocks()) blocks.push_back(b.transpose());
  Approximation<F> out;
  out.summands = r.summands;
  out.map = Morphism<F>(x, dual_module<F>(r.map.source()), std::move(blocks));
  return out;
}

#define TRIREP_INSTANTIATE(F)                                                                         \
  template struct Approximation<F>;                                                                   \
  template Approximation<F> right_approximation<F>(const Subcategory<F>&, const Module<F>&);          \
  template Approximation<F> minimal_right_approximation<F>(const Subcategory<F>&, const Module<F>&);  \
  template Approximation<F> minimal_left_approximation<F>(const Subcategory<F>&, const Module<F>&);   \
  template bool is_right_approximation<F>(const Subcategory<F>&, const Morphism<F>&);                \
  template bool is_right_minimal<F>(const Morphism<F>&);                                              \
  template Index induced_hom_rank<F>(const Module<F>&, const Morphism<F>&);                          \
  template Subcategory<F> dual_subcategory<F>(const Subcategory<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
