#pragma once

#include <string>
#include <vector>

#include "trirep/homological.hpp"

namespace trirep {

// L-R bimodule on a basis of vectors homogeneous on both sides:
// e_{left_vertex[k]} m_k e_{right_vertex[k]} = m_k. Generator actions are
// total matrices on column coordinates: left_gen[g] is m -> g m and
// right_gen[h] is m -> m h.
template <class F>
struct Bimodule {
  Algebra<F> left, right;
  std::vector<int> left_vertex, right_vertex;
  std::vector<Mat<F>> left_gen, right_gen;

  Index dim() const { return static_cast<Index>(left_vertex.size()); }
  Mat<F> left_action(int a) const;
  Mat<F> right_action(int b) const;
  // Basis indices of e_v M (left) grouped by right vertex, and of M e_w.
  std::vector<Index> left_indices(int v) const;
  std::vector<Index> right_indices(int w) const;
  // e_v M as a right module over `right`.
  Module<F> restrict_left(int v) const;
  Module<F> as_right_module() const;
  // Left action of a basis element a in e_u L e_w as a map e_w M -> e_u M.
  Morphism<F> left_map(int a) const;
  bool check() const;
};

template <class F>
Bimodule<F> regular_bimodule(const Algebra<F>& a);

// D(M) for an L-R bimodule M is an R-L bimodule.
template <class F>
Bimodule<F> dual_bimodule(const Bimodule<F>& m);

// Basic algebra E of pairwise non-isomorphic indecomposables M_0..M_{n-1}:
// e_i E e_j = Hom(M_j, M_i), product = composition. Right E-modules are
// contravariant in the objects, as Hom(M, X) is.
template <class F>
struct CategoryAlgebra {
  std::vector<Module<F>> objects;
  std::vector<std::string> names;
  Algebra<F> algebra;
  std::vector<Morphism<F>> realization;  // basis element in e_s E e_t as M_t -> M_s
  std::vector<Element<F>> old_in_new;
  std::vector<std::vector<int>> old_block;  // old basis indices of block (s, t)
  std::vector<HomCoordinates<F>> old_coords;

  // f: objects[j] -> objects[i] as an element of e_i E e_j.
  Element<F> element_of(int i, int j, const Morphism<F>& f) const;
  // The objects as an E-A bimodule (left E, right A).
  Bimodule<F> bimodule() const;
};

template <class F>
CategoryAlgebra<F> category_algebra(const std::vector<Module<F>>& objects, const std::vector<std::string>& names,
                                    const std::string& name);

// Hom_A(T, X) for a B-A bimodule T, with (f b)(t) = f(b t). bases[v] is the
// Hom(e_v T, X) basis behind the coordinates at vertex v.
template <class F>
struct HomFunctorValue {
  Module<F> module;
  std::vector<std::vector<Morphism<F>>> bases;
  std::vector<HomCoordinates<F>> coords;
};

template <class F>
HomFunctorValue<F> hom_functor(const Bimodule<F>& t, const Module<F>& x);

// Hom(T, phi) for phi: X -> X'.
template <class F>
Morphism<F> hom_functor_map(const HomFunctorValue<F>& from, const HomFunctorValue<F>& to, const Morphism<F>& phi);

// Y (x)_B T over A, computed from a minimal presentation of Y.
template <class F>
Module<F> tensor_functor(const Module<F>& y, const Bimodule<F>& t);

template <class F>
Index tor1_dim(const Module<F>& y, const Bimodule<F>& t);

}  // namespace trirep
