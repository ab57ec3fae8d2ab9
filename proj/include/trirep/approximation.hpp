#pragma once

#include <vector>

#include "trirep/constructions.hpp"

namespace trirep {

// Right approximation: map from a sum of bundle objects onto x.
// summands[i] is the bundle index of the i-th domain summand; the domain is
// their direct sum in that order.
template <class F>
struct Approximation {
  Morphism<F> map;
  std::vector<int> summands;
};

// Domain = sum of M_i^{dim Hom(M_i, x)}, components a Hom basis.
template <class F>
Approximation<F> right_approximation(const Subcategory<F>& m, const Module<F>& x);

// Greedy summand deletion from right_approximation, then verified minimal.
template <class F>
Approximation<F> minimal_right_approximation(const Subcategory<F>& m, const Module<F>& x);

// Minimal left approximation x -> M_0, obtained by duality.
template <class F>
Approximation<F> minimal_left_approximation(const Subcategory<F>& m, const Module<F>& x);

// Hom(M_j, f) is onto for every object M_j.
template <class F>
bool is_right_approximation(const Subcategory<F>& m, const Morphism<F>& f);

// No nonzero summand of the domain lies in ker f: the endomorphisms g of
// the domain with f g = 0 all lie in the radical of End(domain).
template <class F>
bool is_right_minimal(const Morphism<F>& f);

// Rank of Hom(u, f): Hom(u, X) -> Hom(u, Y) for f: X -> Y.
template <class F>
Index induced_hom_rank(const Module<F>& u, const Morphism<F>& f);

template <class F>
Subcategory<F> dual_subcategory(const Subcategory<F>& m);

}  // namespace trirep
