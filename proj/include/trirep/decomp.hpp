#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "trirep/module.hpp"

namespace trirep {

// End(X)/rad End(X) of an indecomposable is not the ground field, so the
// results would depend on the field not being algebraically closed.
class SchurViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// End(M) on a Hom basis. products[i][j] holds the coordinates of
// basis[i] ∘ basis[j].
template <class F>
struct EndomorphismAlgebra {
  Module<F> module;
  std::vector<Morphism<F>> basis;
  HomCoordinates<F> coords;
  std::vector<std::vector<Vec<F>>> products;

  Index dim() const { return static_cast<Index>(basis.size()); }
  Vec<F> one() const { return coords(Morphism<F>::identity(module)); }
  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const;
  Morphism<F> realize(const Vec<F>& x) const;
  std::vector<Mat<F>> left_multiplications() const;
};

template <class F>
EndomorphismAlgebra<F> endomorphism_algebra(const Module<F>& m);

// Jacobson radical via the trace form tr(L_x L_y) (Dickson); columns span
// the radical in the coordinates of the given left multiplications. Asserts
// that the quotient has zero radical.
template <class F>
Mat<F> radical_basis(const std::vector<Mat<F>>& left_mult, const Vec<F>& one);

template <class F>
Mat<F> radical_of_algebra(const Algebra<F>& a);
template <class F>
Mat<F> radical_of_algebra(const EndomorphismAlgebra<F>& e);

template <class F>
struct Summand {
  Module<F> module;
  Morphism<F> inclusion;
  Morphism<F> projection;
  Morphism<F> witness() const { return compose<F>(inclusion, projection); }
};

template <class F>
struct SummandClass {
  int representative = 0;        // index into pieces
  std::vector<int> members;      // all pieces isomorphic to it
  int multiplicity() const { return static_cast<int>(members.size()); }
};

template <class F>
struct Decomposition {
  Module<F> module;
  std::vector<Summand<F>> pieces;
  std::vector<SummandClass<F>> classes;
  // Idempotents sum to the identity and are pairwise orthogonal.
  bool verify() const;
};

template <class F>
Decomposition<F> decompose(const Module<F>& m);

template <class F>
bool is_indecomposable(const Module<F>& m);

// Explicit isomorphism between two indecomposables, if any.
template <class F>
std::optional<Morphism<F>> indecomposable_iso(const Module<F>& x, const Module<F>& y);

template <class F>
std::optional<Morphism<F>> iso_test(const Module<F>& m, const Module<F>& n);

// Cheap invariants that every isomorphism preserves.
template <class F>
bool same_invariants(const Module<F>& m, const Module<F>& n);

}  // namespace trirep
