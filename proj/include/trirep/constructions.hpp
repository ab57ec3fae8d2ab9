#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirep/artheory.hpp"
#include "trirep/bimodule.hpp"

namespace trirep {

// [[B, 0], [M, A]] for an A-B bimodule M. Vertices: those of B (labels
// primed), then those of A. Old basis: B, then M, then A.
template <class F>
struct TriangularAlgebra {
  Algebra<F> algebra;
  Algebra<F> x_side;  // A
  Algebra<F> y_side;  // B
  Bimodule<F> bimodule;
  std::vector<Element<F>> new_in_old, old_in_new;

  int y_vertex(int j) const { return j; }
  int x_vertex(int i) const { return y_side.num_vertices() + i; }
  bool is_x_vertex(int v) const { return v >= y_side.num_vertices(); }
  int y_old(int b) const { return b; }
  int m_old(int k) const { return y_side.dim() + k; }
  int x_old(int a) const { return y_side.dim() + static_cast<int>(bimodule.dim()) + a; }
  // M = A as the regular bimodule, so triples are maps X -> Y.
  bool is_t2() const;
};

template <class F>
TriangularAlgebra<F> triangular_matrix_algebra(const Algebra<F>& b, const Algebra<F>& a, const Bimodule<F>& m,
                                               const std::string& name);
template <class F>
TriangularAlgebra<F> t2_algebra(const Algebra<F>& a);
template <class F>
TriangularAlgebra<F> duplicated_algebra(const Algebra<F>& a);

// (X, Y, f): X over A, Y over B, f: X (x)_A M -> Y. phi[k] is the map
// X e_i -> Y e_j, x -> f(x (x) m_k), for the bimodule basis vector m_k in e_i M e_j.
template <class F>
struct TripleModule {
  Module<F> x, y;
  std::vector<Mat<F>> phi;
};

// f balanced over A and B-linear.
template <class F>
bool is_valid_triple(const TriangularAlgebra<F>& t, const TripleModule<F>& m);
template <class F>
Module<F> flatten(const TriangularAlgebra<F>& t, const TripleModule<F>& m);
template <class F>
TripleModule<F> unflatten(const TriangularAlgebra<F>& t, const Module<F>& m);
// For T2(A): the triple of an A-map f: X -> Y.
template <class F>
TripleModule<F> triple_from_map(const TriangularAlgebra<F>& t, const Morphism<F>& f);
// For T2(A): the A-map X -> Y behind a triple.
template <class F>
Morphism<F> triple_map(const TriangularAlgebra<F>& t, const TripleModule<F>& m);
// (X, Q (x)_A M, f (x) M) for an A-map f: X -> Q with Q projective.
template <class F>
TripleModule<F> induced_triple(const TriangularAlgebra<F>& t, const Morphism<F>& f);
// X and Y with f = 0.
template <class F>
TripleModule<F> split_triple(const TriangularAlgebra<F>& t, const Module<F>& x, const Module<F>& y);

// Pairwise non-isomorphic indecomposables.
template <class F>
struct Subcategory {
  Algebra<F> owner;
  std::vector<Module<F>> objects;
  std::vector<std::string> ids;

  explicit Subcategory(Algebra<F> a = {}) : owner(std::move(a)) {}
  int size() const { return static_cast<int>(objects.size()); }
  std::optional<int> find(const Module<F>& m) const;
  bool contains(const Module<F>& m) const { return find(m).has_value(); }
  // m must be indecomposable; returns the index of its class.
  int add(const Module<F>& m, const std::string& id);
  // Adds every indecomposable summand, ids prefix.0, prefix.1, ...
  void add_summands(const Module<F>& m, const std::string& prefix);
  // Every indecomposable summand of m is in the subcategory.
  bool contains_summands(const Module<F>& m) const;
  Module<F> sum() const;
};

template <class F>
Subcategory<F> proj_injectives(const Algebra<F>& a);

class KnittingIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MorKind { AddA, AddDA };
enum class MorRoute { Knitting, Presentations };

// Indecomposable objects of Mor(add A) or Mor(add DA) as T2(A)-modules for
// hereditary A. The knitting route filters ind T2(A) and throws
// KnittingIncomplete past the cutoff; the presentation route lists
// (P,0,0), (0,P,0), (P,P,1) and the minimal presentations of the
// non-projective indecomposables (dually for DA) and needs A rep-finite.
template <class F>
Subcategory<F> mor_generator(const TriangularAlgebra<F>& t2, MorKind which, MorRoute route = MorRoute::Knitting,
                             int cutoff = 10000);

// End(sum of the objects)^op with one vertex per object, labelled by id.
template <class F>
Algebra<F> auslander_algebra(const Subcategory<F>& s, const std::string& name = "aus");

}  // namespace trirep
