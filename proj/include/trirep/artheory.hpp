#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trirep/decomp.hpp"
#include "trirep/homological.hpp"

namespace trirep {

// Auslander-Bridger transpose, a module over the opposite algebra.
template <class F>
Module<F> transpose(const Module<F>& m);

// D Tr and Tr D.
template <class F>
Module<F> ar_translate(const Module<F>& m);
template <class F>
Module<F> inverse_ar_translate(const Module<F>& m);

template <class F>
struct AlmostSplitSequence {
  Module<F> left, middle, right;
  Morphism<F> inclusion, projection;
};

class NotAlmostSplit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 0 -> tau z -> E -> z -> 0 for z indecomposable and not projective. The
// class spans the socle of Ext^1(z, tau z) over End(z). `tau_z` may be any
// module isomorphic to tau z.
template <class F>
AlmostSplitSequence<F> almost_split_sequence(const Module<F>& z, std::optional<Module<F>> tau_z = std::nullopt);

enum class Certificate { Complete, CutoffExceeded };

struct Mesh {
  int left = -1, right = -1;
  std::vector<std::pair<int, int>> middle;  // (vertex, multiplicity)
};

template <class F>
struct ARQuiver {
  Algebra<F> algebra;
  std::vector<Module<F>> vertices;
  std::vector<char> projective, injective;
  std::vector<int> tau, tau_inverse;  // -1 where undefined or not reached
  std::map<std::pair<int, int>, int> arrows;
  std::vector<Mesh> meshes;
  Certificate certificate = Certificate::Complete;
  // Vertices past this index only carry dimension vectors (see KnitOptions).
  int exact_vertices = 0;
  std::vector<std::vector<Index>> dims;
  // Dimension-vector knitting stopped because an entry left the 64-bit range.
  bool dimension_overflow = false;

  int size() const { return static_cast<int>(dims.size()); }
  bool complete() const { return certificate == Certificate::Complete; }
  std::string id(int v) const;
  // Index of the vertex isomorphic to m, if any.
  std::optional<int> find(const Module<F>& m) const;
  // Mesh additivity and the arrow balance around every mesh.
  bool verify() const;
};

struct KnitOptions {
  int cutoff = 10000;
  // When positive, modules above this total dimension are no longer built
  // exactly; knitting continues on dimension vectors alone and the result is
  // never marked complete.
  Index exact_dim_limit = 0;
};

template <class F>
ARQuiver<F> knit_ar_quiver(const Algebra<F>& a, const KnitOptions& opts = {});

template <class F>
std::optional<int> representation_finite_count(const Algebra<F>& a, int cutoff = 10000);

// Graphviz rendering: vertices labelled by dimension vector, tau dashed.
template <class F>
std::string ar_quiver_dot(const ARQuiver<F>& q);

std::string dimension_string(const std::vector<Index>& d);

}  // namespace trirep
