#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirep/tilting.hpp"

namespace trirep {

enum class Provenance { Thm31, Thm32, Thm47, Additive, Custom };

std::string provenance_name(Provenance p);

template <class F>
struct GeneratorBundle {
  Subcategory<F> summands;
  Provenance provenance = Provenance::Custom;

  const Algebra<F>& owner() const { return summands.owner; }
  bool is_generator() const;
  bool is_cogenerator() const;
};

// 0 -> M_n -> ... -> M_0 -> x -> 0 with M_i in add M. differentials[0] is
// M_0 -> x, differentials[i] is M_i -> M_{i-1}.
template <class F>
struct Resolution {
  Module<F> target;
  std::vector<Module<F>> terms;
  std::vector<std::vector<int>> term_summands;  // bundle indices, with repetition
  std::vector<Morphism<F>> differentials;
  bool exact = false;
  bool hom_exact = false;

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

// Iterated minimal right approximations; nullopt when the kernel after
// `maxlen` steps is still nonzero or an approximation is not onto.
template <class F>
std::optional<Resolution<F>> add_m_resolution(const GeneratorBundle<F>& m, const Module<F>& x, int maxlen);

// Composites vanish and the sequence is exact, checked by ranks.
template <class F>
bool is_exact(const Resolution<F>& r);
// Hom(U, -) applied to the sequence is exact for every bundle object U.
template <class F>
bool is_hom_exact(const GeneratorBundle<F>& m, const Resolution<F>& r);

struct ResolutionRow {
  std::string id;
  std::vector<Index> dims;
  std::optional<int> length;  // none: no resolution within maxlen
  bool exact = false, hom_exact = false;
};

struct BoundReport {
  std::string provenance;
  int bundle_size = 0;
  int maxlen = 0;
  bool sample = false;  // rows cover a sample, not all of ind
  std::vector<ResolutionRow> rows;
  std::optional<int> n_star;  // max length when every row resolved
  std::optional<int> direct_gldim;

  bool established() const;
  // gl.dim End(M) <= n* + 2
  std::optional<int> gldim_bound() const { return n_star ? std::optional<int>(*n_star + 2) : std::nullopt; }
  bool consistent() const { return !direct_gldim || !n_star || *direct_gldim <= *n_star + 2; }
};

// Resolves each module; with direct_gldim the global dimension of the
// category algebra of the bundle is computed as a cross-check.
template <class F>
BoundReport repdim_bound(const GeneratorBundle<F>& m, const std::vector<Module<F>>& modules,
                         const std::vector<std::string>& ids, int maxlen, bool sample, bool direct_gldim);

// Over the vertices of a complete AR quiver.
template <class F>
BoundReport repdim_bound(const GeneratorBundle<F>& m, const ARQuiver<F>& ind, int maxlen, bool direct_gldim);

template <class F>
GeneratorBundle<F> additive_generator(const ARQuiver<F>& ind);

// Mor(add A) + Mor(add DA) over T2(A).
template <class F>
GeneratorBundle<F> generator_thm31(const TriangularAlgebra<F>& t2, MorRoute route = MorRoute::Knitting);

// Indecomposable projectives and injectives of T2(A).
template <class F>
GeneratorBundle<F> generator_thm32(const TriangularAlgebra<F>& t2);

// Six families of triples over the block algebra [[B, 0], [DT, A]]; the
// per-family ids record which family produced each summand.
template <class F>
GeneratorBundle<F> generator_thm47(const TiltingData<F>& t, const TriangularAlgebra<F>& block);

}  // namespace trirep
