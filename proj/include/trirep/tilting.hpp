#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirep/approximation.hpp"
#include "trirep/artheory.hpp"

namespace trirep {

template <class F>
struct TiltingModule {
  Algebra<F> owner;
  std::vector<Module<F>> summands;  // basic, pairwise non-isomorphic
  std::vector<std::string> ids;
  std::string id;
  // witnesses
  std::vector<int> proj_dims;
  std::vector<std::vector<Index>> ext;  // ext[i][j] = dim Ext^1(T_i, T_j)
  Morphism<F> coresolution;             // A -> T0, mono with cokernel T1 in add T
  Module<F> cokernel;

  int size() const { return static_cast<int>(summands.size()); }
  Module<F> module() const;
  Subcategory<F> add() const;
};

// The summands are checked for pd <= 1, Ext^1(T, T) = 0 and a coresolution
// 0 -> A -> T0 -> T1 -> 0 with T0 the universal left add T-approximation.
template <class F>
std::optional<TiltingModule<F>> is_tilting(const std::vector<Module<F>>& summands, const std::vector<std::string>& ids);
template <class F>
std::optional<TiltingModule<F>> is_tilting(const Module<F>& t);

// All basic tilting modules of a representation-finite algebra, as sets of
// AR quiver vertices in lexicographic order. Ids join the vertex ids.
template <class F>
std::vector<TiltingModule<F>> tilting_modules(const ARQuiver<F>& ind);

// Classes of indecomposables as sorted AR quiver vertex indices.
using IndSet = std::vector<int>;

struct TorsionPair {
  IndSet torsion, torsionfree;
};

// T(T) = {Ext^1(T, X) = 0}, F(T) = {Hom(T, X) = 0} on ind of the owner.
template <class F>
TorsionPair torsion_pair_of_tilting(const TiltingModule<F>& t, const ARQuiver<F>& ind);

// X(T) = {Y (x)_B T = 0}, Y(T) = {Tor_1(Y, T) = 0} for a B-A bimodule T, on ind B.
template <class F>
TorsionPair xy_pair(const Bimodule<F>& t, const ARQuiver<F>& ind_b);

// Trace of T in X, the torsion part for the pair of a tilting module.
template <class F>
SubModule<F> torsion_submodule(const TiltingModule<F>& t, const Module<F>& x);

// Every indecomposable in exactly one class. For a tilting T, "T splitting"
// is this on (X(T), Y(T)) and "T separating" is this on (T(T), F(T)).
bool is_splitting(const TorsionPair& p, int num_ind);
// Every path of nonzero non-isomorphisms between indecomposables that starts
// and ends in `members` stays inside it.
template <class F>
bool is_convex(const IndSet& members, const ARQuiver<F>& ind);

// Indices of the summands of t (all must occur) in ind.
template <class F>
IndSet locate_summands(const std::vector<Module<F>>& summands, const ARQuiver<F>& ind);

// A tilting module with everything needed on the End side.
template <class F>
struct TiltingData {
  TiltingModule<F> tilt;
  CategoryAlgebra<F> endo;    // B = End(T)
  Bimodule<F> t_bimodule;     // B-A
  Bimodule<F> dt_bimodule;    // A-B
  TiltingModule<F> dual_tilt; // DT over B
};

template <class F>
TiltingData<F> tilting_data(const TiltingModule<F>& t);

struct TiltingQuiver {
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> arrows;
  // Vertices reachable by a path of positive length.
  std::vector<std::vector<int>> reachable() const;
};

// Arrow T' -> T when T' = M + X, T = M + Y and 0 -> X -> E -> Y -> 0 with
// X -> E a minimal left and E -> Y a minimal right add M-approximation.
template <class F>
TiltingQuiver tilting_quiver(const std::vector<TiltingModule<F>>& tilts);

struct SetCheck {
  std::string name;
  bool holds = false;
  std::vector<std::string> only_left, only_right;  // ids present on one side only
};

struct Lemma43Report {
  std::string tilting;
  std::vector<SetCheck> identities;        // the four identities as stated
  std::vector<SetCheck> tau_alternatives;  // (ii) with tau in place of tau^-1
  bool verified() const;
};

template <class F>
Lemma43Report lemma43_check(const TiltingData<F>& t, const ARQuiver<F>& ind_a, const ARQuiver<F>& ind_b);

// T-bar = (0, T, 0) + P-bar over the duplicated algebra, its endomorphism
// algebra E and the block algebra [[B, 0], [DT, A]].
template <class F>
struct BarTilting {
  TriangularAlgebra<F> duplicated;
  TiltingModule<F> tilt;
  CategoryAlgebra<F> endo;
  TriangularAlgebra<F> block;
  bool block_matches = false;  // same dimension and isomorphic Gabriel quivers
};

template <class F>
BarTilting<F> bar_tilting(const TiltingData<F>& t);

bool quivers_isomorphic(const Quiver& a, const Quiver& b);

// ind T2(A) filtered by: every summand of Y in tau^-1 F(T) or add A. Both
// membership routes are evaluated; `routes_agree` records that they match.
template <class F>
struct Thm41Subcategory {
  Subcategory<F> modules;
  bool routes_agree = true;
};

template <class F>
Thm41Subcategory<F> thm41_subcategory(const TiltingModule<F>& t, const TriangularAlgebra<F>& t2,
                                      const ARQuiver<F>& ind_t2, const ARQuiver<F>& ind_a);

enum class Verdict { Agree, Disagree, Inconclusive };

struct Thm41Report {
  std::string tilting;
  std::optional<int> end_count;          // |ind End(T-bar)| when knitting completes
  std::optional<int> subcategory_count;  // when T2(A) knitting completes
  std::optional<int> fdt_count;          // |ind F(DT)|
  std::optional<bool> count_relation;
  bool routes_agree = true;
  bool block_matches = false;
  Verdict verdict = Verdict::Inconclusive;
};

template <class F>
Thm41Report thm41_check(const TiltingData<F>& t, int cutoff);

struct Cor44Report {
  int paths = 0;
  std::vector<std::pair<std::string, std::string>> violations;  // (T1, T2) with T(T1) not in T(T2)
  int reverse_containments = 0;                                 // paths with T(T2) in T(T1)
  bool verified() const { return violations.empty(); }
};

template <class F>
Cor44Report corollary44_check(const std::vector<TiltingModule<F>>& tilts, const TiltingQuiver& q,
                              const ARQuiver<F>& ind);

std::string verdict_name(Verdict v);

}  // namespace trirep
