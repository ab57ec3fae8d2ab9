#pragma once

#include <memory>
#include <vector>

#include "trirep/algebra.hpp"

namespace trirep {

namespace detail {
template <class F>
struct ModuleData {
  Algebra<F> algebra;
  std::vector<Index> dims;
  std::vector<Index> offsets;
  Index total = 0;
  std::vector<Mat<F>> gens;
};
}  // namespace detail

// Right module: one vector space per vertex and one matrix per generator.
// A generator g: s -> t acts by the dims[t] x dims[s] matrix generator(g) on
// column vectors, so x * (g1 g2) = generator(g2) * generator(g1) * x.
template <class F>
class Module {
 public:
  Module() = default;
  Module(Algebra<F> a, std::vector<Index> dims, std::vector<Mat<F>> gens);
  static Module zero(const Algebra<F>& a);

  bool valid() const { return d_ != nullptr; }
  const Algebra<F>& algebra() const { return d_->algebra; }
  Index dim() const { return d_->total; }
  Index dim_at(int v) const { return d_->dims[static_cast<std::size_t>(v)]; }
  Index offset(int v) const { return d_->offsets[static_cast<std::size_t>(v)]; }
  const std::vector<Index>& dimension_vector() const { return d_->dims; }
  const Mat<F>& generator(int g) const { return d_->gens[static_cast<std::size_t>(g)]; }
  const std::vector<Mat<F>>& generators() const { return d_->gens; }
  bool is_zero() const { return d_->total == 0; }

  Mat<F> block_action(int b) const;
  Mat<F> action(int b) const;
  bool satisfies_relations() const;
  // Per-vertex invertible base change p_v; the new coordinates are p_v * x.
  Module change_basis(const std::vector<Mat<F>>& p) const;

  const void* identity_key() const { return d_.get(); }

 private:
  std::shared_ptr<const detail::ModuleData<F>> d_;
};

template <class F>
class Morphism {
 public:
  Morphism() = default;
  Morphism(Module<F> source, Module<F> target, std::vector<Mat<F>> blocks);
  static Morphism zero(const Module<F>& s, const Module<F>& t);
  static Morphism identity(const Module<F>& m);

  const Module<F>& source() const { return src_; }
  const Module<F>& target() const { return tgt_; }
  const Mat<F>& block(int v) const { return blocks_[static_cast<std::size_t>(v)]; }
  const std::vector<Mat<F>>& blocks() const { return blocks_; }
  Mat<F> matrix() const;
  bool is_zero() const;
  Index rank() const;
  bool is_iso() const;
  bool is_intertwining() const;

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const F& c) const;

 private:
  Module<F> src_, tgt_;
  std::vector<Mat<F>> blocks_;
};

// g after f.
template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f);

template <class F>
Morphism<F> linear_combination(const std::vector<Morphism<F>>& basis, const Vec<F>& coeffs,
                               const Module<F>& source, const Module<F>& target);

// ⊕_k e_{tops[k]} A with a fixed layout: at vertex w, summand k occupies
// the rows base[k][w] .. base[k][w] + |block(tops[k], w)|.
template <class F>
struct FreeModule {
  std::vector<int> tops;
  Module<F> module;
  std::vector<std::vector<Index>> base;
  Index position(int k, int b) const;
};

template <class F>
FreeModule<F> free_module(const Algebra<F>& a, std::vector<int> tops);

// Homomorphism from a free module fixed by the images of its generators.
template <class F>
Morphism<F> map_from_free(const FreeModule<F>& p, const Module<F>& target, const std::vector<Vec<F>>& images);

template <class F>
Vec<F> generator_image(const FreeModule<F>& p, const Morphism<F>& f, int k);

template <class F>
Module<F> projective_module(const Algebra<F>& a, int v);
template <class F>
Module<F> injective_module(const Algebra<F>& a, int v);
template <class F>
Module<F> simple_module(const Algebra<F>& a, int v);
template <class F>
Module<F> regular_module(const Algebra<F>& a);
template <class F>
Module<F> coregular_module(const Algebra<F>& a);
template <class F>
Module<F> dual_module(const Module<F>& m);
template <class F>
Morphism<F> dual_morphism(const Morphism<F>& f, const Module<F>& dual_source, const Module<F>& dual_target);

template <class F>
struct DirectSum {
  Module<F> module;
  std::vector<Morphism<F>> injections;
  std::vector<Morphism<F>> projections;
};
template <class F>
DirectSum<F> direct_sum(const std::vector<Module<F>>& parts, const Algebra<F>& a);

template <class F>
struct SubModule {
  Module<F> module;
  Morphism<F> inclusion;
};
template <class F>
struct QuotientModule {
  Module<F> module;
  Morphism<F> projection;
};

// Per-vertex column bases; the span must be closed under the action.
template <class F>
SubModule<F> submodule(const Module<F>& m, const std::vector<Mat<F>>& bases);
template <class F>
QuotientModule<F> quotient_module(const Module<F>& m, const std::vector<Mat<F>>& sub);

template <class F>
SubModule<F> kernel(const Morphism<F>& f);
template <class F>
QuotientModule<F> cokernel(const Morphism<F>& f);
template <class F>
struct ImageFactorization {
  Module<F> module;
  Morphism<F> onto;
  Morphism<F> inclusion;
};
template <class F>
ImageFactorization<F> image(const Morphism<F>& f);

template <class F>
std::vector<Mat<F>> radical_subspaces(const Module<F>& m);
template <class F>
std::vector<Mat<F>> socle_subspaces(const Module<F>& m);
template <class F>
std::vector<Index> top_dims(const Module<F>& m);
template <class F>
std::vector<Index> socle_dims(const Module<F>& m);

template <class F>
std::vector<Morphism<F>> hom_space(const Module<F>& m, const Module<F>& n);
template <class F>
Index hom_dim(const Module<F>& m, const Module<F>& n);

// Coordinates of a morphism in a Hom basis (used to turn compositions into
// structure constants). Rows of `pick` select determining entries.
template <class F>
class HomCoordinates {
 public:
  HomCoordinates() = default;
  explicit HomCoordinates(const std::vector<Morphism<F>>& basis);
  Vec<F> operator()(const Morphism<F>& f) const;
  Index size() const { return static_cast<Index>(entries_.size()); }

 private:
  struct Entry {
    int vertex;
    Index row, col;
  };
  std::vector<Entry> entries_;
  Mat<F> inv_;
};

template <class F>
Module<F> convert_module(const Module<Rational>& m, const Algebra<F>& a);

}  // namespace trirep
