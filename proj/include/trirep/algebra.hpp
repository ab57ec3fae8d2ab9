#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "trirep/exactla.hpp"
#include "trirep/quiver.hpp"

namespace trirep {

template <class F>
struct Term {
  int index;
  F coeff;
};

// Sparse algebra element: terms sorted by basis index, no zero coefficients.
template <class F>
using Element = std::vector<Term<F>>;

template <class F>
Element<F> element_from_dense(const Vec<F>& v) {
  Element<F> e;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) e.push_back({static_cast<int>(i), v(i)});
  return e;
}

template <class F>
Vec<F> element_to_dense(const Element<F>& e, Index dim) {
  Vec<F> v = Vec<F>::Constant(dim, F(0));
  for (const auto& t : e) v(t.index) += t.coeff;
  return v;
}

namespace detail {

template <class F>
struct AlgebraData {
  std::string name;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> basis_labels;
  std::vector<int> source, target;
  std::vector<std::vector<int>> words;
  // table[i] lists (j, b_i * b_j) for the nonzero products, sorted by j.
  std::vector<std::vector<std::pair<int, Element<F>>>> table;
  std::vector<std::vector<int>> blocks;  // blocks[s * n + t]: basis indices in e_s A e_t
  std::vector<int> block_position;       // position of b inside its block
  int num_generators = 0;
  std::uint64_t fingerprint = 0;

  mutable std::once_flag op_once;
  mutable std::shared_ptr<const AlgebraData> op;
  std::weak_ptr<const AlgebraData> op_of;
};

}  // namespace detail

// Finite-dimensional basic algebra on a monomial basis. Basis order:
// the vertex idempotents, then the generators (Gabriel arrows), then longer
// monomials. Basis element b lies in e_source(b) A e_target(b) and equals the
// product of the generators in word(b), read left to right.
template <class F>
class Algebra {
 public:
  using Data = detail::AlgebraData<F>;

  Algebra() = default;
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  bool valid() const { return d_ != nullptr; }
  const std::string& name() const { return d_->name; }
  int dim() const { return static_cast<int>(d_->basis_labels.size()); }
  int num_vertices() const { return static_cast<int>(d_->vertex_labels.size()); }
  int num_generators() const { return d_->num_generators; }
  const std::string& vertex_label(int v) const { return d_->vertex_labels[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& vertex_labels() const { return d_->vertex_labels; }
  const std::string& basis_label(int b) const { return d_->basis_labels[static_cast<std::size_t>(b)]; }
  int generator_basis(int g) const { return num_vertices() + g; }
  const std::string& generator_label(int g) const { return basis_label(generator_basis(g)); }
  int source(int b) const { return d_->source[static_cast<std::size_t>(b)]; }
  int target(int b) const { return d_->target[static_cast<std::size_t>(b)]; }
  int generator_source(int g) const { return source(generator_basis(g)); }
  int generator_target(int g) const { return target(generator_basis(g)); }
  const std::vector<int>& word(int b) const { return d_->words[static_cast<std::size_t>(b)]; }
  const std::vector<int>& block(int s, int t) const {
    return d_->blocks[static_cast<std::size_t>(s * num_vertices() + t)];
  }
  int block_position(int b) const { return d_->block_position[static_cast<std::size_t>(b)]; }
  std::uint64_t fingerprint() const { return d_->fingerprint; }

  // Null when the product vanishes.
  const Element<F>* product(int i, int j) const;
  Element<F> multiply(const Element<F>& x, const Element<F>& y) const;
  Element<F> basis_element(int b) const { return {{b, F(1)}}; }
  Element<F> one() const;

  Algebra opposite() const;
  bool same_as(const Algebra& o) const {
    return d_ == o.d_ || (d_ && o.d_ && d_->fingerprint == o.d_->fingerprint && dim() == o.dim());
  }
  const Data* data() const { return d_.get(); }

  Quiver gabriel_quiver() const;
  bool is_connected() const { return gabriel_quiver().is_connected(); }
  // All triples multiply associatively; for tests and input validation.
  bool check_associativity() const;

 private:
  std::shared_ptr<const Data> d_;
};

template <class F>
struct AlgebraParts {
  std::string name;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> basis_labels;
  std::vector<int> source, target;
  std::vector<std::vector<int>> words;
  int num_generators = 0;
  std::vector<std::vector<std::pair<int, Element<F>>>> table;
};

template <class F>
Algebra<F> make_algebra(AlgebraParts<F> parts);

// Old basis of a basic algebra with a complete set of primitive idempotents.
// Every basis element must be homogeneous (in some e_s A e_t) and every
// element other than the idempotents must lie in the radical.
template <class F>
struct StructureSpec {
  std::string name;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> basis_labels;
  std::vector<int> source, target;
  std::vector<int> idempotents;
  std::function<Element<F>(int, int)> multiply;
};

template <class F>
struct Rebased {
  Algebra<F> algebra;
  std::vector<Element<F>> new_in_old;
  std::vector<Element<F>> old_in_new;
};

template <class F>
Rebased<F> rebase_to_monomial(const StructureSpec<F>& spec);

template <class F>
Algebra<F> path_algebra(const QuiverPresentation& q);

// Minimal relations of the algebra on its Gabriel quiver (acyclic only).
template <class F>
RelationSet extract_relations(const Algebra<F>& a);

}  // namespace trirep
