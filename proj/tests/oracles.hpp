#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary.

#include <functional>
#include <random>
#include <set>

#include "trirep/decomp.hpp"
#include "trirep/homological.hpp"

namespace trirep::testing {

using DimSet = std::multiset<std::vector<Index>>;

// Positive roots of a tree quiver: x >= 0 with Tits form 1, entries <= 3.
template <class F>
DimSet positive_roots(const Algebra<F>& a) {
  const int n = a.num_vertices();
  DimSet out;
  std::vector<Index> x(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Index q = 0, sum = 0;
      for (Index v : x) q += v * v, sum += v;
      for (int g = 0; g < a.num_generators(); ++g)
        q -= x[static_cast<std::size_t>(a.generator_source(g))] * x[static_cast<std::size_t>(a.generator_target(g))];
      if (sum > 0 && q == 1) out.insert(x);
      return;
    }
    for (Index v = 0; v <= 3; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Isomorphism-invariant fingerprint of a decomposition: dimension vectors of
// the pieces with the dimensions of their endomorphism rings.
using Signature = std::multiset<std::pair<std::vector<Index>, Index>>;

template <class F>
Signature signature(const Decomposition<F>& d) {
  Signature s;
  for (const auto& p : d.pieces)
    s.insert({p.module.dimension_vector(), static_cast<Index>(hom_space<F>(p.module, p.module).size())});
  return s;
}

// The same module written in a random basis at every vertex.
template <class F>
Module<F> random_base_change(const Module<F>& m, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Mat<F>> p;
  for (int v = 0; v < m.algebra().num_vertices(); ++v) {
    const Index n = m.dim_at(v);
    Mat<F> g;
    do {
      g = Mat<F>(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = F(d(rng));
    } while (!is_invertible<F>(g));
    p.push_back(g);
  }
  return m.change_basis(p);
}

}  // namespace trirep::testing
