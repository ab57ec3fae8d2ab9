#pragma once

#include <string>
#include <vector>

#include "trirep/algebra.hpp"
#include "trirep/io.hpp"
#include "trirep/module.hpp"

namespace trirep::testing {

inline std::string data_file(const std::string& name) { return std::string(TRIREP_DATA_DIR) + "/" + name + ".json"; }

template <class F = Rational>
Algebra<F> load_algebra(const std::string& name) {
  return path_algebra<F>(load_quiver(data_file(name)));
}

// Projectives, injectives and simples of every vertex.
template <class F>
std::vector<Module<F>> standard_modules(const Algebra<F>& a) {
  std::vector<Module<F>> out;
  for (int v = 0; v < a.num_vertices(); ++v) {
    out.push_back(projective_module<F>(a, v));
    out.push_back(injective_module<F>(a, v));
    out.push_back(simple_module<F>(a, v));
  }
  return out;
}

}  // namespace trirep::testing
