#pragma once

#include <string>

#include <json.hpp>

#include "trirep/module.hpp"
#include "trirep/quiver.hpp"

namespace trirep {

using Json = nlohmann::ordered_json;

QuiverPresentation quiver_from_json(const Json& j);
Json quiver_to_json(const QuiverPresentation& q);
QuiverPresentation load_quiver(const std::string& path);
Json load_json(const std::string& path);

// {"dimension_vector": [...], "arrows": {label: [[...]...]}} keyed by generator
// label, or "basis_actions": {basis label: matrix} for general owners.
template <class F>
Module<F> module_from_json(const Json& j, const Algebra<F>& a);
template <class F>
Json module_to_json(const Module<F>& m);

template <class F>
Json matrix_to_json(const Mat<F>& m);
template <class F>
Mat<F> matrix_from_json(const Json& j, Index rows, Index cols);

std::string dimension_vector_string(const std::vector<Index>& d);

}  // namespace trirep
