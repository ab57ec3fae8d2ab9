#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trirep/scalar.hpp"

namespace trirep {

struct Arrow {
  std::string label;
  int from = 0;
  int to = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(std::string_view label) const;
  int arrow_index(std::string_view label) const;
  bool is_acyclic() const;
  bool is_connected() const;
  void validate() const;
};

struct PathTerm {
  std::vector<std::string> path;
  Rational coeff;
};
using Relation = std::vector<PathTerm>;
using RelationSet = std::vector<Relation>;

struct QuiverPresentation {
  std::string name;
  Quiver quiver;
  RelationSet relations;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trirep
