#include "trirep/quiver.hpp"

#include <algorithm>
#include <set>

namespace trirep {

int Quiver::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

bool Quiver::is_acyclic() const {
  const std::size_t n = vertices.size();
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.to)];
  std::vector<int> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.from == v && --indeg[static_cast<std::size_t>(a.to)] == 0) stack.push_back(a.to);
  }
  return seen == n;
}

bool Quiver::is_connected() const {
  const std::size_t n = vertices.size();
  if (n == 0) return true;
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& a : arrows) parent[static_cast<std::size_t>(find(a.from))] = find(a.to);
  int root = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw InputError("duplicate vertex label: " + v);
  std::set<std::string> aseen;
  const int n = static_cast<int>(vertices.size());
  for (const auto& a : arrows) {
    if (!aseen.insert(a.label).second) throw InputError("duplicate arrow label: " + a.label);
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw InputError("arrow " + a.label + " has an invalid endpoint");
  }
}

}  // namespace trirep
