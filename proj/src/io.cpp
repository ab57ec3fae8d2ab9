#include "trirep/io.hpp"

#include <fstream>
#include <sstream>

namespace trirep {

namespace {
std::string as_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("expected a string or integer, got " + j.dump());
}
}  // namespace

QuiverPresentation quiver_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("quiver file must be a JSON object");
  QuiverPresentation q;
  q.name = j.value("name", std::string("algebra"));
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("quiver: missing vertices");
  for (const auto& v : j["vertices"]) q.quiver.vertices.push_back(as_string(v));
  if (j.contains("arrows")) {
    for (const auto& a : j["arrows"]) {
      if (!a.contains("label") || !a.contains("from") || !a.contains("to")) throw InputError("arrow needs label, from, to");
      Arrow arr;
      arr.label = as_string(a["label"]);
      arr.from = q.quiver.vertex_index(as_string(a["from"]));
      arr.to = q.quiver.vertex_index(as_string(a["to"]));
      if (arr.from < 0 || arr.to < 0) throw InputError("arrow " + arr.label + " references an unknown vertex");
      q.quiver.arrows.push_back(arr);
    }
  }
  if (j.contains("relations")) {
    for (const auto& r : j["relations"]) {
      Relation rel;
      for (const auto& t : r) {
        PathTerm term;
        for (const auto& p : t.at("path")) term.path.push_back(as_string(p));
        const auto& c = t.contains("coeff") ? t["coeff"] : Json("1");
        try {
          term.coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long long>());
        } catch (const std::exception& e) {
          throw InputError(std::string("bad coefficient: ") + e.what());
        }
        rel.push_back(std::move(term));
      }
      q.relations.push_back(std::move(rel));
    }
  }
  q.quiver.validate();
  return q;
}

Json quiver_to_json(const QuiverPresentation& q) {
  Json j;
  j["name"] = q.name;
  j["vertices"] = q.quiver.vertices;
  Json arrows = Json::array();
  for (const auto& a : q.quiver.arrows)
    arrows.push_back({{"label", a.label},
                      {"from", q.quiver.vertices[static_cast<std::size_t>(a.from)]},
                      {"to", q.quiver.vertices[static_cast<std::size_t>(a.to)]}});
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : q.relations) {
    Json rel = Json::array();
    for (const auto& t : r) rel.push_back({{"path", t.path}, {"coeff", t.coeff.str()}});
    rels.push_back(rel);
  }
  j["relations"] = rels;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

QuiverPresentation load_quiver(const std::string& path) {
  return quiver_from_json(load_json(path));
}

template <class F>
Json matrix_to_json(const Mat<F>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

template <class F>
Mat<F> matrix_from_json(const Json& j, Index rows, Index cols) {
  Mat<F> m = zeros<F>(rows, cols);
  if (rows == 0 || cols == 0) return m;
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) throw InputError("matrix has the wrong number of rows");
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw InputError("matrix has the wrong number of columns");
    for (Index c = 0; c < cols; ++c) {
      const auto& x = row[static_cast<std::size_t>(c)];
      Rational q = x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long long>());
      m(i, c) = field_from_rational<F>(q);
    }
  }
  return m;
}

template <class F>
Module<F> module_from_json(const Json& j, const Algebra<F>& a) {
  const int n = a.num_vertices();
  std::vector<Index> dims;
  const auto& dv = j.at("dimension_vector");
  if (static_cast<int>(dv.size()) != n) throw InputError("dimension vector length does not match the algebra");
  for (const auto& d : dv) dims.push_back(d.get<Index>());
  std::vector<Mat<F>> gens;
  if (j.contains("arrows")) {
    const auto& arr = j["arrows"];
    for (int g = 0; g < a.num_generators(); ++g) {
      Index r = dims[static_cast<std::size_t>(a.generator_target(g))], c = dims[static_cast<std::size_t>(a.generator_source(g))];
      const std::string& lbl = a.generator_label(g);
      gens.push_back(arr.contains(lbl) ? matrix_from_json<F>(arr[lbl], r, c) : zeros<F>(r, c));
    }
  } else if (j.contains("basis_actions")) {
    const auto& acts = j["basis_actions"];
    std::vector<Index> off(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + dims[static_cast<std::size_t>(v)];
    for (int g = 0; g < a.num_generators(); ++g) {
      int s = a.generator_source(g), t = a.generator_target(g);
      Index total = off.back();
      const std::string& lbl = a.generator_label(g);
      Mat<F> full = acts.contains(lbl) ? matrix_from_json<F>(acts[lbl], total, total) : zeros<F>(total, total);
      gens.push_back(full.block(off[static_cast<std::size_t>(t)], off[static_cast<std::size_t>(s)], dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]));
    }
  } else {
    throw InputError("module file needs \"arrows\" or \"basis_actions\"");
  }
  Module<F> m(a, std::move(dims), std::move(gens));
  if (!m.satisfies_relations()) throw InputError("module matrices violate the relations of the algebra");
  return m;
}

template <class F>
Json module_to_json(const Module<F>& m) {
  const Algebra<F>& a = m.algebra();
  Json j;
  j["dimension_vector"] = m.dimension_vector();
  Json arr = Json::object();
  for (int g = 0; g < a.num_generators(); ++g) arr[a.generator_label(g)] = matrix_to_json<F>(m.generator(g));
  j["arrows"] = arr;
  return j;
}

std::string dimension_vector_string(const std::vector<Index>& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os.str();
}

#define TRIREP_INSTANTIATE(F)                                      \
  template Json matrix_to_json<F>(const Mat<F>&);                  \
  template Mat<F> matrix_from_json<F>(const Json&, Index, Index);  \
  template Module<F> module_from_json<F>(const Json&, const Algebra<F>&); \
  template Json module_to_json<F>(const Module<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
