#include "trirep/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace trirep {
namespace {

std::uint64_t fnv(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv_str(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return fnv(h, s.size());
}

template <class F>
void add_scaled(std::vector<F>& acc, std::vector<char>& touched, std::vector<int>& support,
                const Element<F>& e, const F& scale) {
  for (const auto& t : e) {
    auto i = static_cast<std::size_t>(t.index);
    if (!touched[i]) {
      touched[i] = 1;
      support.push_back(t.index);
    }
    acc[i] += t.coeff * scale;
  }
}

template <class F>
Element<F> collect(std::vector<F>& acc, std::vector<char>& touched, std::vector<int>& support) {
  std::sort(support.begin(), support.end());
  Element<F> out;
  for (int i : support) {
    auto k = static_cast<std::size_t>(i);
    if (!is_zero(acc[k])) out.push_back({i, acc[k]});
    acc[k] = F(0);
    touched[k] = 0;
  }
  support.clear();
  return out;
}

// Incremental echelon basis for membership tests.
template <class F>
class SpanTracker {
 public:
  explicit SpanTracker(Index n) : n_(n) {}
  // Reduces v against the basis; returns true and stores it when independent.
  bool add(Vec<F> v) {
    reduce(v);
    Index p = 0;
    while (p < n_ && is_zero(v(p))) ++p;
    if (p == n_) return false;
    F inv = F(1) / v(p);
    v *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool contains(Vec<F> v) const {
    reduce(v);
    for (Index i = 0; i < n_; ++i)
      if (!is_zero(v(i))) return false;
    return true;
  }
  Index rank() const { return static_cast<Index>(rows_.size()); }

 private:
  void reduce(Vec<F>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F c = v(pivots_[k]);
      if (is_zero(c)) continue;
      for (Index i = 0; i < n_; ++i)
        if (!is_zero(rows_[k](i))) v(i) -= c * rows_[k](i);
    }
  }
  Index n_;
  std::vector<Vec<F>> rows_;
  std::vector<Index> pivots_;
};

template <class F>
std::string coeff_key(const F& x) {
  return x.str();
}

}  // namespace

template <class F>
Algebra<F> make_algebra(AlgebraParts<F> parts) {
  auto d = std::make_shared<detail::AlgebraData<F>>();
  const int n = static_cast<int>(parts.vertex_labels.size());
  const int dim = static_cast<int>(parts.basis_labels.size());
  d->name = std::move(parts.name);
  d->vertex_labels = std::move(parts.vertex_labels);
  d->basis_labels = std::move(parts.basis_labels);
  d->source = std::move(parts.source);
  d->target = std::move(parts.target);
  d->words = std::move(parts.words);
  d->num_generators = parts.num_generators;
  d->table = std::move(parts.table);
  d->table.resize(static_cast<std::size_t>(dim));
  for (auto& row : d->table)
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  d->blocks.assign(static_cast<std::size_t>(n * n), {});
  d->block_position.assign(static_cast<std::size_t>(dim), 0);
  for (int b = 0; b < dim; ++b) {
    auto& blk = d->blocks[static_cast<std::size_t>(d->source[static_cast<std::size_t>(b)] * n + d->target[static_cast<std::size_t>(b)])];
    d->block_position[static_cast<std::size_t>(b)] = static_cast<int>(blk.size());
    blk.push_back(b);
  }
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv_str(h, d->name);
  for (const auto& v : d->vertex_labels) h = fnv_str(h, v);
  for (int b = 0; b < dim; ++b) {
    h = fnv_str(h, d->basis_labels[static_cast<std::size_t>(b)]);
    h = fnv(h, static_cast<std::uint64_t>(d->source[static_cast<std::size_t>(b)]));
    h = fnv(h, static_cast<std::uint64_t>(d->target[static_cast<std::size_t>(b)]));
    for (const auto& [j, e] : d->table[static_cast<std::size_t>(b)]) {
      h = fnv(h, static_cast<std::uint64_t>(j));
      for (const auto& t : e) {
        h = fnv(h, static_cast<std::uint64_t>(t.index));
        h = fnv(h, static_cast<std::uint64_t>(t.coeff.hash()));
      }
    }
  }
  d->fingerprint = h;
  return Algebra<F>(std::move(d));
}

template <class F>
const Element<F>* Algebra<F>::product(int i, int j) const {
  const auto& row = d_->table[static_cast<std::size_t>(i)];
  auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& p, int key) { return p.first < key; });
  if (it == row.end() || it->first != j) return nullptr;
  return &it->second;
}

template <class F>
Element<F> Algebra<F>::multiply(const Element<F>& x, const Element<F>& y) const {
  std::vector<F> acc(static_cast<std::size_t>(dim()), F(0));
  std::vector<char> touched(static_cast<std::size_t>(dim()), 0);
  std::vector<int> support;
  for (const auto& a : x)
    for (const auto& b : y)
      if (const Element<F>* p = product(a.index, b.index)) add_scaled(acc, touched, support, *p, a.coeff * b.coeff);
  return collect(acc, touched, support);
}

template <class F>
Element<F> Algebra<F>::one() const {
  Element<F> e;
  for (int v = 0; v < num_vertices(); ++v) e.push_back({v, F(1)});
  return e;
}

template <class F>
Algebra<F> Algebra<F>::opposite() const {
  if (auto back = d_->op_of.lock()) return Algebra<F>(back);
  std::call_once(d_->op_once, [this] {
    AlgebraParts<F> p;
    p.name = d_->name + "^op";
    p.vertex_labels = d_->vertex_labels;
    p.basis_labels = d_->basis_labels;
    p.source = d_->target;
    p.target = d_->source;
    p.words = d_->words;
    for (auto& w : p.words) std::reverse(w.begin(), w.end());
    p.num_generators = d_->num_generators;
    p.table.resize(d_->table.size());
    for (std::size_t i = 0; i < d_->table.size(); ++i)
      for (const auto& [j, e] : d_->table[i]) p.table[static_cast<std::size_t>(j)].push_back({static_cast<int>(i), e});
    Algebra<F> op = make_algebra(std::move(p));
    auto data = std::const_pointer_cast<detail::AlgebraData<F>>(std::shared_ptr<const detail::AlgebraData<F>>(op.d_));
    data->op_of = d_;
    d_->op = data;
  });
  return Algebra<F>(d_->op);
}

template <class F>
Quiver Algebra<F>::gabriel_quiver() const {
  Quiver q;
  q.vertices = d_->vertex_labels;
  for (int g = 0; g < num_generators(); ++g)
    q.arrows.push_back({generator_label(g), generator_source(g), generator_target(g)});
  return q;
}

template <class F>
bool Algebra<F>::check_associativity() const {
  for (int i = 0; i < dim(); ++i)
    for (const auto& [j, ij] : d_->table[static_cast<std::size_t>(i)])
      for (const auto& [k, jk] : d_->table[static_cast<std::size_t>(j)]) {
        Element<F> left = multiply(ij, basis_element(k));
        Element<F> right = multiply(basis_element(i), jk);
        if (left.size() != right.size()) return false;
        for (std::size_t t = 0; t < left.size(); ++t)
          if (left[t].index != right[t].index || left[t].coeff != right[t].coeff) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Path algebras.

template <class F>
Algebra<F> path_algebra(const QuiverPresentation& qp) {
  const Quiver& q = qp.quiver;
  q.validate();
  if (!q.is_acyclic()) throw InputError("cycle detected in quiver");
  const int n = static_cast<int>(q.vertices.size());

  // Arrows in label order become generators.
  std::vector<int> order(q.arrows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return q.arrows[static_cast<std::size_t>(a)].label < q.arrows[static_cast<std::size_t>(b)].label; });
  std::vector<int> gen_of_arrow(q.arrows.size());
  for (std::size_t g = 0; g < order.size(); ++g) gen_of_arrow[static_cast<std::size_t>(order[g])] = static_cast<int>(g);
  const int ngen = static_cast<int>(order.size());
  auto gsrc = [&](int g) { return q.arrows[static_cast<std::size_t>(order[static_cast<std::size_t>(g)])].from; };
  auto gtgt = [&](int g) { return q.arrows[static_cast<std::size_t>(order[static_cast<std::size_t>(g)])].to; };
  auto glabel = [&](int g) -> const std::string& { return q.arrows[static_cast<std::size_t>(order[static_cast<std::size_t>(g)])].label; };

  // All paths of length >= 1, as generator words, grouped by block.
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> frontier;
  for (int g = 0; g < ngen; ++g) frontier.push_back({g});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      for (int g = 0; g < ngen; ++g)
        if (gsrc(g) == gtgt(p.back())) {
          auto e = p;
          e.push_back(g);
          next.push_back(std::move(e));
        }
      paths.push_back(std::move(p));
    }
    frontier = std::move(next);
  }
  auto path_src = [&](const std::vector<int>& p) { return gsrc(p.front()); };
  auto path_tgt = [&](const std::vector<int>& p) { return gtgt(p.back()); };
  auto label_seq_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(paths.begin(), paths.end(), label_seq_less);
  std::map<std::vector<int>, int> path_index;
  std::vector<std::vector<int>> block_paths(static_cast<std::size_t>(n * n));
  std::vector<int> pos_in_block(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    path_index[paths[i]] = static_cast<int>(i);
    auto& bp = block_paths[static_cast<std::size_t>(path_src(paths[i]) * n + path_tgt(paths[i]))];
    pos_in_block[i] = static_cast<int>(bp.size());
    bp.push_back(static_cast<int>(i));
  }

  // Relations as words; admissibility checks.
  struct Rel {
    int s, t;
    std::vector<std::pair<std::vector<int>, F>> terms;
  };
  std::vector<Rel> rels;
  for (const auto& r : qp.relations) {
    if (r.empty()) continue;
    Rel rel{-1, -1, {}};
    for (const auto& term : r) {
      if (term.path.size() < 2) throw InputError("non-admissible relation: path of length < 2");
      std::vector<int> w;
      for (const auto& lbl : term.path) {
        int a = q.arrow_index(lbl);
        if (a < 0) throw InputError("relation uses unknown arrow " + lbl);
        int g = gen_of_arrow[static_cast<std::size_t>(a)];
        if (!w.empty() && gtgt(w.back()) != gsrc(g)) throw InputError("relation path is not composable");
        w.push_back(g);
      }
      int s = gsrc(w.front()), t = gtgt(w.back());
      if (rel.s < 0) {
        rel.s = s;
        rel.t = t;
      } else if (rel.s != s || rel.t != t) {
        throw InputError("non-admissible relation: paths with different endpoints");
      }
      rel.terms.push_back({w, field_from_rational<F>(term.coeff)});
    }
    rels.push_back(std::move(rel));
  }

  // Ideal spanned by u * r * v.
  std::vector<std::vector<Vec<F>>> ideal(static_cast<std::size_t>(n * n));
  std::vector<std::vector<std::vector<int>>> ending_at(static_cast<std::size_t>(n)), starting_at(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    ending_at[static_cast<std::size_t>(v)].push_back({});
    starting_at[static_cast<std::size_t>(v)].push_back({});
  }
  for (const auto& p : paths) {
    ending_at[static_cast<std::size_t>(path_tgt(p))].push_back(p);
    starting_at[static_cast<std::size_t>(path_src(p))].push_back(p);
  }
  for (const auto& rel : rels) {
    for (const auto& u : ending_at[static_cast<std::size_t>(rel.s)])
      for (const auto& v : starting_at[static_cast<std::size_t>(rel.t)]) {
        int s = u.empty() ? rel.s : path_src(u);
        int t = v.empty() ? rel.t : path_tgt(v);
        auto& bp = block_paths[static_cast<std::size_t>(s * n + t)];
        Vec<F> vec = Vec<F>::Constant(static_cast<Index>(bp.size()), F(0));
        for (const auto& [w, c] : rel.terms) {
          std::vector<int> full = u;
          full.insert(full.end(), w.begin(), w.end());
          full.insert(full.end(), v.begin(), v.end());
          vec(pos_in_block[static_cast<std::size_t>(path_index.at(full))]) += c;
        }
        ideal[static_cast<std::size_t>(s * n + t)].push_back(std::move(vec));
      }
  }

  // Standard monomials: greedily in (length, lex) order modulo the ideal.
  std::vector<char> selected(paths.size(), 0);
  std::vector<std::vector<std::pair<int, F>>> normal_form(paths.size());
  for (int blk = 0; blk < n * n; ++blk) {
    const auto& bp = block_paths[static_cast<std::size_t>(blk)];
    if (bp.empty()) continue;
    const Index m = static_cast<Index>(bp.size());
    SpanTracker<F> tracker(m);
    for (const auto& v : ideal[static_cast<std::size_t>(blk)]) tracker.add(v);
    std::vector<int> chosen;
    for (int p : bp) {
      Vec<F> e = Vec<F>::Constant(m, F(0));
      e(pos_in_block[static_cast<std::size_t>(p)]) = F(1);
      if (tracker.add(e)) {
        selected[static_cast<std::size_t>(p)] = 1;
        chosen.push_back(p);
      }
    }
    // Normal forms: path = sum of chosen modulo ideal.
    const auto& iv = ideal[static_cast<std::size_t>(blk)];
    Mat<F> sys(m, static_cast<Index>(iv.size() + chosen.size()));
    for (std::size_t k = 0; k < iv.size(); ++k) sys.col(static_cast<Index>(k)) = iv[k];
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      Vec<F> e = Vec<F>::Constant(m, F(0));
      e(pos_in_block[static_cast<std::size_t>(chosen[k])]) = F(1);
      sys.col(static_cast<Index>(iv.size() + k)) = e;
    }
    Mat<F> rhs = identity<F>(m);
    auto sol = solve<F>(sys, rhs);
    if (!sol) throw std::logic_error("path_algebra: normal form system inconsistent");
    for (int p : bp) {
      auto col = pos_in_block[static_cast<std::size_t>(p)];
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const F& c = (*sol)(static_cast<Index>(iv.size() + k), col);
        if (!is_zero(c)) normal_form[static_cast<std::size_t>(p)].push_back({chosen[k], c});
      }
    }
  }

  // Assemble the basis.
  AlgebraParts<F> parts;
  parts.name = qp.name;
  parts.vertex_labels = q.vertices;
  parts.num_generators = ngen;
  std::vector<int> basis_of_path(paths.size(), -1);
  for (int v = 0; v < n; ++v) {
    parts.basis_labels.push_back("e_" + q.vertices[static_cast<std::size_t>(v)]);
    parts.source.push_back(v);
    parts.target.push_back(v);
    parts.words.push_back({});
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!selected[i]) continue;
    // Arrows come first because paths are sorted by length and arrows are generators in order.
    basis_of_path[i] = static_cast<int>(parts.basis_labels.size());
    std::string label;
    for (int g : paths[i]) label += (label.empty() ? "" : "*") + glabel(g);
    parts.basis_labels.push_back(label);
    parts.source.push_back(path_src(paths[i]));
    parts.target.push_back(path_tgt(paths[i]));
    parts.words.push_back(paths[i]);
  }
  for (int g = 0; g < ngen; ++g)
    if (basis_of_path[static_cast<std::size_t>(path_index.at({g}))] != n + g)
      throw std::logic_error("path_algebra: arrow did not land at its generator slot");

  const int dim = static_cast<int>(parts.basis_labels.size());
  parts.table.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (parts.target[static_cast<std::size_t>(i)] != parts.source[static_cast<std::size_t>(j)]) continue;
      Element<F> prod;
      if (i < n) {
        prod = {{j, F(1)}};
      } else if (j < n) {
        prod = {{i, F(1)}};
      } else {
        std::vector<int> w = parts.words[static_cast<std::size_t>(i)];
        const auto& w2 = parts.words[static_cast<std::size_t>(j)];
        w.insert(w.end(), w2.begin(), w2.end());
        for (const auto& [p, c] : normal_form[static_cast<std::size_t>(path_index.at(w))])
          prod.push_back({basis_of_path[static_cast<std::size_t>(p)], c});
        std::sort(prod.begin(), prod.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
      }
      if (!prod.empty()) parts.table[static_cast<std::size_t>(i)].push_back({j, std::move(prod)});
    }
  }
  return make_algebra(std::move(parts));
}

// ---------------------------------------------------------------------------
// Rebasing an arbitrary basic algebra to a monomial basis.

template <class F>
Rebased<F> rebase_to_monomial(const StructureSpec<F>& spec) {
  const int n = static_cast<int>(spec.vertex_labels.size());
  const int dim = static_cast<int>(spec.basis_labels.size());
  const Index D = dim;
  std::vector<char> is_idem(static_cast<std::size_t>(dim), 0);
  for (int e : spec.idempotents) is_idem[static_cast<std::size_t>(e)] = 1;
  auto src = [&](int b) { return spec.source[static_cast<std::size_t>(b)]; };
  auto tgt = [&](int b) { return spec.target[static_cast<std::size_t>(b)]; };

  // Old basis grouped by block, with local coordinates.
  std::vector<std::vector<int>> old_block(static_cast<std::size_t>(n * n));
  std::vector<int> old_pos(static_cast<std::size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    auto& blk = old_block[static_cast<std::size_t>(src(b) * n + tgt(b))];
    old_pos[static_cast<std::size_t>(b)] = static_cast<int>(blk.size());
    blk.push_back(b);
  }

  std::unordered_map<std::uint64_t, Element<F>> cache;
  auto mul = [&](int a, int b) -> const Element<F>& {
    std::uint64_t key = static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(dim) + static_cast<std::uint64_t>(b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, spec.multiply(a, b)).first->second;
  };
  std::vector<F> acc(static_cast<std::size_t>(dim), F(0));
  std::vector<char> touched(static_cast<std::size_t>(dim), 0);
  std::vector<int> support;
  auto times = [&](const Element<F>& x, const Element<F>& y) {
    for (const auto& a : x)
      for (const auto& b : y)
        if (tgt(a.index) == src(b.index)) add_scaled(acc, touched, support, mul(a.index, b.index), a.coeff * b.coeff);
    return collect(acc, touched, support);
  };
  auto local = [&](const Element<F>& x, int blk) {
    Vec<F> v = Vec<F>::Constant(static_cast<Index>(old_block[static_cast<std::size_t>(blk)].size()), F(0));
    for (const auto& t : x) {
      if (src(t.index) * n + tgt(t.index) != blk) throw std::logic_error("rebase: inhomogeneous product");
      v(old_pos[static_cast<std::size_t>(t.index)]) += t.coeff;
    }
    return v;
  };

  // rad^2 per block and a generator complement chosen among old basis elements.
  std::vector<SpanTracker<F>> rad2;
  for (int blk = 0; blk < n * n; ++blk) rad2.emplace_back(static_cast<Index>(old_block[static_cast<std::size_t>(blk)].size()));
  for (int a = 0; a < dim; ++a) {
    if (is_idem[static_cast<std::size_t>(a)]) continue;
    const int u = tgt(a);
    for (int t = 0; t < n; ++t)
      for (int b : old_block[static_cast<std::size_t>(u * n + t)]) {
        if (is_idem[static_cast<std::size_t>(b)]) continue;
        const Element<F>& p = mul(a, b);
        if (p.empty()) continue;
        int blk = src(a) * n + t;
        rad2[static_cast<std::size_t>(blk)].add(local(p, blk));
      }
  }
  struct Gen {
    int old;
    std::string label;
  };
  std::vector<Gen> gens;
  for (int blk = 0; blk < n * n; ++blk) {
    SpanTracker<F>& tr = rad2[static_cast<std::size_t>(blk)];
    for (int b : old_block[static_cast<std::size_t>(blk)]) {
      if (is_idem[static_cast<std::size_t>(b)]) continue;
      Vec<F> e = Vec<F>::Constant(static_cast<Index>(old_block[static_cast<std::size_t>(blk)].size()), F(0));
      e(old_pos[static_cast<std::size_t>(b)]) = F(1);
      if (tr.add(e)) gens.push_back({b, spec.basis_labels[static_cast<std::size_t>(b)]});
    }
  }
  std::stable_sort(gens.begin(), gens.end(), [](const Gen& x, const Gen& y) { return x.label < y.label; });
  const int ngen = static_cast<int>(gens.size());

  // Breadth-first monomials, greedily independent within each block.
  std::vector<SpanTracker<F>> span;
  for (int blk = 0; blk < n * n; ++blk) span.emplace_back(static_cast<Index>(old_block[static_cast<std::size_t>(blk)].size()));
  struct Mono {
    std::vector<int> word;
    int s, t;
    Element<F> old;
  };
  std::vector<Mono> monos;
  for (int v = 0; v < n; ++v) {
    int e = spec.idempotents[static_cast<std::size_t>(v)];
    if (src(e) != v || tgt(e) != v) throw std::logic_error("rebase: idempotent not on its own vertex");
    span[static_cast<std::size_t>(v * n + v)].add(local({{e, F(1)}}, v * n + v));
    monos.push_back({{}, v, v, {{e, F(1)}}});
  }
  for (int g = 0; g < ngen; ++g) {
    int b = gens[static_cast<std::size_t>(g)].old;
    span[static_cast<std::size_t>(src(b) * n + tgt(b))].add(local({{b, F(1)}}, src(b) * n + tgt(b)));
    monos.push_back({{g}, src(b), tgt(b), {{b, F(1)}}});
  }
  std::size_t level_begin = static_cast<std::size_t>(n), level_end = monos.size();
  while (level_begin < level_end) {
    std::vector<Mono> cand;
    for (std::size_t m = level_begin; m < level_end; ++m)
      for (int g = 0; g < ngen; ++g) {
        int b = gens[static_cast<std::size_t>(g)].old;
        if (src(b) != monos[m].t) continue;
        Mono c{monos[m].word, monos[m].s, tgt(b), times(monos[m].old, {{b, F(1)}})};
        c.word.push_back(g);
        cand.push_back(std::move(c));
      }
    std::sort(cand.begin(), cand.end(), [](const Mono& x, const Mono& y) { return x.word < y.word; });
    level_begin = monos.size();
    for (auto& c : cand) {
      if (c.old.empty()) continue;
      int blk = c.s * n + c.t;
      if (span[static_cast<std::size_t>(blk)].add(local(c.old, blk))) monos.push_back(std::move(c));
    }
    level_end = monos.size();
  }
  if (static_cast<int>(monos.size()) != dim)
    throw std::logic_error("rebase: monomials span " + std::to_string(monos.size()) + " of " + std::to_string(dim) +
                           " dimensions; radical hypothesis violated");

  // Order: idempotents, generators, then longer words lexicographically.
  std::vector<int> order(monos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin() + n + ngen, order.end(), [&](int x, int y) {
    const auto& a = monos[static_cast<std::size_t>(x)].word;
    const auto& b = monos[static_cast<std::size_t>(y)].word;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<int> new_index(monos.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  Rebased<F> out;
  AlgebraParts<F> parts;
  parts.name = spec.name;
  parts.vertex_labels = spec.vertex_labels;
  parts.num_generators = ngen;
  for (int i = 0; i < dim; ++i) {
    const Mono& m = monos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    std::string label;
    if (m.word.empty()) {
      label = spec.basis_labels[static_cast<std::size_t>(spec.idempotents[static_cast<std::size_t>(m.s)])];
    } else {
      for (int g : m.word) label += (label.empty() ? "" : "*") + gens[static_cast<std::size_t>(g)].label;
    }
    parts.basis_labels.push_back(label);
    parts.source.push_back(m.s);
    parts.target.push_back(m.t);
    parts.words.push_back(m.word);
    out.new_in_old.push_back(m.old);
  }

  // Per block: change of basis between old and new coordinates.
  std::vector<std::vector<int>> new_block(static_cast<std::size_t>(n * n));
  for (int i = 0; i < dim; ++i) new_block[static_cast<std::size_t>(parts.source[static_cast<std::size_t>(i)] * n + parts.target[static_cast<std::size_t>(i)])].push_back(i);
  std::vector<Mat<F>> to_new(static_cast<std::size_t>(n * n));
  out.old_in_new.resize(static_cast<std::size_t>(dim));
  for (int blk = 0; blk < n * n; ++blk) {
    const auto& nb = new_block[static_cast<std::size_t>(blk)];
    const Index k = static_cast<Index>(nb.size());
    if (k == 0) continue;
    Mat<F> v(k, k);
    for (Index c = 0; c < k; ++c) v.col(c) = local(out.new_in_old[static_cast<std::size_t>(nb[static_cast<std::size_t>(c)])], blk);
    auto inv = inverse<F>(v);
    if (!inv) throw std::logic_error("rebase: block change of basis is singular");
    to_new[static_cast<std::size_t>(blk)] = *inv;
    for (int b : old_block[static_cast<std::size_t>(blk)]) {
      Element<F> e;
      for (Index r = 0; r < k; ++r) {
        const F& c = (*inv)(r, old_pos[static_cast<std::size_t>(b)]);
        if (!is_zero(c)) e.push_back({nb[static_cast<std::size_t>(r)], c});
      }
      out.old_in_new[static_cast<std::size_t>(b)] = std::move(e);
    }
  }
  auto to_new_coords = [&](const Element<F>& old, int blk) {
    Element<F> e;
    if (old.empty()) return e;
    Vec<F> x = multiply<F>(to_new[static_cast<std::size_t>(blk)], local(old, blk));
    const auto& nb = new_block[static_cast<std::size_t>(blk)];
    for (Index r = 0; r < x.size(); ++r)
      if (!is_zero(x(r))) e.push_back({nb[static_cast<std::size_t>(r)], x(r)});
    return e;
  };

  // Right multiplication by generators in new coordinates, then words by folding.
  std::vector<std::vector<Element<F>>> by_gen(static_cast<std::size_t>(dim), std::vector<Element<F>>(static_cast<std::size_t>(ngen)));
  for (int i = 0; i < dim; ++i)
    for (int g = 0; g < ngen; ++g) {
      int b = gens[static_cast<std::size_t>(g)].old;
      if (parts.target[static_cast<std::size_t>(i)] != src(b)) continue;
      by_gen[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] =
          to_new_coords(times(out.new_in_old[static_cast<std::size_t>(i)], {{b, F(1)}}), parts.source[static_cast<std::size_t>(i)] * n + tgt(b));
    }
  auto right_gen = [&](const Element<F>& x, int g) {
    for (const auto& t : x) add_scaled(acc, touched, support, by_gen[static_cast<std::size_t>(t.index)][static_cast<std::size_t>(g)], t.coeff);
    return collect(acc, touched, support);
  };
  std::map<std::vector<int>, int> index_of_word;
  for (int i = n; i < dim; ++i) index_of_word[parts.words[static_cast<std::size_t>(i)]] = i;
  parts.table.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    std::vector<Element<F>> prod(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      if (parts.target[static_cast<std::size_t>(i)] != parts.source[static_cast<std::size_t>(j)]) continue;
      const auto& w = parts.words[static_cast<std::size_t>(j)];
      if (w.empty()) {
        prod[static_cast<std::size_t>(j)] = {{i, F(1)}};
      } else {
        std::vector<int> prefix(w.begin(), w.end() - 1);
        const Element<F>& base = prefix.empty() ? Element<F>{{i, F(1)}} : prod[static_cast<std::size_t>(index_of_word.at(prefix))];
        prod[static_cast<std::size_t>(j)] = right_gen(base, w.back());
      }
    }
    for (int j = 0; j < dim; ++j)
      if (!prod[static_cast<std::size_t>(j)].empty()) parts.table[static_cast<std::size_t>(i)].push_back({j, std::move(prod[static_cast<std::size_t>(j)])});
  }
  out.algebra = make_algebra(std::move(parts));
  return out;
}

// ---------------------------------------------------------------------------

template <class F>
RelationSet extract_relations(const Algebra<F>& a) {
  const int n = a.num_vertices();
  const int ngen = a.num_generators();
  if (!a.gabriel_quiver().is_acyclic()) throw std::invalid_argument("extract_relations: quiver has cycles");
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> frontier;
  for (int g = 0; g < ngen; ++g) frontier.push_back({g});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      for (int g = 0; g < ngen; ++g)
        if (a.generator_source(g) == a.generator_target(p.back())) {
          auto e = p;
          e.push_back(g);
          next.push_back(std::move(e));
        }
      if (p.size() >= 2) paths.push_back(p);
    }
    frontier = std::move(next);
  }
  auto psrc = [&](const std::vector<int>& p) { return a.generator_source(p.front()); };
  auto ptgt = [&](const std::vector<int>& p) { return a.generator_target(p.back()); };
  std::map<std::vector<int>, int> pos;
  std::vector<std::vector<std::vector<int>>> block(static_cast<std::size_t>(n * n));
  for (auto& p : paths) {
    auto& b = block[static_cast<std::size_t>(psrc(p) * n + ptgt(p))];
    pos[p] = static_cast<int>(b.size());
    b.push_back(p);
  }
  std::vector<Mat<F>> ideal(static_cast<std::size_t>(n * n));
  for (int blk = 0; blk < n * n; ++blk) {
    const auto& bp = block[static_cast<std::size_t>(blk)];
    if (bp.empty()) continue;
    Mat<F> eval = zeros<F>(a.dim(), static_cast<Index>(bp.size()));
    for (std::size_t c = 0; c < bp.size(); ++c) {
      Element<F> v = a.basis_element(a.generator_basis(bp[c][0]));
      for (std::size_t k = 1; k < bp[c].size(); ++k) v = a.multiply(v, a.basis_element(a.generator_basis(bp[c][k])));
      for (const auto& t : v) eval(t.index, static_cast<Index>(c)) = t.coeff;
    }
    ideal[static_cast<std::size_t>(blk)] = kernel_basis<F>(eval);
  }
  RelationSet out;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int blk = s * n + t;
      const auto& bp = block[static_cast<std::size_t>(blk)];
      const Mat<F>& ker = ideal[static_cast<std::size_t>(blk)];
      if (ker.cols() == 0) continue;
      SpanTracker<F> dec(static_cast<Index>(bp.size()));
      for (int g = 0; g < ngen; ++g) {
        // g * r for r in I(target g, t), and r * g for r in I(s, source g).
        if (a.generator_source(g) == s) {
          int u = a.generator_target(g);
          const auto& sub = block[static_cast<std::size_t>(u * n + t)];
          const Mat<F>& kr = ideal[static_cast<std::size_t>(u * n + t)];
          for (Index c = 0; c < kr.cols(); ++c) {
            Vec<F> v = Vec<F>::Constant(static_cast<Index>(bp.size()), F(0));
            for (std::size_t k = 0; k < sub.size(); ++k) {
              if (is_zero(kr(static_cast<Index>(k), c))) continue;
              std::vector<int> w{g};
              w.insert(w.end(), sub[k].begin(), sub[k].end());
              v(pos.at(w)) += kr(static_cast<Index>(k), c);
            }
            dec.add(v);
          }
        }
        if (a.generator_target(g) == t) {
          int u = a.generator_source(g);
          const auto& sub = block[static_cast<std::size_t>(s * n + u)];
          const Mat<F>& kr = ideal[static_cast<std::size_t>(s * n + u)];
          for (Index c = 0; c < kr.cols(); ++c) {
            Vec<F> v = Vec<F>::Constant(static_cast<Index>(bp.size()), F(0));
            for (std::size_t k = 0; k < sub.size(); ++k) {
              if (is_zero(kr(static_cast<Index>(k), c))) continue;
              std::vector<int> w = sub[k];
              w.push_back(g);
              v(pos.at(w)) += kr(static_cast<Index>(k), c);
            }
            dec.add(v);
          }
        }
      }
      for (Index c = 0; c < ker.cols(); ++c) {
        if (!dec.add(ker.col(c))) continue;
        Relation r;
        for (std::size_t k = 0; k < bp.size(); ++k) {
          const F& coeff = ker(static_cast<Index>(k), c);
          if (is_zero(coeff)) continue;
          PathTerm term;
          for (int g : bp[k]) term.path.push_back(a.generator_label(g));
          term.coeff = Rational::parse(coeff.str());
          r.push_back(std::move(term));
        }
        out.push_back(std::move(r));
      }
    }
  return out;
}

#define TRIREP_INSTANTIATE(F)                                                  \
  template class Algebra<F>;                                                   \
  template Algebra<F> make_algebra<F>(AlgebraParts<F>);                       \
  template Algebra<F> path_algebra<F>(const QuiverPresentation&);             \
  template Rebased<F> rebase_to_monomial<F>(const StructureSpec<F>&);         \
  template RelationSet extract_relations<F>(const Algebra<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
