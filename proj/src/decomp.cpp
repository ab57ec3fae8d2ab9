#include "trirep/decomp.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trirep {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }
std::size_t sz(int i) { return static_cast<std::size_t>(i); }

template <class F>
using Table = std::vector<std::vector<Vec<F>>>;

template <class F>
Vec<F> table_multiply(const Table<F>& t, const Vec<F>& x, const Vec<F>& y) {
  const Index n = x.size();
  Vec<F> out = Vec<F>::Constant(n, F(0));
  for (Index i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (Index j = 0; j < n; ++j) {
      if (is_zero(y(j))) continue;
      F c = x(i) * y(j);
      const Vec<F>& p = t[sz(i)][sz(j)];
      for (Index k = 0; k < n; ++k)
        if (!is_zero(p(k))) out(k) += c * p(k);
    }
  }
  return out;
}

// Trace form radical of a structure-constant table.
template <class F>
Mat<F> table_radical(const Table<F>& t) {
  const Index n = static_cast<Index>(t.size());
  Vec<F> tr = Vec<F>::Constant(n, F(0));  // tr(L_l) = sum_j (b_l b_j)_j
  for (Index l = 0; l < n; ++l)
    for (Index j = 0; j < n; ++j) tr(l) += t[sz(l)][sz(j)](j);
  Mat<F> form(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      F s(0);
      const Vec<F>& p = t[sz(i)][sz(j)];
      for (Index k = 0; k < n; ++k)
        if (!is_zero(p(k)) && !is_zero(tr(k))) s += p(k) * tr(k);
      form(i, j) = s;
    }
  return kernel_basis<F>(form);
}

// A / R on the complement of R spanned by the first basis vectors not in R.
template <class F>
struct QuotientTable {
  std::vector<Index> lift;  // basis index in A of each quotient basis vector
  Mat<F> project;           // rows: quotient coordinates of an A vector
  Table<F> products;
  Vec<F> one;
  Index dim() const { return static_cast<Index>(lift.size()); }
  Vec<F> reduce(const Vec<F>& x) const { return multiply<F>(project, x); }
};

template <class F>
QuotientTable<F> quotient_table(const Table<F>& t, const Vec<F>& one, const Mat<F>& rad) {
  const Index n = static_cast<Index>(t.size());
  QuotientTable<F> q;
  Mat<F> cur = rad;
  Index r = rank<F>(cur);
  for (Index i = 0; i < n; ++i) {
    Mat<F> trial(n, cur.cols() + 1);
    trial << cur, identity<F>(n).col(i);
    Index rr = rank<F>(trial);
    if (rr > r) {
      cur = trial;
      r = rr;
      q.lift.push_back(i);
    }
  }
  Mat<F> inv = inverse<F>(cur).value();
  q.project = inv.bottomRows(static_cast<Index>(q.lift.size()));
  const Index m = q.dim();
  q.products.assign(sz(m), std::vector<Vec<F>>(sz(m)));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) q.products[sz(i)][sz(j)] = q.reduce(t[sz(q.lift[sz(i)])][sz(q.lift[sz(j)])]);
  q.one = q.reduce(one);
  return q;
}

template <class F>
Table<F> table_of(const Algebra<F>& a) {
  const int n = a.dim();
  Table<F> t(sz(n), std::vector<Vec<F>>(sz(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element<F>* p = a.product(i, j);
      t[sz(i)][sz(j)] = p ? element_to_dense<F>(*p, n) : Vec<F>(Vec<F>::Constant(n, F(0)));
    }
  return t;
}

template <class F>
void check_semisimple_quotient(const Table<F>& t, const Vec<F>& one, const Mat<F>& rad) {
  if (rad.cols() == static_cast<Index>(t.size())) return;
  QuotientTable<F> q = quotient_table<F>(t, one, rad);
  if (table_radical<F>(q.products).cols() != 0)
    throw std::logic_error("radical_of_algebra: quotient by the trace radical is not semisimple");
}

// ---------------------------------------------------------------------------
// Roots of polynomials given by coefficients c_0 .. c_d.

template <class F>
F evaluate(const std::vector<F>& c, const F& x) {
  F v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) fac.push_back({p, e});
  }
  if (m > 1) fac.push_back({m, 1});
  out.push_back(1);
  for (const auto& [p, e] : fac) {
    std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Rational> find_root(const std::vector<Rational>& c) {
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(x.numerator() * (l / x.denominator()));
  std::size_t lo = 0;
  while (lo < z.size() && z[lo] == 0) ++lo;
  if (lo > 0) return Rational(0);
  if (z.size() < 2) return std::nullopt;
  auto ps = divisors(z.front());
  auto qs = divisors(z.back());
  for (const auto& q : qs)
    for (const auto& p : ps)
      for (int s : {1, -1}) {
        mpq_class r(mpz_class(s * p), q);
        r.canonicalize();
        Rational cand(r);
        if (evaluate<Rational>(c, cand).is_zero()) return cand;
      }
  return std::nullopt;
}

std::optional<F101> find_root(const std::vector<F101>& c) {
  for (int v = 0; v < 101; ++v)
    if (evaluate<F101>(c, F101(v)).is_zero()) return F101(v);
  return std::nullopt;
}

template <class F>
Mat<F> matrix_power(Mat<F> m, Index e) {
  Mat<F> out = identity<F>(m.rows());
  while (e > 0) {
    if (e & 1) out = multiply<F>(out, m);
    e >>= 1;
    if (e) m = multiply<F>(m, m);
  }
  return out;
}

// Inside the corner algebra spanned by the columns of `corner` (unit u),
// find an idempotent strictly between 0 and u, or nothing.
template <class F>
std::optional<Vec<F>> split_corner(const QuotientTable<F>& s, const Mat<F>& corner, const Vec<F>& u) {
  const Index c = corner.cols();
  auto coords = [&](const Vec<F>& v) { return solve<F>(corner, Mat<F>(v)).value(); };
  std::vector<Vec<F>> candidates;
  for (Index i = 0; i < c; ++i) candidates.push_back(corner.col(i));
  for (Index i = 0; i < c; ++i)
    for (Index j = i + 1; j < c; ++j) candidates.push_back(corner.col(i) + corner.col(j));
  Mat<F> uc = coords(u);
  for (const auto& x : candidates) {
    Mat<F> lx(c, c);
    for (Index j = 0; j < c; ++j) lx.col(j) = coords(table_multiply<F>(s.products, x, corner.col(j)));
    std::vector<F> shifts{F(0)};
    if (is_invertible<F>(lx)) {
      // minimal polynomial of x from the powers u, x, x^2, ...
      std::vector<Vec<F>> pw{uc.col(0)};
      std::vector<F> poly;
      while (true) {
        Mat<F> k(c, static_cast<Index>(pw.size()));
        for (std::size_t i = 0; i < pw.size(); ++i) k.col(static_cast<Index>(i)) = pw[i];
        Vec<F> next = multiply<F>(lx, Vec<F>(pw.back()));
        auto sol = solve<F>(k, Mat<F>(next));
        if (sol) {
          for (Index i = 0; i < sol->rows(); ++i) poly.push_back(-(*sol)(i, 0));
          poly.push_back(F(1));
          break;
        }
        pw.push_back(next);
      }
      if (poly.size() <= 2) continue;  // x is a scalar multiple of u
      auto root = find_root(poly);
      if (!root) continue;
      shifts = {*root};
    }
    for (const F& lambda : shifts) {
      Mat<F> y = lx - identity<F>(c) * lambda;
      Mat<F> p = matrix_power<F>(y, c);
      Mat<F> im = column_basis<F>(p);
      Mat<F> ker = kernel_basis<F>(p);
      if (im.cols() == 0 || ker.cols() == 0) continue;
      Mat<F> both(c, c);
      both << ker, im;
      Mat<F> alpha = solve<F>(both, uc).value();
      Vec<F> bc = multiply<F>(im, Vec<F>(alpha.bottomRows(im.cols()).col(0)));
      Vec<F> b = multiply<F>(corner, bc);
      if (table_multiply<F>(s.products, b, b) != b) throw std::logic_error("decompose: Fitting idempotent is not idempotent");
      return b;
    }
  }
  return std::nullopt;
}

template <class F>
Mat<F> corner_of(const QuotientTable<F>& s, const Vec<F>& u) {
  const Index n = s.dim();
  Mat<F> cols(n, n);
  for (Index i = 0; i < n; ++i) {
    Vec<F> e = Vec<F>::Constant(n, F(0));
    e(i) = F(1);
    cols.col(i) = table_multiply<F>(s.products, table_multiply<F>(s.products, u, e), u);
  }
  return column_basis<F>(cols);
}

// Primitive idempotent of End/rad, refined inside successive corners.
template <class F>
Vec<F> primitive_idempotent(const QuotientTable<F>& s, const std::string& what) {
  Vec<F> u = s.one;
  Mat<F> corner = identity<F>(s.dim());
  while (corner.cols() > 1) {
    auto b = split_corner<F>(s, corner, u);
    if (!b)
      throw SchurViolation("End/rad of a summand of " + what + " has dimension " + std::to_string(corner.cols()) +
                           " and no idempotent splits it");
    u = *b;
    corner = corner_of<F>(s, u);
  }
  return u;
}

template <class F>
Morphism<F> newton_lift(const Morphism<F>& start) {
  Morphism<F> e = start;
  for (int it = 0; it < 64; ++it) {
    Morphism<F> e2 = compose<F>(e, e);
    bool done = true;
    for (std::size_t v = 0; v < e.blocks().size() && done; ++v)
      if (e2.blocks()[v] != e.blocks()[v]) done = false;
    if (done) return e;
    Morphism<F> e3 = compose<F>(e2, e);
    e = e2.scaled(F(3)) - e3.scaled(F(2));
  }
  throw std::logic_error("decompose: idempotent lifting did not converge");
}

template <class F>
std::string describe(const Module<F>& m) {
  std::string s = "module with dimension vector (";
  for (std::size_t i = 0; i < m.dimension_vector().size(); ++i)
    s += (i ? "," : "") + std::to_string(m.dimension_vector()[i]);
  return s + ")";
}

template <class F>
void split_into(const Module<F>& m, const Morphism<F>& inc, const Morphism<F>& proj, std::vector<Summand<F>>& out) {
  if (m.is_zero()) return;
  EndomorphismAlgebra<F> e = endomorphism_algebra<F>(m);
  if (e.dim() == 1) {
    out.push_back({m, inc, proj});
    return;
  }
  Mat<F> rad = table_radical<F>(e.products);
  if (rad.cols() == e.dim() - 1) {
    out.push_back({m, inc, proj});
    return;
  }
  QuotientTable<F> s = quotient_table<F>(e.products, e.one(), rad);
  Vec<F> u = primitive_idempotent<F>(s, describe(m));
  Vec<F> start = Vec<F>::Constant(e.dim(), F(0));
  for (Index j = 0; j < s.dim(); ++j) start(s.lift[sz(j)]) += u(j);
  Morphism<F> idem = newton_lift<F>(e.realize(start));
  ImageFactorization<F> x = image<F>(idem);
  ImageFactorization<F> rest = image<F>(Morphism<F>::identity(m) - idem);
  out.push_back({x.module, compose<F>(inc, x.inclusion), compose<F>(x.onto, proj)});
  split_into<F>(rest.module, compose<F>(inc, rest.inclusion), compose<F>(rest.onto, proj), out);
}

}  // namespace

template <class F>
Vec<F> EndomorphismAlgebra<F>::multiply(const Vec<F>& x, const Vec<F>& y) const {
  return table_multiply<F>(products, x, y);
}

template <class F>
Morphism<F> EndomorphismAlgebra<F>::realize(const Vec<F>& x) const {
  return linear_combination<F>(basis, x, module, module);
}

template <class F>
std::vector<Mat<F>> EndomorphismAlgebra<F>::left_multiplications() const {
  std::vector<Mat<F>> out;
  for (Index i = 0; i < dim(); ++i) {
    Mat<F> l(dim(), dim());
    for (Index j = 0; j < dim(); ++j) l.col(j) = products[sz(i)][sz(j)];
    out.push_back(std::move(l));
  }
  return out;
}

template <class F>
EndomorphismAlgebra<F> endomorphism_algebra(const Module<F>& m) {
  EndomorphismAlgebra<F> e;
  e.module = m;
  e.basis = hom_space<F>(m, m);
  e.coords = HomCoordinates<F>(e.basis);
  e.products.assign(e.basis.size(), std::vector<Vec<F>>(e.basis.size()));
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    for (std::size_t j = 0; j < e.basis.size(); ++j) e.products[i][j] = e.coords(compose<F>(e.basis[i], e.basis[j]));
  return e;
}

template <class F>
Mat<F> radical_basis(const std::vector<Mat<F>>& left_mult, const Vec<F>& one) {
  Table<F> t(left_mult.size(), std::vector<Vec<F>>(left_mult.size()));
  for (std::size_t i = 0; i < left_mult.size(); ++i)
    for (std::size_t j = 0; j < left_mult.size(); ++j) t[i][j] = left_mult[i].col(static_cast<Index>(j));
  Mat<F> rad = table_radical<F>(t);
  check_semisimple_quotient<F>(t, one, rad);
  return rad;
}

template <class F>
Mat<F> radical_of_algebra(const Algebra<F>& a) {
  Table<F> t = table_of<F>(a);
  Mat<F> rad = table_radical<F>(t);
  check_semisimple_quotient<F>(t, element_to_dense<F>(a.one(), a.dim()), rad);
  return rad;
}

template <class F>
Mat<F> radical_of_algebra(const EndomorphismAlgebra<F>& e) {
  Mat<F> rad = table_radical<F>(e.products);
  check_semisimple_quotient<F>(e.products, e.one(), rad);
  return rad;
}

template <class F>
bool Decomposition<F>::verify() const {
  if (pieces.empty()) return module.is_zero();
  Morphism<F> sum = Morphism<F>::zero(module, module);
  std::vector<Morphism<F>> w;
  for (const auto& p : pieces) {
    w.push_back(p.witness());
    sum = sum + w.back();
    if (!compose<F>(p.projection, p.inclusion).is_iso()) return false;
  }
  Morphism<F> id = Morphism<F>::identity(module);
  for (std::size_t v = 0; v < id.blocks().size(); ++v)
    if (sum.blocks()[v] != id.blocks()[v]) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      Morphism<F> c = compose<F>(w[i], w[j]);
      if (i != j && !c.is_zero()) return false;
      if (i == j)
        for (std::size_t v = 0; v < c.blocks().size(); ++v)
          if (c.blocks()[v] != w[i].blocks()[v]) return false;
    }
  return true;
}

template <class F>
bool same_invariants(const Module<F>& m, const Module<F>& n) {
  return m.dimension_vector() == n.dimension_vector() && top_dims<F>(m) == top_dims<F>(n) &&
         socle_dims<F>(m) == socle_dims<F>(n);
}

template <class F>
Decomposition<F> decompose(const Module<F>& m) {
  Decomposition<F> d;
  d.module = m;
  std::vector<Summand<F>> raw;
  split_into<F>(m, Morphism<F>::identity(m), Morphism<F>::identity(m), raw);
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = raw[a].module;
    const auto& y = raw[b].module;
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x.dimension_vector() < y.dimension_vector();
  });
  for (std::size_t i : order) d.pieces.push_back(raw[i]);
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    bool placed = false;
    for (auto& c : d.classes) {
      const auto& rep = d.pieces[sz(c.representative)].module;
      if (rep.dimension_vector() != d.pieces[i].module.dimension_vector()) continue;
      if (indecomposable_iso<F>(rep, d.pieces[i].module)) {
        c.members.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) d.classes.push_back({static_cast<int>(i), {static_cast<int>(i)}});
  }
  return d;
}

template <class F>
bool is_indecomposable(const Module<F>& m) {
  if (m.is_zero()) return false;
  EndomorphismAlgebra<F> e = endomorphism_algebra<F>(m);
  if (e.dim() == 1) return true;
  Mat<F> rad = table_radical<F>(e.products);
  if (rad.cols() == e.dim() - 1) return true;
  QuotientTable<F> s = quotient_table<F>(e.products, e.one(), rad);
  if (!split_corner<F>(s, identity<F>(s.dim()), s.one))
    throw SchurViolation("End/rad of " + describe(m) + " has dimension " + std::to_string(s.dim()) +
                         " and contains no idempotent");
  return false;
}

template <class F>
std::optional<Morphism<F>> indecomposable_iso(const Module<F>& x, const Module<F>& y) {
  if (x.dimension_vector() != y.dimension_vector()) return std::nullopt;
  auto fs = hom_space<F>(x, y);
  if (fs.empty()) return std::nullopt;
  for (const auto& f : fs)
    if (f.is_iso()) return f;
  Vec<F> c(static_cast<Index>(fs.size()));
  for (Index i = 0; i < c.size(); ++i) c(i) = F(static_cast<long long>(i + 1));
  Morphism<F> generic = linear_combination<F>(fs, c, x, y);
  if (generic.is_iso()) return generic;
  auto gs = hom_space<F>(y, x);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (compose<F>(g, f).is_iso()) return f;
  return std::nullopt;
}

template <class F>
std::optional<Morphism<F>> iso_test(const Module<F>& m, const Module<F>& n) {
  if (!m.algebra().same_as(n.algebra())) throw std::invalid_argument("iso_test: owner mismatch");
  if (m.dimension_vector() != n.dimension_vector()) return std::nullopt;
  if (m.is_zero()) return Morphism<F>::identity(m);
  Decomposition<F> dm = decompose<F>(m), dn = decompose<F>(n);
  if (dm.pieces.size() != dn.pieces.size()) return std::nullopt;
  std::vector<char> used(dn.pieces.size(), 0);
  Morphism<F> phi = Morphism<F>::zero(m, n);
  for (const auto& pm : dm.pieces) {
    bool found = false;
    for (std::size_t j = 0; j < dn.pieces.size() && !found; ++j) {
      if (used[j]) continue;
      auto iso = indecomposable_iso<F>(pm.module, dn.pieces[j].module);
      if (!iso) continue;
      used[j] = 1;
      found = true;
      phi = phi + compose<F>(dn.pieces[j].inclusion, compose<F>(*iso, pm.projection));
    }
    if (!found) return std::nullopt;
  }
  if (!phi.is_iso() || !phi.is_intertwining()) throw std::logic_error("iso_test: assembled map is not an isomorphism");
  return phi;
}

#define TRIREP_INSTANTIATE(F)                                                                     \
  template struct EndomorphismAlgebra<F>;                                                         \
  template struct Decomposition<F>;                                                               \
  template EndomorphismAlgebra<F> endomorphism_algebra<F>(const Module<F>&);                      \
  template Mat<F> radical_basis<F>(const std::vector<Mat<F>>&, const Vec<F>&);                    \
  template Mat<F> radical_of_algebra<F>(const Algebra<F>&);                                       \
  template Mat<F> radical_of_algebra<F>(const EndomorphismAlgebra<F>&);                           \
  template Decomposition<F> decompose<F>(const Module<F>&);                                       \
  template bool is_indecomposable<F>(const Module<F>&);                                           \
  template std::optional<Morphism<F>> indecomposable_iso<F>(const Module<F>&, const Module<F>&);  \
  template std::optional<Morphism<F>> iso_test<F>(const Module<F>&, const Module<F>&);            \
  template bool same_invariants<F>(const Module<F>&, const Module<F>&);

TRIREP_INSTANTIATE(Rational)
TRIREP_INSTANTIATE(F101)

}  // namespace trirep
