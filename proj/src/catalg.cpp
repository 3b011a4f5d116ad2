#include "zc/catalg.hpp"

#include <algorithm>
#include <set>

#include "zc/error.hpp"

namespace zc {

namespace {

const Field kQ = Field::rationals();

Vec unit_vector(int n, int i) {
  Vec v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Vec canonical(Vec v) {
  for (auto& x : v) x.canonicalize();
  return v;
}

Vec flatten(const Matrix& m) {
  Vec v;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

Matrix unflatten(const Vec& v, int rows, int cols) {
  Matrix m(kQ, rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<std::size_t>(i * cols + j)];
  }
  return m;
}

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

Matrix poly_at(const Poly& p, const Matrix& x) {
  const int n = x.rows();
  Matrix r(kQ, n, n);
  for (int d = p.degree(); d >= 0; --d) r = r * x + Matrix::identity(kQ, n).scaled(p.coeff(d));
  return r;
}

std::string obj_pair(const FinCategory& c, int x, int y) { return "Hom(" + c.label(x) + ", " + c.label(y) + ")"; }

Matrix functor_map(const FinCategory& c, const CatFunctor& F, int x, int y, const Vec& v) {
  Matrix m(kQ, F.dims[static_cast<std::size_t>(y)], F.dims[static_cast<std::size_t>(x)]);
  for (int i = 0; i < c.hom_dim(x, y); ++i) {
    if (sgn(v[static_cast<std::size_t>(i)]) == 0) continue;
    m = m + F.maps.at({x, y, i}).scaled(v[static_cast<std::size_t>(i)]);
  }
  return m;
}

std::vector<Matrix> action_span(const CatModule& M) {
  std::vector<Vec> flat;
  for (int p = 0; p < M.algebra().dim(); ++p) {
    if (!M.action(p).is_zero()) flat.push_back(flatten(M.action(p)));
  }
  std::vector<Matrix> out;
  for (const auto& v : span_basis(kQ, M.dim() * M.dim(), flat)) out.push_back(unflatten(v, M.dim(), M.dim()));
  return out;
}

Subspace spin(int n, const std::vector<Matrix>& gens, const std::vector<Vec>& vs) {
  Subspace s = span_basis(kQ, n, vs);
  while (true) {
    std::vector<Vec> all = s;
    for (const auto& g : gens) {
      for (const auto& v : s) all.push_back(g.apply(v));
    }
    Subspace next = span_basis(kQ, n, all);
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

void require_non_degenerate(const CatModule& M) {
  if (!M.is_non_degenerate()) fail(ErrorCode::DegenerateModule, "sum of identities does not act as the identity (AM != M)");
}

std::vector<Matrix> radical_actions(const CatModule& M) {
  std::vector<Matrix> out;
  for (const auto& j : algebra_radical(M.algebra()).basis) out.push_back(M.action(j));
  return out;
}

}  // namespace

FinCategory FinCategory::create(Data d) {
  const std::size_t n = d.objects.size();
  if (d.hom_dim.size() != n || d.identity.size() != n) fail(ErrorCode::Precondition, "category data sizes disagree with the object count");
  for (const auto& row : d.hom_dim) {
    if (row.size() != n) fail(ErrorCode::Precondition, "hom dimension table is not square");
    for (int v : row) {
      if (v < 0) fail(ErrorCode::Precondition, "negative hom dimension");
    }
  }
  FinCategory c;
  c.d_ = std::move(d);
  const int N = c.num_objects();
  for (int x = 0; x < N; ++x) {
    auto& id = c.d_.identity[static_cast<std::size_t>(x)];
    if (static_cast<int>(id.size()) != c.hom_dim(x, x)) fail(ErrorCode::Precondition, "identity of " + c.label(x) + " has the wrong length");
    id = canonical(id);
  }
  for (auto& [t, tensor] : c.d_.compose) {
    auto [x, y, z] = t;
    if (x < 0 || y < 0 || z < 0 || x >= N || y >= N || z >= N) fail(ErrorCode::Precondition, "composition triple out of range");
    if (static_cast<int>(tensor.size()) != c.hom_dim(x, y) * c.hom_dim(y, z)) {
      fail(ErrorCode::Precondition, "composition tensor for " + c.label(x) + ", " + c.label(y) + ", " + c.label(z) + " has the wrong size");
    }
    for (auto& v : tensor) {
      if (static_cast<int>(v.size()) != c.hom_dim(x, z)) fail(ErrorCode::Precondition, "composite has the wrong length");
      v = canonical(v);
    }
  }
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      for (int i = 0; i < c.hom_dim(x, y); ++i) {
        Vec f = unit_vector(c.hom_dim(x, y), i);
        if (c.compose(x, x, y, c.identity(x), f) != f || c.compose(x, y, y, f, c.identity(y)) != f) {
          fail(ErrorCode::IdentityViolation, "identity law fails for basis morphism " + std::to_string(i) + " of " + obj_pair(c, x, y));
        }
      }
    }
  }
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      for (int z = 0; z < N; ++z) {
        for (int w = 0; w < N; ++w) {
          const int a = c.hom_dim(x, y), b = c.hom_dim(y, z), e = c.hom_dim(z, w);
          for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
              for (int l = 0; l < e; ++l) {
                Vec f = unit_vector(a, i), g = unit_vector(b, j), h = unit_vector(e, l);
                if (c.compose(x, z, w, c.compose(x, y, z, f, g), h) != c.compose(x, y, w, f, c.compose(y, z, w, g, h))) {
                  fail(ErrorCode::AssociativityViolation,
                       "associativity fails on basis triple (" + std::to_string(i) + " in " + obj_pair(c, x, y) + ", " +
                           std::to_string(j) + " in " + obj_pair(c, y, z) + ", " + std::to_string(l) + " in " +
                           obj_pair(c, z, w) + ")");
                }
              }
            }
          }
        }
      }
    }
  }
  return c;
}

Vec FinCategory::compose(int x, int y, int z, const Vec& f, const Vec& g) const {
  const int a = hom_dim(x, y), b = hom_dim(y, z), c = hom_dim(x, z);
  Vec out(static_cast<std::size_t>(c), Rational(0));
  auto it = d_.compose.find({x, y, z});
  if (it == d_.compose.end()) return out;
  for (int i = 0; i < a; ++i) {
    if (sgn(f[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < b; ++j) {
      if (sgn(g[static_cast<std::size_t>(j)]) == 0) continue;
      const Rational coef = f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
      const Vec& t = it->second[static_cast<std::size_t>(i * b + j)];
      for (int k = 0; k < c; ++k) out[static_cast<std::size_t>(k)] += coef * t[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

CategoryAlgebra CategoryAlgebra::build(const FinCategory& c) {
  CategoryAlgebra A;
  A.c_ = c;
  const int N = c.num_objects();
  A.offset_.assign(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), 0));
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      A.offset_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = A.dim();
      for (int i = 0; i < c.hom_dim(x, y); ++i) A.basis_.push_back({x, y, i});
    }
  }
  // Associativity and identity laws were checked on the category; the unit
  // is checked here.
  const Vec u = A.unit();
  for (int p = 0; p < A.dim(); ++p) {
    Vec e = A.basis_vector(p);
    if (A.mul(u, e) != e || A.mul(e, u) != e) fail(ErrorCode::IdentityViolation, "sum of identities is not a unit");
  }
  return A;
}

int CategoryAlgebra::offset(int x, int y) const { return offset_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }

Vec CategoryAlgebra::basis_vector(int p) const { return unit_vector(dim(), p); }

Vec CategoryAlgebra::identity(int x) const {
  Vec v = zero();
  const Vec& id = c_.identity(x);
  for (std::size_t i = 0; i < id.size(); ++i) v[static_cast<std::size_t>(offset(x, x)) + i] = id[i];
  return v;
}

Vec CategoryAlgebra::unit() const {
  Vec v = zero();
  for (int x = 0; x < c_.num_objects(); ++x) v = vec_add(kQ, v, identity(x));
  return v;
}

Vec CategoryAlgebra::mul(const Vec& a, const Vec& b) const {
  ensure(static_cast<int>(a.size()) == dim() && static_cast<int>(b.size()) == dim(), "algebra element size mismatch");
  const int N = c_.num_objects();
  auto block = [&](const Vec& v, int x, int y) {
    const auto off = static_cast<std::ptrdiff_t>(offset(x, y));
    return Vec(v.begin() + off, v.begin() + off + c_.hom_dim(x, y));
  };
  Vec out = zero();
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      Vec ab = block(a, x, y);
      if (ab.empty() || vec_is_zero(ab)) continue;
      for (int w = 0; w < N; ++w) {
        Vec bb = block(b, w, x);
        if (bb.empty() || vec_is_zero(bb)) continue;
        Vec r = c_.compose(w, x, y, bb, ab);
        for (std::size_t i = 0; i < r.size(); ++i) out[static_cast<std::size_t>(offset(w, y)) + i] += r[i];
      }
    }
  }
  return out;
}

Matrix CategoryAlgebra::left_mult(const Vec& a) const {
  std::vector<Vec> cols;
  for (int q = 0; q < dim(); ++q) cols.push_back(mul(a, basis_vector(q)));
  return Matrix::from_columns(kQ, dim(), cols);
}

std::vector<int> CategoryAlgebra::support(const Vec& a) const {
  std::set<int> s;
  for (int p = 0; p < dim(); ++p) {
    if (sgn(a[static_cast<std::size_t>(p)]) == 0) continue;
    s.insert(basis_[static_cast<std::size_t>(p)].x);
    s.insert(basis_[static_cast<std::size_t>(p)].y);
  }
  return {s.begin(), s.end()};
}

Vec covering_idempotent(const CategoryAlgebra& A, const std::vector<Vec>& B) {
  std::set<int> objs;
  for (const auto& a : B) {
    for (int x : A.support(a)) objs.insert(x);
  }
  Vec e = A.zero();
  for (int x : objs) e = vec_add(kQ, e, A.identity(x));
  ensure(A.mul(e, e) == e, "covering element is not idempotent");
  for (const auto& a : B) ensure(A.mul(e, a) == a, "covering idempotent does not fix an element");
  return e;
}

void validate_functor(const FinCategory& c, const CatFunctor& F) {
  const int N = c.num_objects();
  if (static_cast<int>(F.dims.size()) != N) fail(ErrorCode::Precondition, "functor dimension list does not match the objects");
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      for (int i = 0; i < c.hom_dim(x, y); ++i) {
        auto it = F.maps.find({x, y, i});
        if (it == F.maps.end()) fail(ErrorCode::Precondition, "functor is missing the map of a basis morphism of " + obj_pair(c, x, y));
        if (it->second.rows() != F.dims[static_cast<std::size_t>(y)] || it->second.cols() != F.dims[static_cast<std::size_t>(x)]) {
          fail(ErrorCode::Precondition, "functor map has the wrong shape on " + obj_pair(c, x, y));
        }
      }
    }
  }
  for (int x = 0; x < N; ++x) {
    if (functor_map(c, F, x, x, c.identity(x)) != Matrix::identity(kQ, F.dims[static_cast<std::size_t>(x)])) {
      fail(ErrorCode::Precondition, "functor does not send id_" + c.label(x) + " to the identity");
    }
  }
  for (int x = 0; x < N; ++x) {
    for (int y = 0; y < N; ++y) {
      for (int z = 0; z < N; ++z) {
        for (int i = 0; i < c.hom_dim(x, y); ++i) {
          for (int j = 0; j < c.hom_dim(y, z); ++j) {
            Vec gf = c.compose(x, y, z, unit_vector(c.hom_dim(x, y), i), unit_vector(c.hom_dim(y, z), j));
            if (functor_map(c, F, x, z, gf) != F.maps.at({y, z, j}) * F.maps.at({x, y, i})) {
              fail(ErrorCode::Precondition, "functor does not preserve a composite into " + obj_pair(c, x, z));
            }
          }
        }
      }
    }
  }
}

CatModule CatModule::create(const CategoryAlgebra& A, int dim, std::vector<Matrix> action) {
  if (static_cast<int>(action.size()) != A.dim()) fail(ErrorCode::Precondition, "module needs one action matrix per algebra basis element");
  for (const auto& m : action) {
    if (m.rows() != dim || m.cols() != dim) fail(ErrorCode::Precondition, "action matrix has the wrong shape");
  }
  CatModule M;
  M.A_ = A;
  M.dim_ = dim;
  M.L_ = std::move(action);
  for (int p = 0; p < A.dim(); ++p) {
    for (int q = 0; q < A.dim(); ++q) {
      if (M.action(A.mul(A.basis_vector(p), A.basis_vector(q))) != M.L_[static_cast<std::size_t>(p)] * M.L_[static_cast<std::size_t>(q)]) {
        fail(ErrorCode::Precondition, "action is not multiplicative on basis pair (" + std::to_string(p) + ", " + std::to_string(q) + ")");
      }
    }
  }
  return M;
}

Matrix CatModule::action(const Vec& a) const {
  Matrix m(kQ, dim_, dim_);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (sgn(a[p]) != 0) m = m + L_[p].scaled(a[p]);
  }
  return m;
}

bool CatModule::is_non_degenerate() const { return action(A_.unit()) == Matrix::identity(kQ, dim_); }

CatModule functor_to_module(const CategoryAlgebra& A, const CatFunctor& F) {
  const FinCategory& c = A.category();
  validate_functor(c, F);
  std::vector<int> off;
  int n = 0;
  for (int d : F.dims) {
    off.push_back(n);
    n += d;
  }
  std::vector<Matrix> L;
  for (const auto& b : A.basis()) {
    Matrix m(kQ, n, n);
    const Matrix& f = F.maps.at({b.x, b.y, b.index});
    for (int i = 0; i < f.rows(); ++i) {
      for (int j = 0; j < f.cols(); ++j) m.at(off[static_cast<std::size_t>(b.y)] + i, off[static_cast<std::size_t>(b.x)] + j) = f.at(i, j);
    }
    L.push_back(std::move(m));
  }
  return CatModule::create(A, n, std::move(L));
}

FunctorFromModule module_to_functor(const CatModule& M) {
  require_non_degenerate(M);
  const CategoryAlgebra& A = M.algebra();
  const FinCategory& c = A.category();
  const int N = c.num_objects();
  FunctorFromModule out;
  for (int x = 0; x < N; ++x) {
    Matrix e = M.action(A.identity(x));
    std::vector<Vec> cols;
    for (int j = 0; j < M.dim(); ++j) cols.push_back(e.col(j));
    Subspace basis = span_basis(kQ, M.dim(), cols);
    out.functor.dims.push_back(static_cast<int>(basis.size()));
    out.inclusion.push_back(Matrix::from_columns(kQ, M.dim(), basis));
  }
  for (const auto& b : A.basis()) {
    const Matrix& ix = out.inclusion[static_cast<std::size_t>(b.x)];
    const Matrix& iy = out.inclusion[static_cast<std::size_t>(b.y)];
    Matrix image = M.action(A.basis_vector(A.offset(b.x, b.y) + b.index)) * ix;
    std::vector<Vec> cols;
    for (int j = 0; j < image.cols(); ++j) {
      auto coords = solve(iy, image.col(j));
      ensure(coords.has_value(), "morphism does not land in id_y(M)");
      cols.push_back(*coords);
    }
    out.functor.maps[{b.x, b.y, b.index}] = Matrix::from_columns(kQ, iy.cols(), cols);
  }
  return out;
}

namespace {

// Phi : sum of F'(x) -> M assembled from the inclusions; an isomorphism of
// modules when it is invertible and intertwines every basis action.
bool check_module_iso(const CatModule& M, const CatModule& back, const Matrix& phi) {
  if (phi.rows() != phi.cols() || rank(phi) != phi.rows()) return false;
  for (int p = 0; p < M.algebra().dim(); ++p) {
    if (phi * back.action(p) != M.action(p) * phi) return false;
  }
  return true;
}

Matrix assemble(const FunctorFromModule& fm, int n) {
  std::vector<Vec> cols;
  for (const auto& inc : fm.inclusion) {
    for (int j = 0; j < inc.cols(); ++j) cols.push_back(inc.col(j));
  }
  return Matrix::from_columns(kQ, n, cols);
}

}  // namespace

MoritaCertificate morita_round_trip(const CategoryAlgebra& A, const CatFunctor& F) {
  const FinCategory& c = A.category();
  CatModule M = functor_to_module(A, F);
  FunctorFromModule fm = module_to_functor(M);
  MoritaCertificate cert;
  // F(x) sits in M as the block at its offset; phi_x expresses that block in
  // the basis chosen for id_x(M).
  cert.functor_ok = true;
  int off = 0;
  for (int x = 0; x < c.num_objects(); ++x) {
    const int d = F.dims[static_cast<std::size_t>(x)];
    const Matrix& inc = fm.inclusion[static_cast<std::size_t>(x)];
    std::vector<Vec> cols;
    for (int j = 0; j < d; ++j) {
      auto coords = solve(inc, unit_vector(M.dim(), off + j));
      if (!coords) {
        cert.functor_ok = false;
        cols.push_back(Vec(static_cast<std::size_t>(inc.cols()), Rational(0)));
      } else {
        cols.push_back(*coords);
      }
    }
    off += d;
    Matrix phi = Matrix::from_columns(kQ, inc.cols(), cols);
    if (phi.rows() != d || rank(phi) != d) cert.functor_ok = false;
    cert.functor_iso.push_back(std::move(phi));
  }
  if (cert.functor_ok) {
    for (const auto& b : A.basis()) {
      const Matrix& px = cert.functor_iso[static_cast<std::size_t>(b.x)];
      const Matrix& py = cert.functor_iso[static_cast<std::size_t>(b.y)];
      if (py * F.maps.at({b.x, b.y, b.index}) != fm.functor.maps.at({b.x, b.y, b.index}) * px) cert.functor_ok = false;
    }
  }
  CatModule back = functor_to_module(A, fm.functor);
  cert.module_iso = assemble(fm, M.dim());
  cert.module_ok = check_module_iso(M, back, cert.module_iso);
  return cert;
}

MoritaCertificate morita_round_trip(const CatModule& M) {
  FunctorFromModule fm = module_to_functor(M);
  CatModule back = functor_to_module(M.algebra(), fm.functor);
  MoritaCertificate cert;
  cert.module_iso = assemble(fm, M.dim());
  cert.module_ok = check_module_iso(M, back, cert.module_iso);
  // The functor leg starting from F' = module_to_functor(M).
  MoritaCertificate f = morita_round_trip(M.algebra(), fm.functor);
  cert.functor_iso = std::move(f.functor_iso);
  cert.functor_ok = f.functor_ok && f.module_ok;
  return cert;
}

CatFunctor representable(const FinCategory& c, int x) {
  CatFunctor F;
  const int N = c.num_objects();
  for (int y = 0; y < N; ++y) F.dims.push_back(c.hom_dim(x, y));
  for (int y = 0; y < N; ++y) {
    for (int z = 0; z < N; ++z) {
      for (int j = 0; j < c.hom_dim(y, z); ++j) {
        std::vector<Vec> cols;
        for (int i = 0; i < c.hom_dim(x, y); ++i) {
          cols.push_back(c.compose(x, y, z, unit_vector(c.hom_dim(x, y), i), unit_vector(c.hom_dim(y, z), j)));
        }
        F.maps[{y, z, j}] = Matrix::from_columns(kQ, c.hom_dim(x, z), cols);
      }
    }
  }
  return F;
}

RadicalReport algebra_radical(const CategoryAlgebra& A) {
  const int n = A.dim();
  std::vector<std::vector<Vec>> prod(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) prod[static_cast<std::size_t>(p)].push_back(A.mul(A.basis_vector(p), A.basis_vector(q)));
  }
  // Tr(L_{e_r}) = sum_s (e_r e_s)_s
  Vec tr(static_cast<std::size_t>(n), Rational(0));
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) tr[static_cast<std::size_t>(r)] += prod[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)][static_cast<std::size_t>(s)];
  }
  Matrix T(kQ, n, n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      Rational t = 0;
      for (int r = 0; r < n; ++r) t += prod[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] * tr[static_cast<std::size_t>(r)];
      T.at(p, q) = t;
    }
  }
  RadicalReport rep;
  rep.basis = span_basis(kQ, n, nullspace(T));
  for (const auto& j : rep.basis) {
    for (int p = 0; p < n; ++p) {
      ensure(in_span(kQ, n, rep.basis, A.mul(A.basis_vector(p), j)), "radical is not a left ideal");
      ensure(in_span(kQ, n, rep.basis, A.mul(j, A.basis_vector(p))), "radical is not a right ideal");
    }
  }
  Subspace power = rep.basis;
  rep.nilpotency_index = 1;
  while (!power.empty()) {
    std::vector<Vec> next;
    for (const auto& j : rep.basis) {
      for (const auto& v : power) next.push_back(A.mul(j, v));
    }
    power = span_basis(kQ, n, next);
    ++rep.nilpotency_index;
    ensure(rep.nilpotency_index <= n + 1, "radical is not nilpotent");
  }
  return rep;
}

std::vector<Subspace> radical_series(const CatModule& M) {
  require_non_degenerate(M);
  const int n = M.dim();
  std::vector<Matrix> J = radical_actions(M);
  Subspace s;
  for (int i = 0; i < n; ++i) s.push_back(unit_vector(n, i));
  std::vector<Subspace> series{s};
  while (!s.empty()) {
    std::vector<Vec> next;
    for (const auto& j : J) {
      for (const auto& v : s) next.push_back(j.apply(v));
    }
    s = span_basis(kQ, n, next);
    ensure(s.size() < series.back().size(), "radical series does not descend");
    series.push_back(s);
  }
  return series;
}

std::vector<Subspace> socle_series(const CatModule& M) {
  require_non_degenerate(M);
  const int n = M.dim();
  std::vector<Matrix> J = radical_actions(M);
  Subspace t;
  std::vector<Subspace> series{t};
  while (static_cast<int>(t.size()) < n) {
    // functionals vanishing on t
    std::vector<Vec> ann;
    if (t.empty()) {
      for (int i = 0; i < n; ++i) ann.push_back(unit_vector(n, i));
    } else {
      ann = nullspace(Matrix::from_rows(kQ, n, t));
    }
    std::vector<Vec> rows;
    for (const auto& j : J) {
      Matrix jt = j.transpose();
      for (const auto& q : ann) rows.push_back(jt.apply(q));
    }
    Subspace next;
    if (rows.empty()) {
      for (int i = 0; i < n; ++i) next.push_back(unit_vector(n, i));
    } else {
      next = span_basis(kQ, n, nullspace(Matrix::from_rows(kQ, n, rows)));
    }
    ensure(next.size() > t.size(), "socle series does not ascend");
    t = std::move(next);
    series.push_back(t);
  }
  return series;
}

int loewy_length(const CatModule& M) {
  const int r = static_cast<int>(radical_series(M).size()) - 1;
  const int s = static_cast<int>(socle_series(M).size()) - 1;
  ensure(r == s, "radical and socle series lengths differ");
  return r;
}

Subspace generated_submodule(const CatModule& M, const std::vector<Vec>& vs) {
  return spin(M.dim(), action_span(M), vs);
}

std::vector<Matrix> endomorphisms(const CatModule& M) {
  const int n = M.dim();
  if (n == 0) return {};
  std::vector<Vec> rows;
  for (const auto& L : action_span(M)) {
    // (phi L - L phi)_{r,c} = 0 with phi_{r,k} at index r*n + k
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Vec row(static_cast<std::size_t>(n * n), Rational(0));
        for (int k = 0; k < n; ++k) {
          row[static_cast<std::size_t>(r * n + k)] += L.at(k, c);
          row[static_cast<std::size_t>(k * n + c)] -= L.at(r, k);
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (int i = 0; i < n * n; ++i) sol.push_back(unit_vector(n * n, i));
  } else {
    sol = nullspace(Matrix::from_rows(kQ, n * n, rows));
  }
  std::vector<Matrix> out;
  for (const auto& v : sol) out.push_back(unflatten(v, n, n));
  return out;
}

Poly charpoly(const Matrix& m) {
  const int n = m.rows();
  ensure(n == m.cols(), "characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier, valid in characteristic zero
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  Matrix Mk(kQ, n, n);
  for (int k = 1; k <= n; ++k) {
    Mk = m * Mk + Matrix::identity(kQ, n).scaled(c[static_cast<std::size_t>(n - k + 1)]);
    Rational t = -trace(m * Mk) / k;
    t.canonicalize();
    c[static_cast<std::size_t>(n - k)] = t;
  }
  return Poly(kQ, std::move(c));
}

SimplicityReport is_absolutely_simple(const CatModule& M) {
  SimplicityReport rep;
  const int n = M.dim();
  if (n == 0) {
    rep.certificate = "zero module";
    return rep;
  }
  require_non_degenerate(M);
  rep.end_dim = static_cast<int>(endomorphisms(M).size());
  if (n == 1) {
    rep.simple = true;
    rep.certificate = "dimension 1";
    return rep;
  }
  auto radical = radical_series(M);
  if (radical.size() > 2) {
    rep.certificate = "JM is a proper nonzero submodule of dimension " + std::to_string(radical[1].size());
    return rep;
  }
  const std::vector<Matrix> B = action_span(M);
  for (int i = 0; i < n; ++i) {
    Subspace s = spin(n, B, {unit_vector(n, i)});
    if (static_cast<int>(s.size()) < n) {
      rep.certificate = "basis vector " + std::to_string(i) + " generates a submodule of dimension " + std::to_string(s.size());
      return rep;
    }
  }
  // Norton: for x in the image algebra and an irreducible factor p of
  // multiplicity one in charpoly(x), ker p(x) is one simple Q[x]-module, so
  // one kernel vector of p(x) and one of p(x)^T decide simplicity.
  std::vector<Matrix> cand = B;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      for (long s : {1L, 2L, -1L, 3L}) cand.push_back(B[i] + B[j].scaled(Rational(s)));
    }
  }
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) cand.push_back(B[i] * B[j] + B[i] + B[j].scaled(Rational(2)));
  }
  std::vector<Matrix> Bt;
  for (const auto& b : B) Bt.push_back(b.transpose());
  for (std::size_t ci = 0; ci < cand.size(); ++ci) {
    const Matrix& x = cand[ci];
    for (const auto& f : factor(charpoly(x), FactorOptions{256, 0})) {
      if (f.multiplicity != 1) continue;
      Matrix px = poly_at(f.poly, x);
      std::vector<Vec> ker = nullspace(px);
      ensure(static_cast<int>(ker.size()) == f.poly.degree(), "kernel of a simple factor has unexpected dimension");
      Subspace s = spin(n, B, {ker[0]});
      if (static_cast<int>(s.size()) < n) {
        rep.certificate = "kernel vector of p(x) generates a submodule of dimension " + std::to_string(s.size());
        return rep;
      }
      Subspace d = spin(n, Bt, {nullspace(px.transpose())[0]});
      if (static_cast<int>(d.size()) < n) {
        rep.certificate = "dual kernel vector generates a proper submodule of the dual, of dimension " + std::to_string(d.size());
        return rep;
      }
      rep.simple = true;
      rep.certificate = "Norton test passed with p = " + to_string(f.poly, "t") + " on candidate " + std::to_string(ci);
      return rep;
    }
  }
  fail(ErrorCode::Precondition, "simplicity undecided: no image element has an irreducible factor of multiplicity one");
}

FinCategory one_object_category() {
  FinCategory::Data d;
  d.objects = {"*"};
  d.hom_dim = {{1}};
  d.compose[{0, 0, 0}] = {{Rational(1)}};
  d.identity = {{Rational(1)}};
  return FinCategory::create(std::move(d));
}

FinCategory a2_category() {
  FinCategory::Data d;
  d.objects = {"1", "2"};
  d.hom_dim = {{1, 1}, {0, 1}};
  for (FinCategory::Triple t : {FinCategory::Triple{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}) d.compose[t] = {{Rational(1)}};
  d.identity = {{Rational(1)}, {Rational(1)}};
  return FinCategory::create(std::move(d));
}

FinCategory matrix_category(int n) {
  FinCategory::Data d;
  for (int i = 0; i < n; ++i) d.objects.push_back(std::to_string(i + 1));
  d.hom_dim.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) d.compose[{x, y, z}] = {{Rational(1)}};
    }
    d.identity.push_back({Rational(1)});
  }
  return FinCategory::create(std::move(d));
}

FinCategory gaussian_category() {
  FinCategory::Data d;
  d.objects = {"*"};
  d.hom_dim = {{2}};
  // index f * 2 + g for g o f, basis (1, i)
  d.compose[{0, 0, 0}] = {{1, 0}, {0, 1}, {0, 1}, {-1, 0}};
  d.identity = {{1, 0}};
  return FinCategory::create(std::move(d));
}

FinCategory square_zero_category() {
  FinCategory::Data d;
  d.objects = {"1", "2"};
  d.hom_dim = {{2, 2}, {2, 2}};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        // basis (e, eps e): eps^a e o eps^b e = eps^(a+b) e
        d.compose[{x, y, z}] = {{1, 0}, {0, 1}, {0, 1}, {0, 0}};
      }
    }
    d.identity.push_back({1, 0});
  }
  return FinCategory::create(std::move(d));
}

ConcreteCategory random_concrete_category(std::mt19937_64& rng, int max_objects, int max_hom) {
  std::uniform_int_distribution<long> small(-2, 2);
  while (true) {
    const int N = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_objects));
    std::vector<int> n(static_cast<std::size_t>(N));
    for (auto& v : n) v = 1 + static_cast<int>(rng() % 2);
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    auto dim_of = [&](int x, int y) { return n[static_cast<std::size_t>(y)] * n[static_cast<std::size_t>(x)]; };
    // H[x][y]: spanning matrices of Hom(x, y), flattened n_y x n_x
    std::vector<std::vector<Subspace>> H(static_cast<std::size_t>(N), std::vector<Subspace>(static_cast<std::size_t>(N)));
    for (int x = 0; x < N; ++x) {
      H[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)].push_back(flatten(Matrix::identity(kQ, n[static_cast<std::size_t>(x)])));
      if (n[static_cast<std::size_t>(x)] == 2 && rng() % 3 == 0) {
        Matrix nil(kQ, 2, 2);
        nil.at(0, 1) = 1 + static_cast<long>(rng() % 3);
        H[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)].push_back(flatten(nil));
      }
    }
    for (int a = 0; a < N; ++a) {
      for (int b = a + 1; b < N; ++b) {
        if (rng() % 2 == 0) continue;
        const int x = order[static_cast<std::size_t>(a)], y = order[static_cast<std::size_t>(b)];
        Matrix g(kQ, n[static_cast<std::size_t>(y)], n[static_cast<std::size_t>(x)]);
        while (g.is_zero()) {
          for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j) g.at(i, j) = small(rng);
          }
        }
        H[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].push_back(flatten(g));
      }
    }
    bool too_big = false;
    for (bool changed = true; changed && !too_big;) {
      changed = false;
      for (int x = 0; x < N && !too_big; ++x) {
        for (int y = 0; y < N && !too_big; ++y) {
          for (int z = 0; z < N && !too_big; ++z) {
            auto& target = H[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
            target = span_basis(kQ, dim_of(x, z), target);
            const Subspace fs = H[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            const Subspace gs = H[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
            for (const auto& f : fs) {
              for (const auto& g : gs) {
                Vec gf = flatten(unflatten(g, n[static_cast<std::size_t>(z)], n[static_cast<std::size_t>(y)]) *
                                 unflatten(f, n[static_cast<std::size_t>(y)], n[static_cast<std::size_t>(x)]));
                if (in_span(kQ, dim_of(x, z), target, gf)) continue;
                target.push_back(gf);
                target = span_basis(kQ, dim_of(x, z), target);
                changed = true;
                if (static_cast<int>(target.size()) > max_hom) too_big = true;
              }
            }
          }
        }
      }
    }
    if (too_big) continue;
    // Random change of basis in every hom space.
    for (auto& row : H) {
      for (auto& s : row) {
        if (s.empty()) continue;
        const int d = static_cast<int>(s.size());
        Matrix change(kQ, d, d);
        do {
          for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) change.at(i, j) = small(rng);
          }
        } while (det(change) == 0);
        Subspace fresh;
        for (int i = 0; i < d; ++i) {
          Vec v(s[0].size(), Rational(0));
          for (int j = 0; j < d; ++j) v = vec_add(kQ, v, vec_scale(kQ, s[static_cast<std::size_t>(j)], change.at(i, j)));
          fresh.push_back(std::move(v));
        }
        s = std::move(fresh);
      }
    }
    auto coords = [&](int x, int y, const Vec& v) {
      auto c = solve(Matrix::from_columns(kQ, dim_of(x, y), H[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]), v);
      ensure(c.has_value(), "composite outside its hom space");
      return *c;
    };
    FinCategory::Data d;
    ConcreteCategory out;
    for (int x = 0; x < N; ++x) {
      d.objects.push_back("X" + std::to_string(x));
      std::vector<int> row;
      for (int y = 0; y < N; ++y) row.push_back(static_cast<int>(H[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].size()));
      d.hom_dim.push_back(row);
      d.identity.push_back(coords(x, x, flatten(Matrix::identity(kQ, n[static_cast<std::size_t>(x)]))));
      out.tautological.dims.push_back(n[static_cast<std::size_t>(x)]);
    }
    for (int x = 0; x < N; ++x) {
      for (int y = 0; y < N; ++y) {
        const auto& hxy = H[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        for (std::size_t i = 0; i < hxy.size(); ++i) {
          out.tautological.maps[{x, y, static_cast<int>(i)}] = unflatten(hxy[i], n[static_cast<std::size_t>(y)], n[static_cast<std::size_t>(x)]);
        }
        for (int z = 0; z < N; ++z) {
          const auto& hyz = H[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
          if (hxy.empty() || hyz.empty()) continue;
          std::vector<Vec> tensor;
          for (const auto& f : hxy) {
            for (const auto& g : hyz) {
              tensor.push_back(coords(x, z, flatten(unflatten(g, n[static_cast<std::size_t>(z)], n[static_cast<std::size_t>(y)]) *
                                                    unflatten(f, n[static_cast<std::size_t>(y)], n[static_cast<std::size_t>(x)]))));
            }
          }
          d.compose[{x, y, z}] = std::move(tensor);
        }
      }
    }
    out.category = FinCategory::create(std::move(d));
    return out;
  }
}

}  // namespace zc
