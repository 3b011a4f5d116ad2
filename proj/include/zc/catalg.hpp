#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zc/linalg.hpp"
#include "zc/poly.hpp"

namespace zc {

/// Finite preadditive category with finite-dimensional hom spaces over Q.
/// Morphisms are coordinate vectors in a fixed basis of each hom space.
class FinCategory {
 public:
  using Triple = std::array<int, 3>;
  struct Data {
    std::vector<std::string> objects;
    std::vector<std::vector<int>> hom_dim;  // [x][y] = dim Hom(x, y)
    // compose[{x, y, z}][i * dim(y, z) + j] = g_j o f_i in Hom(x, z), for
    // f_i in Hom(x, y) and g_j in Hom(y, z). Missing triples compose to zero.
    std::map<Triple, std::vector<Vec>> compose;
    std::vector<Vec> identity;  // id_x in Hom(x, x)
  };

  FinCategory() = default;
  /// Checks identity laws (IdentityViolation) and associativity on every
  /// basis triple (AssociativityViolation), naming the offending triple.
  static FinCategory create(Data d);

  int num_objects() const { return static_cast<int>(d_.objects.size()); }
  const std::string& label(int x) const { return d_.objects[static_cast<std::size_t>(x)]; }
  int hom_dim(int x, int y) const { return d_.hom_dim[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  const Vec& identity(int x) const { return d_.identity[static_cast<std::size_t>(x)]; }
  const Data& data() const { return d_; }
  /// g o f for f in Hom(x, y), g in Hom(y, z).
  Vec compose(int x, int y, int z, const Vec& f, const Vec& g) const;

 private:
  Data d_;
};

struct AlgebraBasis {
  int x, y, index;  // index-th basis morphism of Hom(x, y)
};

/// A_C = sum of all Hom(x, y), with a * b = a o b when composable and zero
/// otherwise. Unital since the object set is finite.
class CategoryAlgebra {
 public:
  CategoryAlgebra() = default;
  static CategoryAlgebra build(const FinCategory& c);

  const FinCategory& category() const { return c_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<AlgebraBasis>& basis() const { return basis_; }
  int offset(int x, int y) const;
  Vec zero() const { return Vec(basis_.size(), Rational(0)); }
  Vec basis_vector(int p) const;
  /// id_x as an element of A.
  Vec identity(int x) const;
  Vec unit() const;
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of b -> a * b.
  Matrix left_mult(const Vec& a) const;
  /// Objects touched by the nonzero components of a.
  std::vector<int> support(const Vec& a) const;

 private:
  FinCategory c_;
  std::vector<AlgebraBasis> basis_;
  std::vector<std::vector<int>> offset_;
};

/// e = sum of id_x over the union of supports; e*e = e and e*a = a are
/// verified before returning.
Vec covering_idempotent(const CategoryAlgebra& A, const std::vector<Vec>& B);

/// Functor data: a space F(x) per object and F(f) : F(x) -> F(y) per basis
/// morphism f of Hom(x, y), keyed {x, y, index}.
struct CatFunctor {
  std::vector<int> dims;
  std::map<FinCategory::Triple, Matrix> maps;
};

/// Checks that F preserves identities and composition; throws Precondition.
void validate_functor(const FinCategory& c, const CatFunctor& F);

/// Left A-module of finite dimension, given by the action of each basis
/// element of A.
class CatModule {
 public:
  CatModule() = default;
  /// Checks L_p L_q = L_{b_p b_q} on all basis pairs (Precondition).
  static CatModule create(const CategoryAlgebra& A, int dim, std::vector<Matrix> action);

  const CategoryAlgebra& algebra() const { return A_; }
  int dim() const { return dim_; }
  const Matrix& action(int p) const { return L_[static_cast<std::size_t>(p)]; }
  Matrix action(const Vec& a) const;
  /// AM = M, equivalently the unit acts as the identity.
  bool is_non_degenerate() const;

 private:
  CategoryAlgebra A_;
  int dim_ = 0;
  std::vector<Matrix> L_;
};

CatModule functor_to_module(const CategoryAlgebra& A, const CatFunctor& F);

struct FunctorFromModule {
  CatFunctor functor;
  std::vector<Matrix> inclusion;  // columns: a basis of id_x(M) inside M
};

/// F(x) = id_x(M). Throws DegenerateModule.
FunctorFromModule module_to_functor(const CatModule& M);

struct MoritaCertificate {
  std::vector<Matrix> functor_iso;  // F(x) -> F'(x) for F' = module_to_functor(functor_to_module(F))
  Matrix module_iso;                // sum of F'(x) -> M for M = functor_to_module(F)
  bool functor_ok = false;
  bool module_ok = false;
  bool ok() const { return functor_ok && module_ok; }
};

/// Runs both round trips starting from F and checks the isomorphisms.
MoritaCertificate morita_round_trip(const CategoryAlgebra& A, const CatFunctor& F);
/// Module-first round trip M -> F -> M'. Throws DegenerateModule.
MoritaCertificate morita_round_trip(const CatModule& M);

/// Hom(x, -) as a functor.
CatFunctor representable(const FinCategory& c, int x);

struct RadicalReport {
  std::vector<Vec> basis;   // of J(A)
  int nilpotency_index = 0; // least n with J^n = 0
};

/// Null space of the trace form Tr(L_a L_b). The result is checked to be a
/// two-sided ideal and nilpotent.
RadicalReport algebra_radical(const CategoryAlgebra& A);

using Subspace = std::vector<Vec>;  // basis vectors

/// M, JM, J^2 M, ..., 0. Throws DegenerateModule.
std::vector<Subspace> radical_series(const CatModule& M);
/// 0, soc M, soc^2 M, ..., M. Throws DegenerateModule.
std::vector<Subspace> socle_series(const CatModule& M);
/// Least n with J^n M = 0, cross-checked against the socle series.
int loewy_length(const CatModule& M);

/// Smallest submodule containing the given vectors.
Subspace generated_submodule(const CatModule& M, const std::vector<Vec>& vs);

/// Basis of End_A(M) as n x n matrices.
std::vector<Matrix> endomorphisms(const CatModule& M);

struct SimplicityReport {
  bool simple = false;
  int end_dim = 0;
  std::string certificate;
  bool absolutely_simple() const { return simple && end_dim == 1; }
};

/// Simplicity via spinning basis vectors and a Norton kernel test; End_A(M)
/// by solving the commutation system. Throws DegenerateModule, or
/// Precondition when no element with a simple irreducible factor is found.
SimplicityReport is_absolutely_simple(const CatModule& M);

/// Characteristic polynomial det(t I - m).
Poly charpoly(const Matrix& m);

// Fixed instances.
FinCategory one_object_category();
FinCategory a2_category();
FinCategory matrix_category(int n);
/// One object with End = Q(i), basis 1, i.
FinCategory gaussian_category();
/// Two objects, Hom(x, y) = Q e_yx + Q eps e_yx with eps^2 = 0: the algebra
/// M_2(Q) + I with I = eps M_2(Q), I^2 = 0.
FinCategory square_zero_category();

struct ConcreteCategory {
  FinCategory category;
  CatFunctor tautological;  // F(x) = Q^{n_x}, F(f) = the matrix f
};

/// Random subcategory of matrices: objects carry Q^{n_x}, hom spaces are the
/// spans of paths of random generators, presented in random bases.
ConcreteCategory random_concrete_category(std::mt19937_64& rng, int max_objects = 4, int max_hom = 3);

}  // namespace zc
