#ifndef YB_STRUCTURES_HPP
#define YB_STRUCTURES_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "yb/scalar.hpp"

namespace yb {

struct ValidationIssue {
  std::string what;
  std::vector<int> where; // offending basis indices, lexicographic first
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Finite-dimensional unital associative algebra given by structure constants
/// c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
class AssociativeAlgebra {
public:
  AssociativeAlgebra(ScalarField field, int dim, std::vector<std::string> basis_names = {});

  const ScalarField& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  void set_product(int i, int j, std::vector<Scalar> coords);
  void set_unit(std::vector<Scalar> coords);

  const Scalar& c(int i, int j, int k) const { return mult_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  std::span<const Scalar> product(int i, int j) const {
    return {&mult_[(static_cast<std::size_t>(i) * dim_ + j) * dim_], static_cast<std::size_t>(dim_)};
  }
  const std::vector<Scalar>& unit() const { return unit_; }

  /// Bilinear extension of the product to coordinate vectors.
  std::vector<Scalar> multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;

private:
  ScalarField field_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> mult_; // (i*dim + j)*dim + k
  std::vector<Scalar> unit_;
};

/// Finite abelian group Z_{n_1} x ... x Z_{n_r}; elements are residue tuples.
class FiniteAbelianGroup {
public:
  using Elem = std::vector<unsigned>;

  explicit FiniteAbelianGroup(std::vector<unsigned> orders);

  const std::vector<unsigned>& orders() const { return orders_; }
  unsigned rank() const { return static_cast<unsigned>(orders_.size()); }
  unsigned exponent() const { return exponent_; } // lcm of the orders
  std::size_t size() const;

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem add(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  std::vector<Elem> elements() const; // all elements, lexicographic

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

private:
  std::vector<unsigned> orders_;
  unsigned exponent_;
};

/// Skew bicharacter theta(a,b) = zeta_e^{sum_ij a_i t[i][j] b_j} given by an
/// exponent matrix t over Z_e, e the exponent of the group.
class ColorFunction {
public:
  ColorFunction(FiniteAbelianGroup group, std::vector<std::vector<long>> exponents);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::vector<long>>& exponents() const { return t_; }

  /// Exponent of zeta_e in theta(a,b), reduced to [0, e).
  unsigned exponent_of(const FiniteAbelianGroup::Elem& a, const FiniteAbelianGroup::Elem& b) const;
  /// theta(a,b) as an element of f. f must be cyclotomic of order divisible
  /// by e, or Q when the value is rational (+-1).
  Scalar value(const ScalarField& f, const FiniteAbelianGroup::Elem& a,
               const FiniteAbelianGroup::Elem& b) const;

  /// Checks the bicharacter axioms: biadditivity on 200 seeded random triples
  /// plus exhaustively on generator pairs, skewness exhaustively over all
  /// element pairs for groups of size <= 4096 (generator pairs beyond).
  ValidationReport validate(std::uint64_t seed = 0) const;

private:
  FiniteAbelianGroup group_;
  std::vector<std::vector<long>> t_;
};

/// Z_2-graded Lie superalgebra given by bracket constants b[i][j][k] and a
/// grade (0 or 1) per basis vector.
class LieSuperalgebra {
public:
  LieSuperalgebra(ScalarField field, int dim, std::vector<int> grades,
                  std::vector<std::string> basis_names = {});

  const ScalarField& field() const { return field_; }
  int dim() const { return dim_; }
  int grade(int i) const { return grade_[i]; }
  const std::vector<int>& grades() const { return grade_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  void set_bracket(int i, int j, std::vector<Scalar> coords);
  const Scalar& b(int i, int j, int k) const { return bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  std::span<const Scalar> bracket_of(int i, int j) const {
    return {&bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_], static_cast<std::size_t>(dim_)};
  }
  std::vector<Scalar> bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

private:
  ScalarField field_;
  int dim_;
  std::vector<int> grade_;
  std::vector<std::string> names_;
  std::vector<Scalar> bracket_;
};

/// (G,theta)-Lie algebra: G-graded with a color function replacing the sign.
class GThetaLieAlgebra {
public:
  GThetaLieAlgebra(ScalarField field, int dim, FiniteAbelianGroup group,
                   std::vector<FiniteAbelianGroup::Elem> grades, ColorFunction theta,
                   std::vector<std::string> basis_names = {});

  const ScalarField& field() const { return field_; }
  int dim() const { return dim_; }
  const FiniteAbelianGroup& group() const { return group_; }
  const FiniteAbelianGroup::Elem& grade(int i) const { return grade_[i]; }
  const ColorFunction& theta() const { return theta_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  void set_bracket(int i, int j, std::vector<Scalar> coords);
  const Scalar& b(int i, int j, int k) const { return bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k]; }
  std::span<const Scalar> bracket_of(int i, int j) const {
    return {&bracket_[(static_cast<std::size_t>(i) * dim_ + j) * dim_], static_cast<std::size_t>(dim_)};
  }
  std::vector<Scalar> bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// theta(grade(i), grade(j)) in the algebra's field.
  Scalar theta_value(int i, int j) const;

private:
  ScalarField field_;
  int dim_;
  FiniteAbelianGroup group_;
  std::vector<FiniteAbelianGroup::Elem> grade_;
  ColorFunction theta_;
  std::vector<std::string> names_;
  std::vector<Scalar> bracket_;
};

ValidationReport validate_associative(const AssociativeAlgebra& a);
ValidationReport validate_superalgebra(const LieSuperalgebra& l);
ValidationReport validate_gtheta(const GThetaLieAlgebra& l, std::uint64_t seed = 0);

/// Basis of Z(L) = {z : [z,x] = 0 for all x}; when even_only, intersected
/// with the even (grade-0) subspace.
std::vector<std::vector<Scalar>> compute_center(const LieSuperalgebra& l, bool even_only);
/// Same for (G,theta)-Lie algebras; identity_grade_only intersects with L_0.
std::vector<std::vector<Scalar>> compute_center(const GThetaLieAlgebra& l, bool identity_grade_only);

/// Restriction to the even (grade-0) part, itself a Lie algebra.
LieSuperalgebra even_part(const LieSuperalgebra& l);

/// Reinterpret a superalgebra as a (Z_2, sign)-Lie algebra.
GThetaLieAlgebra as_gtheta_sign(const LieSuperalgebra& l);
/// Reinterpret a purely even superalgebra over the trivial group Z_1.
GThetaLieAlgebra as_gtheta_trivial(const LieSuperalgebra& l);

using AnyStructure = std::variant<AssociativeAlgebra, LieSuperalgebra, GThetaLieAlgebra>;

/// Built-in pre-validated structures. UnknownName for anything else.
AnyStructure catalog(const std::string& name);
std::vector<std::string> catalog_names();

const ScalarField& structure_field(const AnyStructure& s);
int structure_dim(const AnyStructure& s);
ValidationReport validate_structure(const AnyStructure& s, std::uint64_t seed = 0);

} // namespace yb

#endif
