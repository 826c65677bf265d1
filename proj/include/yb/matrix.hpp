#ifndef YB_MATRIX_HPP
#define YB_MATRIX_HPP

#include <optional>
#include <span>
#include <vector>

#include "yb/scalar.hpp"

namespace yb {

/// Dense square matrix of Scalars over a fixed field, row-major. Columns are
/// inputs: applying the operator to basis vector e_c reads column c.
///
/// Basis convention on tensor powers of an N-dimensional space V (bit-exact,
/// used everywhere): v_i (x) v_j has index i*N + j, and v_i (x) v_j (x) v_k
/// has index i*N^2 + j*N + k.
class LinearOperator {
public:
  /// Zero matrix. base_dim records the tensor factor size N when dim is a
  /// power of it; pass base_dim = dim for operators without factor structure.
  LinearOperator(ScalarField field, int dim, int base_dim);

  static LinearOperator identity(const ScalarField& f, int dim, int base_dim = 0);
  /// Permutation matrix of v (x) w -> w (x) v on V (x) V, dim n^2.
  static LinearOperator twist(const ScalarField& f, int n);

  int dim() const { return dim_; }
  int base_dim() const { return base_dim_; }
  const ScalarField& field() const { return field_; }

  const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  void set(int r, int c, Scalar v) { a_[static_cast<std::size_t>(r) * dim_ + c] = std::move(v); }
  Scalar& mut(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  LinearOperator& operator+=(const LinearOperator& o);
  LinearOperator& operator-=(const LinearOperator& o);
  friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
  friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) { return a -= b; }
  /// Matrix product (operator composition: (A*B)(v) = A(B(v))).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator*(const Scalar& c, LinearOperator m);

  bool operator==(const LinearOperator& o) const;
  bool operator!=(const LinearOperator& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

private:
  ScalarField field_;
  int dim_;
  int base_dim_;
  std::vector<Scalar> a_;
};

/// Kronecker product: (A(x)B)[(i*dimB+j),(k*dimB+l)] = A[i,k]*B[j,l].
LinearOperator kron(const LinearOperator& a, const LinearOperator& b);

enum class LiftPos { P12 = 12, P13 = 13, P23 = 23 };

/// Lift of an operator R on V(x)V to V(x)V(x)V:
///   12 -> R(x)I,  23 -> I(x)R,  13 -> (I(x)tau)(R(x)I)(I(x)tau).
/// BadDimension when R.dim is not a perfect square.
LinearOperator lift(const LinearOperator& r, LiftPos pos);

/// Product of the list, leftmost applied last: [A,B,C] denotes A∘B∘C.
LinearOperator compose_chain(std::span<const LinearOperator> ops);

/// AB - BA.
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

struct InvertResult {
  std::optional<LinearOperator> inverse;
  /// Nonzero kernel vector certificate when singular (A * kernel = 0 exactly).
  std::vector<Scalar> kernel;
  bool ok() const { return inverse.has_value(); }
};

/// Exact Gauss-Jordan inversion; partial pivoting on the first nonzero entry.
InvertResult invert(const LinearOperator& a);

/// Reduced row echelon form in place; returns pivot column indices.
/// Rows may be rectangular (all the same length).
std::vector<int> rref(std::vector<std::vector<Scalar>>& rows, const ScalarField& f);

/// Basis of the nullspace {x : M x = 0} of a rectangular matrix given by rows,
/// each of length ncols. Canonical order: free columns ascending.
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows, int ncols,
                                              const ScalarField& f);

} // namespace yb

#endif
