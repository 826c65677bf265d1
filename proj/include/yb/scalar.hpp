#ifndef YB_SCALAR_HPP
#define YB_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "yb/errors.hpp"

namespace yb {

enum class FieldKind { Rationals, Cyclotomic, PrimeField };

/// Describes one of the supported exact coefficient fields: the rationals Q,
/// a cyclotomic extension Q(zeta_m), or a prime field F_p. Immutable; cheap
/// to copy (shared flyweight). Q(zeta_m) elements are represented as vectors
/// of rational coefficients of 1, zeta, ..., zeta^{d-1} reduced mod Phi_m,
/// where d = deg Phi_m = phi(m).
class ScalarField {
public:
  static ScalarField rationals();
  static ScalarField cyclotomic(unsigned m); // m >= 2
  static ScalarField prime_field(std::uint64_t p);

  FieldKind kind() const;
  /// Cyclotomic order m. WrongFieldKind otherwise.
  unsigned order() const;
  /// d = deg Phi_m for cyclotomic fields, 1 for the others.
  unsigned degree() const;
  /// Prime p. WrongFieldKind otherwise.
  std::uint64_t characteristic() const;
  /// Coefficients of Phi_m, constant term first; monic, length degree()+1.
  const std::vector<mpz_class>& cyclotomic_polynomial() const;

  bool operator==(const ScalarField& other) const;
  bool operator!=(const ScalarField& other) const { return !(*this == other); }

  std::string description() const; // "Q", "Q(zeta_4)", "F_2"

  struct Data;
  const Data& data() const { return *data_; }

private:
  explicit ScalarField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// An exact element of a ScalarField. Value semantics; all arithmetic exact.
/// Rationals are kept in lowest terms with positive denominator; cyclotomic
/// coefficient vectors are always reduced mod Phi_m (length exactly d);
/// prime-field elements are residues in [0, p).
class Scalar {
public:
  Scalar(); // zero of Q

  static Scalar zero(const ScalarField& f);
  static Scalar one(const ScalarField& f);
  static Scalar from_int(long value, const ScalarField& f);
  /// Embeds a rational constant into f (for F_p the denominator must be a unit).
  static Scalar from_rational(const mpq_class& q, const ScalarField& f);
  /// zeta_m^k in a cyclotomic field; k may be any integer. WrongFieldKind otherwise.
  static Scalar root_of_unity(const ScalarField& f, long k);

  const ScalarField& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o); // DivisionByZero when o == 0

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const; // DivisionByZero when zero

  bool operator==(const Scalar& o) const; // FieldMismatch across fields
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form per the scalar grammar (see parse_scalar).
  std::string str() const;

  // Payload accessors (kind-checked).
  const mpq_class& rat() const;
  const std::vector<mpq_class>& coeffs() const;
  std::uint64_t residue() const;

private:
  friend class ScalarField;
  friend Scalar parse_scalar(std::string_view, const ScalarField&);
  using Payload = std::variant<mpq_class, std::vector<mpq_class>, std::uint64_t>;
  Scalar(ScalarField f, Payload v) : field_(std::move(f)), v_(std::move(v)) {}
  void require_same_field(const Scalar& o) const;

  ScalarField field_;
  Payload v_;
};

/// Scalar text grammar:
///   rationals     [-]digits[/digits]
///   cyclotomic    [c0,c1,...,c_{d-1}]  (each c_i a rational string; shorter
///                 lists are zero-padded on the right)
///   prime field   decimal residue (optionally signed; reduced mod p)
/// Throws ParseError with the offending position.
Scalar parse_scalar(std::string_view text, const ScalarField& f);

/// Convenience: parse in Q. Shorthand for parse_scalar(text, rationals()).
mpq_class parse_rational(std::string_view text);

} // namespace yb

#endif
