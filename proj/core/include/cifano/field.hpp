#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace cifano {

/// Thrown when a cross-check that should hold by construction fails;
/// indicates a bug in a calculator, not bad input.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime_u64(std::uint64_t n);

class FieldScalar;

/// Arithmetic context: the rational numbers or a prime field GF(p).
/// A Field value is cheap to copy and compares by characteristic.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  /// 0 for the rationals, p for GF(p).
  std::uint64_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  FieldScalar zero() const;
  FieldScalar one() const;
  /// Canonical image of an integer (reduced mod p over GF(p)).
  FieldScalar integer(long long v) const;
  FieldScalar integer(const mpz_class& v) const;
  /// num/den; over GF(p) this is num * den^-1.
  FieldScalar ratio(long long num, long long den) const;
  /// Parses "a", "-a" or "a/b".
  FieldScalar parse(std::string_view text) const;

  /// "QQ" or "GF(p)".
  std::string description() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// An exact field element: an arbitrary-precision rational, or a canonical
/// residue in [0, p) of a prime field. All arithmetic is exact; mixing
/// elements of different fields throws std::invalid_argument.
class FieldScalar {
 public:
  FieldScalar() : field_(Field::rationals()), v_(mpq_class(0)) {}

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator-() const;
  FieldScalar inverse() const;
  /// a^e with e any integer (negative exponents invert; 0^0 = 1).
  FieldScalar pow(long long e) const;

  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b);
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

  /// Total order used for canonical (deterministic) sorting of outputs.
  /// Rationals by value, residues by representative.
  static bool canonical_less(const FieldScalar& a, const FieldScalar& b);

  /// Decimal residue or "num/den".
  std::string str() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

 private:
  friend class Field;
  FieldScalar(Field f, mpq_class q) : field_(f), v_(std::move(q)) {}
  FieldScalar(Field f, std::uint64_t r) : field_(f), v_(r) {}
  void require_same_field(const FieldScalar& rhs) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> v_;
};

}  // namespace cifano
