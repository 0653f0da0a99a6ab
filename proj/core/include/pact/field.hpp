#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pact {

/// Library-wide error type. Construction failures carry a witness in the
/// message; structured witnesses get dedicated subclasses.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact coefficient field: the rationals or a prime field GF(p), p < 2^31.
class Field {
public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::uint32_t characteristic() const { return kind_ == Kind::rationals ? 0 : p_; }

  bool operator==(const Field&) const = default;

  std::string str() const;

private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Immutable exact scalar in a fixed Field. Rationals are kept reduced with
/// positive denominator; prime-field values are residues in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()), res_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar of(const Field& f, long num, long den = 1);
  static Scalar of_mpq(const Field& f, const mpq_class& q);
  /// Accepts "n", "-n" and (over the rationals) "n/d".
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical decimal form, e.g. "-3/4" or "2".
  std::string str() const;

  const mpq_class& rational() const { return q_; }
  std::int64_t residue() const { return res_; }

private:
  explicit Scalar(const Field& f) : field_(f), res_(0) {}
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;        // valid when rational
  std::int64_t res_;   // valid when prime field
};

}  // namespace pact
