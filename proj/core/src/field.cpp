#include "pact/field.hpp"

namespace pact {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r; old_r = r; r = t;
    t = old_s - q * s; old_s = s; s = t;
  }
  if (old_r != 1) throw Error("element not invertible mod p");
  return ((old_s % p) + p) % p;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw Error("prime modulus must be < 2^31");
  if (!is_prime_u32(p)) throw Error("GF(p) modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::of(const Field& f, long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    if (den != 1) {
      Scalar n = of(f, num);
      Scalar d = of(f, den);
      return n / d;
    }
    std::int64_t p = f.characteristic();
    s.res_ = ((num % p) + p) % p;
  }
  return s;
}

Scalar Scalar::of_mpq(const Field& f, const mpq_class& q) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::int64_t p = f.characteristic();
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  std::int64_t n = ((num.get_si() % p) + p) % p;
  std::int64_t d = ((den.get_si() % p) + p) % p;
  if (d == 0) throw Error("denominator vanishes mod p");
  s.res_ = (n * mod_inverse(d, p)) % p;
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  std::string t(text);
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(t);
      q.canonicalize();
      return of_mpq(f, q);
    }
    mpq_class num(t.substr(0, slash));
    mpq_class den(t.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + t + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return of_mpq(f, q);
  } catch (const std::invalid_argument&) {
    throw Error("malformed scalar '" + t + "'");
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : res_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw Error("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) s.q_ = -q_;
  else s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational()) s.q_ = q_ + o.q_;
  else s.res_ = (res_ + o.res_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_rational()) s.q_ = q_ * o.q_;
  else s.res_ = (res_ * o.res_) % field_.characteristic();
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s(field_);
  if (field_.is_rational()) s.q_ = 1 / q_;
  else s.res_ = mod_inverse(res_, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(res_);
  return q_.get_str();
}

}  // namespace pact
