#include "cifano/field.hpp"

#include <charconv>

namespace cifano {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; requires gcd(a, p) = 1.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: element not invertible");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
  return Field(p);
}

FieldScalar Field::zero() const { return integer(0); }

FieldScalar Field::one() const { return integer(1); }

FieldScalar Field::integer(long long v) const {
  if (is_rationals()) return FieldScalar(*this, mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return FieldScalar(*this, static_cast<std::uint64_t>(r));
}

FieldScalar Field::integer(const mpz_class& v) const {
  if (is_rationals()) return FieldScalar(*this, mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += mpz_class(static_cast<unsigned long>(p_));
  return FieldScalar(*this, static_cast<std::uint64_t>(r.get_ui()));
}

FieldScalar Field::ratio(long long num, long long den) const {
  if (den == 0) throw std::domain_error("Field::ratio: zero denominator");
  if (is_rationals()) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return FieldScalar(*this, q);
  }
  return integer(num) / integer(den);
}

FieldScalar Field::parse(std::string_view text) const {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("Field::parse: empty scalar");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), t.c_str(), 10) != 0) {
      throw std::invalid_argument("Field::parse: bad integer '" + t + "'");
    }
    return z;
  };
  if (slash == std::string::npos) return integer(parse_int(s));
  mpz_class num = parse_int(s.substr(0, slash));
  mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("Field::parse: zero denominator");
  return integer(num) / integer(den);
}

std::string Field::description() const {
  return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

bool FieldScalar::is_zero() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 0;
  return std::get<std::uint64_t>(v_) == 0;
}

bool FieldScalar::is_one() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint64_t>(v_) == 1;
}

void FieldScalar::require_same_field(const FieldScalar& rhs) const {
  if (field_ != rhs.field_) {
    throw std::invalid_argument("FieldScalar: mixed fields " + field_.description() + " and " +
                                rhs.field_.description());
  }
}

FieldScalar FieldScalar::operator-() const {
  if (field_.is_rationals()) return FieldScalar(field_, mpq_class(-std::get<mpq_class>(v_)));
  std::uint64_t r = std::get<std::uint64_t>(v_);
  return FieldScalar(field_, r == 0 ? 0 : field_.characteristic() - r);
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("FieldScalar::inverse: zero");
  if (field_.is_rationals()) return FieldScalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  return FieldScalar(field_, invmod_u64(std::get<std::uint64_t>(v_), field_.characteristic()));
}

FieldScalar FieldScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldScalar base = *this;
  FieldScalar acc = field_.one();
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(rhs.v_);
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(rhs.v_);
    if (s >= p) s -= p;
    v_ = s;
  }
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(rhs.v_);
  } else {
    std::uint64_t p = field_.characteristic();
    std::uint64_t a = std::get<std::uint64_t>(v_);
    std::uint64_t b = std::get<std::uint64_t>(rhs.v_);
    v_ = a >= b ? a - b : a + p - b;
  }
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rationals()) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(rhs.v_);
  } else {
    v_ = mulmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(rhs.v_), field_.characteristic());
  }
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  a.require_same_field(b);
  return a.v_ == b.v_;
}

bool FieldScalar::canonical_less(const FieldScalar& a, const FieldScalar& b) {
  a.require_same_field(b);
  if (a.field_.is_rationals()) return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
  return std::get<std::uint64_t>(a.v_) < std::get<std::uint64_t>(b.v_);
}

std::string FieldScalar::str() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint64_t>(v_));
}

const mpq_class& FieldScalar::rational_value() const {
  if (!field_.is_rationals()) throw std::logic_error("FieldScalar: not a rational");
  return std::get<mpq_class>(v_);
}

std::uint64_t FieldScalar::residue() const {
  if (field_.is_rationals()) throw std::logic_error("FieldScalar: not a prime-field residue");
  return std::get<std::uint64_t>(v_);
}

}  // namespace cifano
