#include "pbwkit/exactlin/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "pbwkit/error.hpp"

namespace pbwkit::exactlin {

namespace {

constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(__int128 v) { return v > kMin64 && v <= kMax64; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) {
  if (a == b) return a;
  if (a == 0) return b;
  if (b == 0) return a;
  throw Error(ErrorCode::FieldMismatch,
              "GF(" + std::to_string(a) + ") vs GF(" + std::to_string(b) + ")");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "no inverse mod " + std::to_string(p));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

Scalar::Scalar(const Scalar& other)
    : num_(other.num_),
      den_(other.den_),
      p_(other.p_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    p_ = other.p_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return from_i128(num, den);
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    long n = c.get_num().get_si();
    long d = c.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) return small(n, d, 0);
  }
  Scalar s;
  s.big_ = std::make_unique<mpq_class>(std::move(c));
  return s;
}

Scalar Scalar::residue(long long v, std::uint32_t p) {
  if (p == 0) return Scalar(v);
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return small(r, 1, p);
}

Scalar Scalar::from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Scalar();
  unsigned __int128 un = n < 0 ? static_cast<unsigned __int128>(-n) : static_cast<unsigned __int128>(n);
  unsigned __int128 g = gcd128(un, static_cast<unsigned __int128>(d));
  n /= static_cast<__int128>(g);
  d /= static_cast<__int128>(g);
  if (fits64(n) && fits64(d)) return small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), 0);
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  Scalar s;
  s.big_ = std::make_unique<mpq_class>(std::move(q));
  return s;
}

std::uint32_t Scalar::residue_in(std::uint32_t p) const {
  if (p_ == p) return static_cast<std::uint32_t>(num_);
  if (big_) {
    mpz_class n = big_->get_num() % p;
    mpz_class d = big_->get_den() % p;
    if (n < 0) n += p;
    std::uint64_t dn = d.get_ui();
    if (dn == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by " + std::to_string(p));
    return static_cast<std::uint32_t>((n.get_ui() * inverse_mod(dn, p)) % p);
  }
  long long n = num_ % static_cast<long long>(p);
  if (n < 0) n += p;
  std::uint64_t d = static_cast<std::uint64_t>(den_) % p;
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by " + std::to_string(p));
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(n) * inverse_mod(d, p)) % p);
}

Scalar Scalar::in_modulus(std::uint32_t p) const {
  if (p == p_) return *this;
  if (p == 0) throw Error(ErrorCode::FieldMismatch, "cannot lift a residue to Q");
  if (p_ != 0) common_modulus(p_, p);
  return small(residue_in(p), 1, p);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (p_ != 0) return small(static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(num_), p_)), 1, p_);
  if (big_) return from_mpq(1 / *big_);
  return num_ < 0 ? from_i128(-static_cast<__int128>(den_), -static_cast<__int128>(num_))
                  : small(den_, num_, 0);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i128(num_), mpz_from_i128(den_));
}

std::int64_t Scalar::small_integer() const {
  if (big_ || den_ != 1) throw Error(ErrorCode::ValidationError, "not a small integer: " + to_string());
  return num_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
  if (p_ != 0) return small(num_ == 0 ? 0 : p_ - num_, 1, p_);
  if (big_) return from_mpq(-*big_);
  return from_i128(-static_cast<__int128>(num_), den_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a.p_, b.p_);
  if (p != 0) {
    std::uint64_t x = static_cast<std::uint64_t>(a.residue_in(p)) + b.residue_in(p);
    if (x >= p) x -= p;
    return Scalar::small(static_cast<std::int64_t>(x), 1, p);
  }
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min())
        return Scalar::small(r, 1, 0);
    }
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Scalar::from_i128(n, d);
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a.p_, b.p_);
  if (p != 0) {
    std::uint64_t x = static_cast<std::uint64_t>(a.residue_in(p)) * b.residue_in(p) % p;
    return Scalar::small(static_cast<std::int64_t>(x), 1, p);
  }
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    std::int64_t g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
    __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    if (fits64(n) && fits64(d)) return Scalar::small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), 0);
    return Scalar::from_i128(n, d);
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  std::uint32_t p = common_modulus(a.p_, b.p_);
  if (p != 0) return a.in_modulus(p) * b.in_modulus(p).inverse();
  return a * b.inverse();
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    std::uint32_t p = common_modulus(a.p_, b.p_);
    return a.residue_in(p) == b.residue_in(p);
  }
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pbwkit::exactlin
