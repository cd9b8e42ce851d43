#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace pbwkit::exactlin {

/// An exact field element: a rational number (modulus 0) or a residue mod a
/// prime p (modulus p, stored as an integer in [0, p)).
///
/// Rationals with numerator and denominator fitting in 64 bits are kept
/// inline; anything larger spills to a GMP rational. The representation is
/// canonical, so equality is structural.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(int v) noexcept : num_(v) {}  // NOLINT: integer literals are scalars
  Scalar(long v) noexcept : num_(v) {}  // NOLINT
  Scalar(long long v) noexcept : num_(v) {}  // NOLINT

  static Scalar rational(long long num, long long den);
  static Scalar from_mpq(const mpq_class& q);
  /// Residue class of v modulo p (p must be prime, < 2^31).
  static Scalar residue(long long v, std::uint32_t p);

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept = default;
  ~Scalar() = default;

  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

  /// Same value read in the field with modulus p (p == 0 keeps a rational).
  Scalar in_modulus(std::uint32_t p) const;
  Scalar inverse() const;
  mpq_class to_mpq() const;
  /// Integer representative; valid for residues and small integral rationals.
  std::int64_t small_integer() const;
  bool is_small_integer() const noexcept { return !big_ && den_ == 1; }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  static Scalar small(std::int64_t n, std::int64_t d, std::uint32_t p) noexcept {
    Scalar s;
    s.num_ = n;
    s.den_ = d;
    s.p_ = p;
    return s;
  }
  static Scalar from_i128(__int128 n, __int128 d);
  std::uint32_t residue_in(std::uint32_t p) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pbwkit::exactlin
