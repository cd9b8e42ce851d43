#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pbwkit/exactlin/scalar.hpp"

namespace pbwkit::exactlin {

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws ValidationError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  bool is_prime_field() const noexcept { return kind == Kind::PrimeField; }
  std::uint32_t modulus() const noexcept { return is_prime_field() ? p : 0; }
  std::string name() const;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const { return Scalar::residue(v, modulus()); }
  /// Normalizes a literal (e.g. a parsed rational) into this field.
  Scalar coerce(const Scalar& s) const { return s.in_modulus(modulus()); }
  /// Parses "a", "-a" or "a/b".
  Scalar parse(const std::string& text) const;
  /// Seeded random element; over Q draws integers in [-range, range].
  Scalar random(std::mt19937_64& rng, int range = 9) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

bool is_prime(std::uint64_t n);

}  // namespace pbwkit::exactlin
