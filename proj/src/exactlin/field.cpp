#include "pbwkit/exactlin/field.hpp"

#include "pbwkit/error.hpp"

namespace pbwkit::exactlin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw Error(ErrorCode::ValidationError, "GF(" + std::to_string(p) + "): modulus must be a prime below 2^31");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::name() const {
  return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "Q";
}

Scalar FieldSpec::parse(const std::string& text) const {
  auto fail = [&]() -> Scalar { throw Error(ErrorCode::ParseError, "bad scalar '" + text + "'"); };
  if (text.empty()) return fail();
  mpq_class q;
  if (q.set_str(text, 10) != 0) return fail();
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return coerce(Scalar::from_mpq(q));
}

Scalar FieldSpec::random(std::mt19937_64& rng, int range) const {
  if (is_prime_field()) {
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    return Scalar::residue(dist(rng), p);
  }
  std::uniform_int_distribution<int> dist(-range, range);
  return Scalar(dist(rng));
}

}  // namespace pbwkit::exactlin
