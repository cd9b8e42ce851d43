#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Row kernels for dense elimination over GF(p). Rows are arrays of residues in
// [0, p). The portable variants are the reference; vector variants must agree
// with them bit for bit.
namespace pbwkit::exactlin::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by the running CPU.
Isa detected_isa();
/// The instruction set the dispatching entry points use right now.
Isa active_isa();
/// Forces a variant (tests); passing the detected value restores default.
void set_active_isa(Isa isa);

/// Largest modulus the vector variants accept; larger moduli fall back.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 26;

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
/// v[i] = (c * v[i]) mod p
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n);

namespace portable {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace portable

namespace avx2 {
/// Only valid when the CPU reports AVX2 and p < kVectorModulusLimit.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace avx2

}  // namespace pbwkit::exactlin::kernels
