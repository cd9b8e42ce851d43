#include "pbwkit/exactlin/kernels.hpp"

#include <atomic>

namespace pbwkit::exactlin::kernels {

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{probe()};
  return isa;
}

bool use_vector(std::uint32_t p) {
  return active().load(std::memory_order_relaxed) == Isa::Avx2 && p < kVectorModulusLimit;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (use_vector(p))
    avx2::axpy_mod(dst, src, c, p, n);
  else
    portable::axpy_mod(dst, src, c, p, n);
}

void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n) {
  if (use_vector(p))
    avx2::scale_mod(v, c, p, n);
  else
    portable::scale_mod(v, c, p, n);
}

namespace portable {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * v[i] % p);
}

}  // namespace portable

}  // namespace pbwkit::exactlin::kernels
