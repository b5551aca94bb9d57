#pragma once
// ============================================================================
// kernels: batch distance primitives with runtime-dispatched SIMD variants
//
// Contract: every variant returns bit-identical doubles to the scalar
// reference. The scalar reference performs an unconditional masked Kahan
// add for EVERY index below the pair's depth (adding 0.0 still updates the
// compensation state, so skipping zero bits would change results); the
// vector variants replicate the same op order per lane and freeze lanes
// past their own depth with blends. Only +/- ops are used, so there is no
// FMA contraction hazard. The orbit kernel is a pure max reduction, which
// is exactly associative.
// ============================================================================

#include <cstddef>
#include <cstdint>

namespace mdim::kern {

enum class impl_kind { scalar, avx2, neon };

// Resolves MDIMLAB_SIMD (scalar|avx2|neon|auto; default auto) once per
// process against the CPU's capabilities. Unknown values warn and fall back
// to auto; unavailable requested ISAs warn and fall back to scalar.
impl_kind active_impl();
const char* impl_name(impl_kind k);

// out[p] = Kahan sum over i in [0, depth[p]) of ((bits[p] >> i) & 1) ? w[i] : 0
// w is the per-coordinate weight table (w[i] = 2 * alpha^-(i+1) for the
// weighted symbol metric). depth[p] must be in [0, 64].
void xor_weight_sum(const std::uint64_t* bits, const std::int32_t* depth,
                    std::size_t count, const double* w, double* out);

// out[p] = max over m in [0, n_iter) of |xs[m] - ys[m * count + p]|
// (ys is column-major: row m holds the m-th iterate of every candidate).
// n_iter = 0 yields 0.
void orbit_maxdiff(const double* xs, const double* ys, std::size_t count,
                   std::size_t n_iter, double* out);

// Scalar references, exposed for equivalence tests.
void xor_weight_sum_scalar(const std::uint64_t* bits, const std::int32_t* depth,
                           std::size_t count, const double* w, double* out);
void orbit_maxdiff_scalar(const double* xs, const double* ys, std::size_t count,
                          std::size_t n_iter, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void xor_weight_sum_avx2(const std::uint64_t* bits, const std::int32_t* depth,
                         std::size_t count, const double* w, double* out);
void orbit_maxdiff_avx2(const double* xs, const double* ys, std::size_t count,
                        std::size_t n_iter, double* out);
#endif

#if defined(__aarch64__)
void xor_weight_sum_neon(const std::uint64_t* bits, const std::int32_t* depth,
                         std::size_t count, const double* w, double* out);
void orbit_maxdiff_neon(const double* xs, const double* ys, std::size_t count,
                        std::size_t n_iter, double* out);
#endif

}  // namespace mdim::kern
