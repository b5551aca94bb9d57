#include "mdimlab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define MDIM_X86 1
#endif

#if defined(__aarch64__)
#include <arm_neon.h>
#define MDIM_ARM64 1
#endif

namespace mdim::kern {

// ============================================================================
// scalar reference
// ============================================================================

void xor_weight_sum_scalar(const std::uint64_t* bits, const std::int32_t* depth,
                           std::size_t count, const double* w, double* out) {
    for (std::size_t p = 0; p < count; ++p) {
        const std::uint64_t b = bits[p];
        const std::int32_t d = depth[p];
        double sum = 0.0;
        double c = 0.0;
        for (std::int32_t i = 0; i < d; ++i) {
            // unconditional masked add: 0.0 contributions still pass through
            // the compensation update, which is what the vector lanes do
            const double contrib = ((b >> i) & 1u) ? w[i] : 0.0;
            const double y = contrib - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        out[p] = sum;
    }
}

void orbit_maxdiff_scalar(const double* xs, const double* ys, std::size_t count,
                          std::size_t n_iter, double* out) {
    for (std::size_t p = 0; p < count; ++p) {
        double acc = 0.0;
        for (std::size_t m = 0; m < n_iter; ++m) {
            const double d = std::fabs(xs[m] - ys[m * count + p]);
            acc = std::max(acc, d);
        }
        out[p] = acc;
    }
}

// ============================================================================
// AVX2 variant (x86-64): 4 pairs per vector, lane-frozen Kahan updates
// ============================================================================

#if MDIM_X86

__attribute__((target("avx2")))
void xor_weight_sum_avx2(const std::uint64_t* bits, const std::int32_t* depth,
                         std::size_t count, const double* w, double* out) {
    const std::size_t vec_end = count - (count % 4);
    const __m256i one64 = _mm256_set1_epi64x(1);
    for (std::size_t p = 0; p < vec_end; p += 4) {
        const __m256i bv = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(bits + p));
        const __m256d dlimit = _mm256_set_pd(
            static_cast<double>(depth[p + 3]), static_cast<double>(depth[p + 2]),
            static_cast<double>(depth[p + 1]), static_cast<double>(depth[p + 0]));
        const std::int32_t maxd = std::max(std::max(depth[p], depth[p + 1]),
                                           std::max(depth[p + 2], depth[p + 3]));
        __m256d sum = _mm256_setzero_pd();
        __m256d c = _mm256_setzero_pd();
        for (std::int32_t i = 0; i < maxd; ++i) {
            // lane active while i < depth[lane]; frozen lanes keep (sum, c)
            const __m256d active = _mm256_cmp_pd(
                _mm256_set1_pd(static_cast<double>(i)), dlimit, _CMP_LT_OQ);
            const __m256i sh = _mm256_srl_epi64(bv, _mm_cvtsi32_si128(i));
            const __m256i bit = _mm256_and_si256(sh, one64);
            const __m256d bitmask =
                _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit, one64));
            // contrib = bit ? w[i] : 0.0 (mask is all-ones / all-zeros)
            const __m256d contrib =
                _mm256_and_pd(_mm256_set1_pd(w[i]), bitmask);
            // same op order as the scalar reference
            const __m256d y = _mm256_sub_pd(contrib, c);
            const __m256d t = _mm256_add_pd(sum, y);
            const __m256d cn = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
            sum = _mm256_blendv_pd(sum, t, active);
            c = _mm256_blendv_pd(c, cn, active);
        }
        _mm256_storeu_pd(out + p, sum);
    }
    if (vec_end < count) {
        xor_weight_sum_scalar(bits + vec_end, depth + vec_end, count - vec_end,
                              w, out + vec_end);
    }
}

__attribute__((target("avx2")))
void orbit_maxdiff_avx2(const double* xs, const double* ys, std::size_t count,
                        std::size_t n_iter, double* out) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    const std::size_t vec_end = count - (count % 4);
    for (std::size_t p = 0; p < vec_end; p += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t m = 0; m < n_iter; ++m) {
            const __m256d xv = _mm256_set1_pd(xs[m]);
            const __m256d yv = _mm256_loadu_pd(ys + m * count + p);
            const __m256d d = _mm256_andnot_pd(signmask, _mm256_sub_pd(xv, yv));
            acc = _mm256_max_pd(acc, d);
        }
        _mm256_storeu_pd(out + p, acc);
    }
    if (vec_end < count) {
        // tail columns stay scalar; ys is column-major over the full count,
        // so index from the original base pointers
        for (std::size_t p = vec_end; p < count; ++p) {
            double a = 0.0;
            for (std::size_t m = 0; m < n_iter; ++m) {
                a = std::max(a, std::fabs(xs[m] - ys[m * count + p]));
            }
            out[p] = a;
        }
    }
}

#endif  // MDIM_X86

// ============================================================================
// NEON variant (aarch64): 2 pairs per vector, same lane contract
// ============================================================================

#if MDIM_ARM64

void xor_weight_sum_neon(const std::uint64_t* bits, const std::int32_t* depth,
                         std::size_t count, const double* w, double* out) {
    const std::size_t vec_end = count - (count % 2);
    const uint64x2_t one64 = vdupq_n_u64(1);
    for (std::size_t p = 0; p < vec_end; p += 2) {
        const uint64x2_t bv = vld1q_u64(bits + p);
        const float64x2_t dlimit = {static_cast<double>(depth[p]),
                                    static_cast<double>(depth[p + 1])};
        const std::int32_t maxd = std::max(depth[p], depth[p + 1]);
        float64x2_t sum = vdupq_n_f64(0.0);
        float64x2_t c = vdupq_n_f64(0.0);
        for (std::int32_t i = 0; i < maxd; ++i) {
            const uint64x2_t active = vcltq_f64(
                vdupq_n_f64(static_cast<double>(i)), dlimit);
            const uint64x2_t bit =
                vandq_u64(vshlq_u64(bv, vdupq_n_s64(-i)), one64);
            const uint64x2_t bitmask = vceqq_u64(bit, one64);
            const float64x2_t contrib = vreinterpretq_f64_u64(
                vandq_u64(vreinterpretq_u64_f64(vdupq_n_f64(w[i])), bitmask));
            const float64x2_t y = vsubq_f64(contrib, c);
            const float64x2_t t = vaddq_f64(sum, y);
            const float64x2_t cn = vsubq_f64(vsubq_f64(t, sum), y);
            sum = vbslq_f64(active, t, sum);
            c = vbslq_f64(active, cn, c);
        }
        vst1q_f64(out + p, sum);
    }
    if (vec_end < count) {
        xor_weight_sum_scalar(bits + vec_end, depth + vec_end, count - vec_end,
                              w, out + vec_end);
    }
}

void orbit_maxdiff_neon(const double* xs, const double* ys, std::size_t count,
                        std::size_t n_iter, double* out) {
    const std::size_t vec_end = count - (count % 2);
    for (std::size_t p = 0; p < vec_end; p += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t m = 0; m < n_iter; ++m) {
            const float64x2_t xv = vdupq_n_f64(xs[m]);
            const float64x2_t yv = vld1q_f64(ys + m * count + p);
            acc = vmaxq_f64(acc, vabdq_f64(xv, yv));
        }
        vst1q_f64(out + p, acc);
    }
    for (std::size_t p = vec_end; p < count; ++p) {
        double a = 0.0;
        for (std::size_t m = 0; m < n_iter; ++m) {
            a = std::max(a, std::fabs(xs[m] - ys[m * count + p]));
        }
        out[p] = a;
    }
}

#endif  // MDIM_ARM64

// ============================================================================
// dispatch
// ============================================================================

const char* impl_name(impl_kind k) {
    switch (k) {
        case impl_kind::scalar: return "scalar";
        case impl_kind::avx2: return "avx2";
        case impl_kind::neon: return "neon";
    }
    return "scalar";
}

namespace {

bool avx2_available() {
#if MDIM_X86
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool neon_available() {
#if MDIM_ARM64
    return true;
#else
    return false;
#endif
}

impl_kind best_available() {
    if (avx2_available()) return impl_kind::avx2;
    if (neon_available()) return impl_kind::neon;
    return impl_kind::scalar;
}

impl_kind resolve_impl() {
    const char* env = std::getenv("MDIMLAB_SIMD");
    if (env == nullptr || *env == '\0' || std::strcmp(env, "auto") == 0) {
        return best_available();
    }
    if (std::strcmp(env, "scalar") == 0) return impl_kind::scalar;
    if (std::strcmp(env, "avx2") == 0) {
        if (avx2_available()) return impl_kind::avx2;
        std::fprintf(stderr, "mdimlab: avx2 requested but unavailable, using scalar\n");
        return impl_kind::scalar;
    }
    if (std::strcmp(env, "neon") == 0) {
        if (neon_available()) return impl_kind::neon;
        std::fprintf(stderr, "mdimlab: neon requested but unavailable, using scalar\n");
        return impl_kind::scalar;
    }
    std::fprintf(stderr, "mdimlab: unknown MDIMLAB_SIMD value '%s', using auto\n", env);
    return best_available();
}

}  // namespace

impl_kind active_impl() {
    static const impl_kind k = resolve_impl();
    return k;
}

void xor_weight_sum(const std::uint64_t* bits, const std::int32_t* depth,
                    std::size_t count, const double* w, double* out) {
    switch (active_impl()) {
#if MDIM_X86
        case impl_kind::avx2:
            xor_weight_sum_avx2(bits, depth, count, w, out);
            return;
#endif
#if MDIM_ARM64
        case impl_kind::neon:
            xor_weight_sum_neon(bits, depth, count, w, out);
            return;
#endif
        default:
            xor_weight_sum_scalar(bits, depth, count, w, out);
            return;
    }
}

void orbit_maxdiff(const double* xs, const double* ys, std::size_t count,
                   std::size_t n_iter, double* out) {
    switch (active_impl()) {
#if MDIM_X86
        case impl_kind::avx2:
            orbit_maxdiff_avx2(xs, ys, count, n_iter, out);
            return;
#endif
#if MDIM_ARM64
        case impl_kind::neon:
            orbit_maxdiff_neon(xs, ys, count, n_iter, out);
            return;
#endif
        default:
            orbit_maxdiff_scalar(xs, ys, count, n_iter, out);
            return;
    }
}

}  // namespace mdim::kern
