// Built with -mavx2 -mfma; only reached through the runtime dispatcher.
#include <immintrin.h>

#include <cmath>
#include <limits>

#include "rp2braid/kernels.hpp"

namespace rp2braid::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_min_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im) {
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d zr = _mm256_set1_pd(re[i]), zi = _mm256_set1_pd(im[i]);
        __m256d sr = zero, si = zero;
        std::size_t j = 0;
        for (; j + 4 <= n; j += 4) {
            __m256d dr = _mm256_sub_pd(zr, _mm256_loadu_pd(re + j));
            __m256d di = _mm256_sub_pd(zi, _mm256_loadu_pd(im + j));
            __m256d den = _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di));
            __m256d live = _mm256_cmp_pd(den, zero, _CMP_NEQ_OQ);
            __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), den, live);
            sr = _mm256_add_pd(sr, _mm256_and_pd(live, _mm256_div_pd(dr, safe)));
            si = _mm256_sub_pd(si, _mm256_and_pd(live, _mm256_div_pd(di, safe)));
        }
        double tr = hsum(sr), ti = hsum(si);
        for (; j < n; ++j) {
            double dr = re[i] - re[j], di = im[i] - im[j];
            double den = dr * dr + di * di;
            if (den == 0) continue;
            tr += dr / den;
            ti -= di / den;
        }
        out_re[i] = tr;
        out_im[i] = ti;
    }
}

void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm) {
    std::size_t p = 0;
    for (; p + 4 <= count; p += 4) {
        const __m256d zr = _mm256_loadu_pd(z_re + p), zi = _mm256_loadu_pd(z_im + p);
        const __m256d za = _mm256_sqrt_pd(_mm256_fmadd_pd(zr, zr, _mm256_mul_pd(zi, zi)));
        __m256d vr = _mm256_set1_pd(c_re[deg]), vi = _mm256_set1_pd(c_im[deg]);
        __m256d nm = _mm256_set1_pd(std::sqrt(c_re[deg] * c_re[deg] + c_im[deg] * c_im[deg]));
        for (std::size_t k = deg; k-- > 0;) {
            __m256d tr = _mm256_fmsub_pd(vr, zr, _mm256_fmsub_pd(vi, zi, _mm256_set1_pd(c_re[k])));
            __m256d ti = _mm256_fmadd_pd(vr, zi, _mm256_fmadd_pd(vi, zr, _mm256_set1_pd(c_im[k])));
            vr = tr;
            vi = ti;
            nm = _mm256_fmadd_pd(nm, za, _mm256_set1_pd(std::sqrt(c_re[k] * c_re[k] + c_im[k] * c_im[k])));
        }
        _mm256_storeu_pd(v_re + p, vr);
        _mm256_storeu_pd(v_im + p, vi);
        _mm256_storeu_pd(norm + p, nm);
    }
    if (p < count) scalar::horner_batch(c_re, c_im, deg, z_re + p, z_im + p, count - p, v_re + p, v_im + p, norm + p);
}

double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const __m256d xi = _mm256_set1_pd(x[i]), yi = _mm256_set1_pd(y[i]), zi = _mm256_set1_pd(z[i]);
        __m256d b = _mm256_set1_pd(best);
        std::size_t j = i + 1;
        for (; j + 4 <= n; j += 4) {
            __m256d xj = _mm256_loadu_pd(x + j), yj = _mm256_loadu_pd(y + j), zj = _mm256_loadu_pd(z + j);
            __m256d a = _mm256_sub_pd(xi, xj), c = _mm256_sub_pd(yi, yj), e = _mm256_sub_pd(zi, zj);
            __m256d d = _mm256_add_pd(xi, xj), f = _mm256_add_pd(yi, yj), g = _mm256_add_pd(zi, zj);
            __m256d minus = _mm256_fmadd_pd(a, a, _mm256_fmadd_pd(c, c, _mm256_mul_pd(e, e)));
            __m256d plus = _mm256_fmadd_pd(d, d, _mm256_fmadd_pd(f, f, _mm256_mul_pd(g, g)));
            b = _mm256_min_pd(b, _mm256_min_pd(minus, plus));
        }
        best = hmin(b);
        for (; j < n; ++j) {
            double a = x[i] - x[j], c = y[i] - y[j], e = z[i] - z[j];
            double d = x[i] + x[j], f = y[i] + y[j], g = z[i] + z[j];
            best = std::fmin(best, std::fmin(a * a + c * c + e * e, d * d + f * f + g * g));
        }
    }
    return best;
}

}  // namespace rp2braid::kernels::avx2
