#include <cmath>
#include <limits>
#include <stdexcept>

#include "rp2braid/kernels.hpp"

namespace rp2braid::kernels {

namespace scalar {

void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im) {
    for (std::size_t i = 0; i < n; ++i) {
        double sr = 0, si = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double dr = re[i] - re[j], di = im[i] - im[j];
            double den = dr * dr + di * di;
            if (den == 0) continue;
            sr += dr / den;
            si -= di / den;
        }
        out_re[i] = sr;
        out_im[i] = si;
    }
}

void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm) {
    for (std::size_t p = 0; p < count; ++p) {
        const double zr = z_re[p], zi = z_im[p];
        const double za = std::sqrt(zr * zr + zi * zi);
        double vr = c_re[deg], vi = c_im[deg];
        double nm = std::sqrt(c_re[deg] * c_re[deg] + c_im[deg] * c_im[deg]);
        for (std::size_t k = deg; k-- > 0;) {
            double tr = vr * zr - vi * zi + c_re[k];
            double ti = vr * zi + vi * zr + c_im[k];
            vr = tr;
            vi = ti;
            nm = nm * za + std::sqrt(c_re[k] * c_re[k] + c_im[k] * c_im[k]);
        }
        v_re[p] = vr;
        v_im[p] = vi;
        norm[p] = nm;
    }
}

double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double a = x[i] - x[j], b = y[i] - y[j], c = z[i] - z[j];
            double d = x[i] + x[j], e = y[i] + y[j], f = z[i] + z[j];
            double m = std::fmin(a * a + b * b + c * c, d * d + e * e + f * f);
            if (m < best) best = m;
        }
    return best;
}

}  // namespace scalar

namespace {
bool forced = false;
Backend forced_to = Backend::Scalar;
}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Backend active_backend() {
    if (forced) return forced_to;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

void force_backend(std::optional<Backend> b) {
    if (b && *b == Backend::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 backend not supported on this CPU");
    forced = b.has_value();
    if (b) forced_to = *b;
}

void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im) {
    if (active_backend() == Backend::Avx2) return avx2::aberth_sums(re, im, n, out_re, out_im);
    scalar::aberth_sums(re, im, n, out_re, out_im);
}

void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm) {
    if (active_backend() == Backend::Avx2) return avx2::horner_batch(c_re, c_im, deg, z_re, z_im, count, v_re, v_im, norm);
    scalar::horner_batch(c_re, c_im, deg, z_re, z_im, count, v_re, v_im, norm);
}

double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n) {
    if (active_backend() == Backend::Avx2) return avx2::min_pair_chord2(x, y, z, n);
    return scalar::min_pair_chord2(x, y, z, n);
}

}  // namespace rp2braid::kernels
