#pragma once

#include <cstddef>
#include <optional>

// Hot loops of the geometry module. Each kernel has a scalar reference and an AVX2 variant;
// the dispatcher picks AVX2 when the CPU supports it (and FMA), unless a backend is forced.
namespace rp2braid::kernels {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool avx2_available();
// nullopt restores automatic selection. Forcing Avx2 on a CPU without it throws.
void force_backend(std::optional<Backend> b);

// out[i] = sum_{j != i, z_j != z_i} 1 / (z_i - z_j)
void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im);

// For each point z: value = sum c_k z^k, norm = sum |c_k| |z|^k. Coefficients low to high, deg + 1 of them.
void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm);

// min over pairs of min(|u - v|^2, |u + v|^2); the squared chord distance in RP^2. +inf for fewer than 2 points.
double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n);

namespace scalar {
void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im);
void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm);
double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n);
}  // namespace scalar

namespace avx2 {
void aberth_sums(const double* re, const double* im, std::size_t n, double* out_re, double* out_im);
void horner_batch(const double* c_re, const double* c_im, std::size_t deg, const double* z_re, const double* z_im,
                  std::size_t count, double* v_re, double* v_im, double* norm);
double min_pair_chord2(const double* x, const double* y, const double* z, std::size_t n);
}  // namespace avx2

}  // namespace rp2braid::kernels
