#include "qgnn/sim/kernels.hpp"

#ifdef QGNN_BUILD_AVX2

#include <immintrin.h>

namespace qgnn::sim::kernels {

namespace {

// One __m256d holds two complex doubles [re0 im0 re1 im1].
// Complex product z = x*w with w broadcast from scalars (wr, wi):
//   re = xr*wr - xi*wi, im = xr*wi + xi*wr.
inline __m256d cmul_bcast(__m256d x, __m256d wr, __m256d wi) {
    __m256d x_swap = _mm256_permute_pd(x, 0x5);  // [im0 re0 im1 re1]
    return _mm256_fmaddsub_pd(x, wr, _mm256_mul_pd(x_swap, wi));
}

void apply_single_qubit_avx2(cplx* a, std::size_t dim, std::size_t mask, const cplx m[4]) {
    double* d = reinterpret_cast<double*>(a);
    const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());

    if (mask >= 2) {
        // Pairs are (p, p|mask) with runs of `mask` consecutive p; two complex
        // amplitudes (4 doubles) per vector op.
        for (std::size_t base = 0; base < dim; base += 2 * mask) {
            for (std::size_t p = base; p < base + mask; p += 2) {
                __m256d x = _mm256_loadu_pd(d + 2 * p);
                __m256d y = _mm256_loadu_pd(d + 2 * (p | mask));
                __m256d nx = _mm256_add_pd(cmul_bcast(x, m00r, m00i), cmul_bcast(y, m01r, m01i));
                __m256d ny = _mm256_add_pd(cmul_bcast(x, m10r, m10i), cmul_bcast(y, m11r, m11i));
                _mm256_storeu_pd(d + 2 * p, nx);
                _mm256_storeu_pd(d + 2 * (p | mask), ny);
            }
        }
        return;
    }

    // mask == 1: (even, odd) interleaved pairs; load both, split, recombine.
    for (std::size_t p = 0; p + 2 <= dim; p += 2) {
        __m256d both = _mm256_loadu_pd(d + 2 * p);                // [x | y]
        __m256d x = _mm256_permute2f128_pd(both, both, 0x00);     // [x | x]
        __m256d y = _mm256_permute2f128_pd(both, both, 0x11);     // [y | y]
        __m256d top = _mm256_add_pd(cmul_bcast(x, m00r, m00i), cmul_bcast(y, m01r, m01i));
        __m256d bot = _mm256_add_pd(cmul_bcast(x, m10r, m10i), cmul_bcast(y, m11r, m11i));
        __m256d out = _mm256_permute2f128_pd(top, bot, 0x30);     // [top.lo | bot.hi]
        _mm256_storeu_pd(d + 2 * p, out);
    }
}

double norm_sq_avx2(const cplx* a, std::size_t dim) {
    const double* d = reinterpret_cast<const double*>(a);
    const std::size_t n = 2 * dim;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(d + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) s += d[i] * d[i];
    return s;
}

cplx inner_product_avx2(const cplx* a, const cplx* b, std::size_t dim) {
    const double* da = reinterpret_cast<const double*>(a);
    const double* db = reinterpret_cast<const double*>(b);
    __m256d acc_re = _mm256_setzero_pd();  // lanes hold ar*br and ai*bi terms
    __m256d acc_im = _mm256_setzero_pd();  // even lanes ar*bi, odd lanes ai*br
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        __m256d x = _mm256_loadu_pd(da + 2 * i);
        __m256d y = _mm256_loadu_pd(db + 2 * i);
        acc_re = _mm256_fmadd_pd(x, y, acc_re);
        acc_im = _mm256_fmadd_pd(x, _mm256_permute_pd(y, 0x5), acc_im);
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    double im = (im4[0] + im4[2]) - (im4[1] + im4[3]);
    for (; i < dim; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void scale_avx2(cplx* a, std::size_t dim, double f) {
    double* d = reinterpret_cast<double*>(a);
    const std::size_t n = 2 * dim;
    const __m256d vf = _mm256_set1_pd(f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(d + i, _mm256_mul_pd(_mm256_loadu_pd(d + i), vf));
    for (; i < n; ++i) d[i] *= f;
}

}  // namespace

const Table& avx2_table() {
    static const Table t{"avx2", apply_single_qubit_avx2, norm_sq_avx2, inner_product_avx2,
                         scale_avx2};
    return t;
}

}  // namespace qgnn::sim::kernels

#endif  // QGNN_BUILD_AVX2
