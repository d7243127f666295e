#include "qgnn/sim/kernels.hpp"

namespace qgnn::sim::kernels {

namespace {

void apply_single_qubit_scalar(cplx* a, std::size_t dim, std::size_t mask, const cplx m[4]) {
    const cplx m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t p = base; p < base + mask; ++p) {
            const cplx x = a[p];
            const cplx y = a[p | mask];
            a[p] = m00 * x + m01 * y;
            a[p | mask] = m10 * x + m11 * y;
        }
    }
}

double norm_sq_scalar(const cplx* a, std::size_t dim) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

cplx inner_product_scalar(const cplx* a, const cplx* b, std::size_t dim) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

void scale_scalar(cplx* a, std::size_t dim, double f) {
    for (std::size_t i = 0; i < dim; ++i) a[i] *= f;
}

}  // namespace

const Table& scalar_table() {
    static const Table t{"scalar", apply_single_qubit_scalar, norm_sq_scalar,
                         inner_product_scalar, scale_scalar};
    return t;
}

}  // namespace qgnn::sim::kernels
