#pragma once

// Amplitude-array kernels for the statevector engine.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The active table is chosen at runtime from cpuid, overridable via
// the QGNN_KERNELS environment variable ("scalar", "avx2", "auto") or
// set_backend(). Variants are equivalence-tested against the scalar path.

#include <complex>
#include <cstddef>
#include <string>

namespace qgnn::sim::kernels {

using cplx = std::complex<double>;

struct Table {
    const char* name;
    // 2x2 gate m (row-major) on the qubit whose index bit is `mask`;
    // touches pairs (p, p | mask) for every p with (p & mask) == 0.
    void (*apply_single_qubit)(cplx* amps, std::size_t dim, std::size_t mask, const cplx m[4]);
    double (*norm_sq)(const cplx* amps, std::size_t dim);
    cplx (*inner_product)(const cplx* a, const cplx* b, std::size_t dim);
    void (*scale)(cplx* amps, std::size_t dim, double factor);
};

const Table& scalar_table();
#ifdef QGNN_BUILD_AVX2
const Table& avx2_table();
#endif

// Active table (resolved once; QGNN_KERNELS consulted on first use).
const Table& active();

// Force a backend by name ("scalar", "avx2", "auto"); throws on unknown or
// unavailable backend. Intended for tests and the CLI.
void set_backend(const std::string& name);
std::string backend_name();

}  // namespace qgnn::sim::kernels
