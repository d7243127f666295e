#include "qgnn/sim/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qgnn::sim::kernels {

namespace {

bool avx2_available() {
#if defined(QGNN_BUILD_AVX2) && (defined(__x86_64__) || defined(_M_X64))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table* resolve(const std::string& name) {
    if (name == "scalar") return &scalar_table();
    if (name == "avx2") {
#ifdef QGNN_BUILD_AVX2
        if (avx2_available()) return &avx2_table();
        throw std::runtime_error("kernels: avx2 requested but not supported by this cpu");
#else
        throw std::runtime_error("kernels: avx2 backend not built");
#endif
    }
    if (name == "auto") {
#ifdef QGNN_BUILD_AVX2
        if (avx2_available()) return &avx2_table();
#endif
        return &scalar_table();
    }
    throw std::runtime_error("kernels: unknown backend '" + name + "'");
}

const Table*& slot() {
    static const Table* t = [] {
        const char* env = std::getenv("QGNN_KERNELS");
        return resolve(env ? env : "auto");
    }();
    return t;
}

}  // namespace

const Table& active() { return *slot(); }

void set_backend(const std::string& name) { slot() = resolve(name); }

std::string backend_name() { return active().name; }

}  // namespace qgnn::sim::kernels
