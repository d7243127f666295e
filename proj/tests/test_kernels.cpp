#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgnn/sim/kernels.hpp"

using namespace qgnn::sim;
using kernels::cplx;

namespace {

std::vector<cplx> random_amps(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& a : v) a = cplx{g(rng), g(rng)};
    return v;
}

bool have_avx2_backend() {
    try {
        kernels::set_backend("avx2");
    } catch (const std::exception&) {
        kernels::set_backend("auto");
        return false;
    }
    kernels::set_backend("auto");
    return true;
}

}  // namespace

TEST_CASE("scalar single-qubit gate acts like the 2x2 matrix") {
    const auto& t = kernels::scalar_table();
    std::vector<cplx> a = {1.0, 0.0, 0.0, 0.0};  // |00>
    // Hadamard on the low bit (mask 1): |00> -> (|00> + |01>)/sqrt2
    const double s = 1.0 / std::sqrt(2.0);
    cplx h[4] = {s, s, s, -s};
    t.apply_single_qubit(a.data(), a.size(), 1, h);
    CHECK(std::abs(a[0] - s) < 1e-15);
    CHECK(std::abs(a[1] - s) < 1e-15);
    CHECK(std::abs(a[2]) < 1e-15);
}

TEST_CASE("backend dispatch resolves and can be forced") {
    CHECK_NOTHROW(kernels::set_backend("scalar"));
    CHECK(kernels::backend_name() == "scalar");
    CHECK_NOTHROW(kernels::set_backend("auto"));
    CHECK_THROWS(kernels::set_backend("definitely-not-a-backend"));
}

TEST_CASE("simd variants agree with the scalar reference") {
    if (!have_avx2_backend()) {
        MESSAGE("avx2 backend unavailable; equivalence test skipped");
        return;
    }
    const auto& sc = kernels::scalar_table();
    kernels::set_backend("avx2");
    const auto& vx = kernels::active();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g(0.0, 1.0);

    for (int trial = 0; trial < 20; ++trial) {
        std::size_t nq = 3 + (trial % 8);  // 3..10 qubits
        auto a = random_amps(std::size_t(1) << nq, 100 + trial);
        auto b = random_amps(std::size_t(1) << nq, 200 + trial);

        double n1 = sc.norm_sq(a.data(), a.size());
        double n2 = vx.norm_sq(a.data(), a.size());
        CHECK(std::abs(n1 - n2) <= 1e-12 * n1);

        cplx p1 = sc.inner_product(a.data(), b.data(), a.size());
        cplx p2 = vx.inner_product(a.data(), b.data(), a.size());
        CHECK(std::abs(p1 - p2) <= 1e-12 * (std::abs(p1) + 1.0));

        cplx m[4] = {cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)}, cplx{g(rng), g(rng)},
                     cplx{g(rng), g(rng)}};
        for (std::size_t bit = 0; bit < nq; ++bit) {
            auto x = a, y = a;
            sc.apply_single_qubit(x.data(), x.size(), std::size_t(1) << bit, m);
            vx.apply_single_qubit(y.data(), y.size(), std::size_t(1) << bit, m);
            double maxd = 0;
            for (std::size_t i = 0; i < x.size(); ++i) maxd = std::max(maxd, std::abs(x[i] - y[i]));
            CHECK(maxd <= 1e-13);
        }

        auto x = a, y = a;
        sc.scale(x.data(), x.size(), 0.37);
        vx.scale(y.data(), y.size(), 0.37);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
    }
    kernels::set_backend("auto");
}

TEST_CASE("simd results are deterministic run to run") {
    if (!have_avx2_backend()) return;
    kernels::set_backend("avx2");
    const auto& vx = kernels::active();
    auto a = random_amps(1 << 8, 42);
    auto b = a;
    cplx m[4] = {cplx{0.3, 0.1}, cplx{-0.2, 0.5}, cplx{0.9, 0.0}, cplx{0.1, -0.4}};
    vx.apply_single_qubit(a.data(), a.size(), 4, m);
    vx.apply_single_qubit(b.data(), b.size(), 4, m);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].real() == b[i].real());
        CHECK(a[i].imag() == b[i].imag());
    }
    kernels::set_backend("auto");
}
