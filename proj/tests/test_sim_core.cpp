#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgnn/sim/gates.hpp"
#include "qgnn/sim/ops.hpp"

using namespace qgnn::sim;

namespace {

RegisterLayout two_qubits() { return RegisterLayout{{{"q", 2}}}; }

}  // namespace

TEST_CASE("init_basis_state places a single amplitude") {
    auto s0 = init_basis_state(two_qubits(), 0);
    CHECK(s0.amp(0) == cplx{1.0, 0.0});
    auto s3 = init_basis_state(two_qubits(), 3);
    CHECK(s3.amp(3) == cplx{1.0, 0.0});
    CHECK(s3.amp(0) == cplx{0.0, 0.0});
    RegisterLayout three{{{"q", 3}}};
    CHECK_THROWS_AS(init_basis_state(three, 8), std::out_of_range);
}

TEST_CASE("layout invariants") {
    CHECK_THROWS(RegisterLayout{{{"a", 2}, {"a", 1}}});      // duplicate names
    CHECK_THROWS(RegisterLayout({{"a", 30}}, 26));           // cap
    RegisterLayout l{{{"a", 2}, {"b", 3}}};
    CHECK(l.total() == 5);
    CHECK(l.offset("a") == 0);
    CHECK(l.offset("b") == 2);
    // first register is most significant: value of "a" in index 0b10_000
    CHECK(l.value(0b10000, "a") == 2);
    CHECK(l.value(0b00101, "b") == 5);
    CHECK(l.with_value(0, "b", 5) == 0b00101);
}

TEST_CASE("hadamard on |0>") {
    RegisterLayout l{{{"q", 1}}};
    auto s = init_basis_state(l, 0);
    apply_gate(s, DenseGate{gates::H(), {0}, {}});
    CHECK(std::abs(s.amp(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amp(1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-12);
}

TEST_CASE("controlled X with |1> control flips target") {
    auto s = init_basis_state(two_qubits(), 0b10);  // control wire 0 = |1>, target wire 1 = |0>
    apply_gate(s, DenseGate{gates::X(), {1}, {{0, 1}}});
    CHECK(std::abs(s.amp(0b11) - 1.0) < 1e-15);
}

TEST_CASE("zero-valued controls fire on |0>") {
    auto s = init_basis_state(two_qubits(), 0b00);
    apply_gate(s, DenseGate{gates::X(), {1}, {{0, 0}}});
    CHECK(std::abs(s.amp(0b01) - 1.0) < 1e-15);
}

TEST_CASE("random two-qubit unitary followed by its adjoint restores the state") {
    std::mt19937_64 rng(11);
    RegisterLayout l{{{"q", 3}}};
    for (int trial = 0; trial < 10; ++trial) {
        Mat u = gates::random_unitary(4, rng);
        StateVector s(l);
        {
            std::normal_distribution<double> g;
            for (auto& a : s.amplitudes()) a = cplx{g(rng), g(rng)};
            s.renormalize();
        }
        StateVector before = s;
        apply_gate(s, DenseGate{u, {0, 2}, {}});
        CHECK(std::abs(s.norm_sq() - 1.0) <= 1e-12);
        apply_gate(s, DenseGate{Mat(u.adjoint()), {0, 2}, {}});
        double fid = std::abs(state_inner_product(before, s));
        CHECK(fid >= 1.0 - 1e-12);
    }
}

TEST_CASE("non-unitary block is rejected") {
    auto s = init_basis_state(two_qubits(), 0);
    Mat bad(2, 2);
    bad << 1, 1, 0, 1;
    CHECK_THROWS(apply_gate(s, DenseGate{bad, {0}, {}}));
}

TEST_CASE("wire collision is rejected") {
    auto s = init_basis_state(two_qubits(), 0);
    CHECK_THROWS(apply_gate(s, DenseGate{gates::X(), {0}, {{0, 1}}}));
    CHECK_THROWS(apply_gate(s, DenseGate{gates::Rzz(0.3), {1, 1}, {}}));
}

TEST_CASE("norm stays 1 over a long random gate sequence") {
    std::mt19937_64 rng(5);
    RegisterLayout l{{{"a", 2}, {"b", 2}}};
    auto s = init_basis_state(l, 0);
    for (int k = 0; k < 200; ++k) {
        int w = int(rng() % 4);
        apply_gate(s, DenseGate{gates::random_unitary(2, rng), {w}, {}});
    }
    CHECK(std::abs(std::sqrt(s.norm_sq()) - 1.0) <= 1e-12);
}

TEST_CASE("postselect_zero basics") {
    RegisterLayout l{{{"anc", 1}, {"d", 1}}};
    // |0>|psi>
    StateVector s(l);
    s.amplitudes()[0b00] = 0.6;
    s.amplitudes()[0b01] = 0.8;
    auto [out, p] = postselect_zero(s, {"anc"});
    CHECK(p == doctest::Approx(1.0));
    CHECK(std::abs(out.amp(0b01) - 0.8) < 1e-12);

    // (|0>|a> + |1>|b>)/sqrt2 -> p = 0.5
    StateVector t(l);
    t.amplitudes()[0b00] = 1.0 / std::sqrt(2.0);
    t.amplitudes()[0b10] = 1.0 / std::sqrt(2.0);
    auto [out2, p2] = postselect_zero(t, {"anc"});
    CHECK(p2 == doctest::Approx(0.5));
    CHECK(std::abs(out2.amp(0b00) - 1.0) < 1e-12);

    // |1>|psi> -> impossible
    StateVector u(l);
    u.amplitudes()[0b10] = 1.0;
    CHECK_THROWS_AS(postselect_zero(u, {"anc"}), PostselectImpossible);
}

TEST_CASE("postselect probability equals recomputed squared norm of the projected block") {
    std::mt19937_64 rng(19);
    RegisterLayout l{{{"anc", 2}, {"d", 2}}};
    StateVector s(l);
    std::normal_distribution<double> g;
    for (auto& a : s.amplitudes()) a = cplx{g(rng), g(rng)};
    s.renormalize();
    double manual = 0.0;
    for (std::uint64_t i = 0; i < 4; ++i) manual += std::norm(s.amp(i));  // anc = 0 block
    auto [out, p] = postselect_zero(s, {"anc"});
    (void)out;
    CHECK(p == doctest::Approx(manual).epsilon(1e-12));
}

TEST_CASE("inner products") {
    RegisterLayout l{{{"q", 1}}};
    auto zero = init_basis_state(l, 0);
    auto one = init_basis_state(l, 1);
    auto plus = init_basis_state(l, 0);
    apply_gate(plus, DenseGate{gates::H(), {0}, {}});
    CHECK(std::abs(state_inner_product(zero, zero) - 1.0) < 1e-14);
    CHECK(std::abs(state_inner_product(zero, one)) < 1e-14);
    CHECK(std::abs(state_inner_product(plus, zero).real() - 0.70711) < 1e-5);
    RegisterLayout l2{{{"p", 2}}};
    StateVector other(l2);
    CHECK_THROWS(state_inner_product(zero, other));
}

TEST_CASE("sampling: deterministic, concentrated, errors") {
    RegisterLayout l{{{"q", 1}}};
    auto zero = init_basis_state(l, 0);
    auto c = sample_measurement(zero, {"q"}, 100, 1);
    CHECK(c[0] == 100);

    auto plus = init_basis_state(l, 0);
    apply_gate(plus, DenseGate{gates::H(), {0}, {}});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto counts = sample_measurement(plus, {"q"}, 10000, seed);
        double f0 = double(counts[0]) / 10000.0;
        CHECK(std::abs(f0 - 0.5) <= 0.015);
    }
    CHECK_THROWS(sample_measurement(zero, {}, 10, 0));

    auto again = sample_measurement(plus, {"q"}, 1000, 99);
    auto again2 = sample_measurement(plus, {"q"}, 1000, 99);
    CHECK(again == again2);
}

TEST_CASE("empirical frequencies approach Born probabilities at 1e5 shots") {
    std::mt19937_64 rng(3);
    RegisterLayout l{{{"r", 3}, {"pad", 1}}};
    StateVector s(l);
    std::normal_distribution<double> g;
    for (auto& a : s.amplitudes()) a = cplx{g(rng), g(rng)};
    s.renormalize();
    auto probs = born_marginal(s, {"r"});
    auto counts = sample_measurement(s, {"r"}, 100000, 12345);
    for (const auto& [k, p] : probs) {
        double f = double(counts.count(k) ? counts[k] : 0) / 100000.0;
        CHECK(std::abs(f - p) <= 0.01);
    }
}

TEST_CASE("basis permutation moves amplitudes without arithmetic") {
    RegisterLayout l{{{"q", 2}}};
    StateVector s(l);
    s.amplitudes() = {cplx{0.1, 0.2}, cplx{0.3, 0.4}, cplx{0.5, 0.6}, cplx{0.7, 0.8}};
    BasisPerm p{{1, 2, 3, 0}, {0, 1}, {}};  // cyclic shift v -> v+1
    apply_op(s, p);
    CHECK(s.amp(1) == cplx{0.1, 0.2});
    CHECK(s.amp(2) == cplx{0.3, 0.4});
    CHECK(s.amp(0) == cplx{0.7, 0.8});
    // adjoint undoes it bitwise
    apply_op(s, adjoint_op(Op{p}));
    CHECK(s.amp(0) == cplx{0.1, 0.2});
    CHECK(s.amp(3) == cplx{0.7, 0.8});
}

TEST_CASE("circuit adjoint reverses and conjugates") {
    std::mt19937_64 rng(77);
    RegisterLayout l{{{"q", 2}}};
    Circuit c(l);
    c.push(DenseGate{gates::random_unitary(2, rng), {0}, {}});
    c.push(DenseGate{gates::random_unitary(4, rng), {0, 1}, {}});
    c.push(PhaseOnZero{{0}, 0.7, {}});
    c.push(ReflectZero{{1}, {}});
    Mat u = circuit_unitary(c);
    Mat udag = circuit_unitary(c.adjoint());
    CHECK((u * udag - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("remapped circuit acts on the renamed host registers") {
    RegisterLayout sub{{{"d", 1}}};
    Circuit c(sub);
    c.push(DenseGate{gates::X(), {0}, {}});
    RegisterLayout host{{{"a", 1}, {"data", 1}}};
    Circuit r = c.remapped(host, {{"d", "data"}});
    auto s = init_basis_state(host, 0);
    apply_circuit(s, r);
    CHECK(std::abs(s.amp(0b01) - 1.0) < 1e-15);
}

TEST_CASE("project_equal_registers keeps the mutual diagonal") {
    RegisterLayout l{{{"a", 1}, {"b", 1}}};
    StateVector s(l);
    s.amplitudes()[0b00] = 0.5;
    s.amplitudes()[0b01] = 0.5;
    s.amplitudes()[0b10] = 0.5;
    s.amplitudes()[0b11] = 0.5;
    auto [out, p] = project_equal_registers(s, {"a", "b"});
    CHECK(p == doctest::Approx(0.5));
    CHECK(std::abs(out.amp(0b00) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(out.amp(0b01) == cplx{0.0, 0.0});
}
