#include "qgnn/sim/state_vector.hpp"

#include <cmath>
#include <random>

#include "qgnn/sim/kernels.hpp"

namespace qgnn::sim {

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)), amps_(layout_.dim(), cplx{0.0, 0.0}) {}

double StateVector::norm_sq() const {
    return kernels::active().norm_sq(amps_.data(), amps_.size());
}

void StateVector::renormalize() {
    double n = std::sqrt(norm_sq());
    if (n == 0.0) throw std::runtime_error("state: cannot renormalize the zero vector");
    kernels::active().scale(amps_.data(), amps_.size(), 1.0 / n);
}

StateVector init_basis_state(const RegisterLayout& layout, std::uint64_t index) {
    if (index >= layout.dim())
        throw std::out_of_range("init_basis_state: index " + std::to_string(index) +
                                " out of range for " + std::to_string(layout.total()) + " qubits");
    StateVector s(layout);
    s.amplitudes()[index] = 1.0;
    return s;
}

cplx state_inner_product(const StateVector& a, const StateVector& b) {
    if (!(a.layout() == b.layout())) throw std::invalid_argument("inner_product: layout mismatch");
    return kernels::active().inner_product(a.amplitudes().data(), b.amplitudes().data(), a.dim());
}

namespace {

std::uint64_t registers_mask(const RegisterLayout& l, const std::vector<std::string>& regs) {
    std::uint64_t mask = 0;
    for (const auto& r : regs)
        for (int w : l.wires(r)) mask |= l.wire_mask(w);
    return mask;
}

}  // namespace

double zero_probability(const StateVector& state, const std::vector<std::string>& registers) {
    std::uint64_t mask = registers_mask(state.layout(), registers);
    double p = 0.0;
    const auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & mask) == 0) p += std::norm(a[i]);
    return p;
}

std::pair<StateVector, double> postselect_zero(const StateVector& state,
                                               const std::vector<std::string>& registers) {
    std::uint64_t mask = registers_mask(state.layout(), registers);
    double p = zero_probability(state, registers);
    if (p < 1e-14) throw PostselectImpossible("post-selection impossible: probability below 1e-14");
    StateVector out(state.layout());
    const double inv = 1.0 / std::sqrt(p);
    const auto& a = state.amplitudes();
    auto& o = out.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & mask) == 0) o[i] = a[i] * inv;
    return {std::move(out), p};
}

std::pair<StateVector, double> project_equal_registers(const StateVector& state,
                                                       const std::vector<std::string>& registers) {
    if (registers.size() < 2) throw std::invalid_argument("project_equal_registers: need >= 2 registers");
    const auto& l = state.layout();
    StateVector out(l);
    double p = 0.0;
    const auto& a = state.amplitudes();
    auto& o = out.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        std::uint64_t v0 = l.value(i, registers[0]);
        bool eq = true;
        for (std::size_t r = 1; eq && r < registers.size(); ++r)
            eq = (l.value(i, registers[r]) == v0);
        if (eq) {
            p += std::norm(a[i]);
            o[i] = a[i];
        }
    }
    if (p < 1e-14) throw PostselectImpossible("post-selection impossible: probability below 1e-14");
    const double inv = 1.0 / std::sqrt(p);
    for (auto& v : o) v *= inv;
    return {std::move(out), p};
}

std::map<std::uint64_t, double> born_marginal(const StateVector& state,
                                              const std::vector<std::string>& registers) {
    if (registers.empty()) throw std::invalid_argument("measurement: empty register list");
    const auto& l = state.layout();
    std::map<std::uint64_t, double> probs;
    const auto& a = state.amplitudes();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        double w = std::norm(a[i]);
        if (w == 0.0) continue;
        std::uint64_t key = 0;
        for (const auto& r : registers) key = (key << l.width(r)) | l.value(i, r);
        probs[key] += w;
    }
    return probs;
}

std::map<std::uint64_t, std::uint64_t> sample_measurement(const StateVector& state,
                                                          const std::vector<std::string>& registers,
                                                          std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("measurement: shots must be >= 1");
    auto probs = born_marginal(state, registers);
    std::vector<std::pair<std::uint64_t, double>> cdf;
    cdf.reserve(probs.size());
    double acc = 0.0;
    for (const auto& [k, p] : probs) {
        acc += p;
        cdf.emplace_back(k, acc);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, acc);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = uni(rng);
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u,
                                   [](const auto& a, double b) { return a.second < b; });
        if (it == cdf.end()) --it;
        ++counts[it->first];
    }
    return counts;
}

}  // namespace qgnn::sim
