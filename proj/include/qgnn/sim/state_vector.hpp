#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qgnn/sim/register_layout.hpp"

namespace qgnn::sim {

using cplx = std::complex<double>;

struct PostselectImpossible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class StateVector {
public:
    explicit StateVector(RegisterLayout layout);

    const RegisterLayout& layout() const { return layout_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    std::vector<cplx>& amplitudes() { return amps_; }
    cplx amp(std::uint64_t idx) const { return amps_[idx]; }

    double norm_sq() const;
    void renormalize();

private:
    RegisterLayout layout_;
    std::vector<cplx> amps_;
};

// |index> on the given layout. Throws std::out_of_range if index >= 2^total.
StateVector init_basis_state(const RegisterLayout& layout, std::uint64_t index);

// <a|b>; layouts must match.
cplx state_inner_product(const StateVector& a, const StateVector& b);

// Project the named registers to all-zero, renormalize, and return the
// projection probability. Throws PostselectImpossible below 1e-14.
std::pair<StateVector, double> postselect_zero(const StateVector& state,
                                               const std::vector<std::string>& registers);

// Probability of the named registers reading all-zero (no projection).
double zero_probability(const StateVector& state, const std::vector<std::string>& registers);

// Keep only amplitudes where all named registers hold equal values; returns
// (renormalized state, probability). Used for the triple-address diagonal.
std::pair<StateVector, double> project_equal_registers(const StateVector& state,
                                                       const std::vector<std::string>& registers);

// Born-rule counts over the joint value of the named registers (listed first =
// most significant). Deterministic for a fixed seed.
std::map<std::uint64_t, std::uint64_t> sample_measurement(const StateVector& state,
                                                          const std::vector<std::string>& registers,
                                                          std::uint64_t shots, std::uint64_t seed);

// Exact Born marginal over the named registers.
std::map<std::uint64_t, double> born_marginal(const StateVector& state,
                                              const std::vector<std::string>& registers);

}  // namespace qgnn::sim
