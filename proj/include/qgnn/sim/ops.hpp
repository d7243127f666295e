#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qgnn/sim/state_vector.hpp"

namespace qgnn::sim {

using Mat = Eigen::MatrixXcd;

// (wire, required value) conditions; an op fires only where all match.
using Controls = std::vector<std::pair<int, int>>;

// Dense unitary block on an ordered wire list (targets[0] = most significant
// bit of the block index). Dimension capped at 2^10.
struct DenseGate {
    Mat u;
    std::vector<int> targets;
    Controls controls;
};

// Bijective relabeling of the basis sub-value held by `targets`.
// table[v] = image of v; pure amplitude moves, no arithmetic.
struct BasisPerm {
    std::vector<std::uint32_t> table;
    std::vector<int> targets;
    Controls controls;
};

// I - 2|0..0><0..0| on `wires` (tensored with identity elsewhere).
struct ReflectZero {
    std::vector<int> wires;
    Controls controls;
};

// exp(i phi (2P - I)) with P the all-zero projector on `wires`:
// phase e^{i phi} on the zero branch, e^{-i phi} elsewhere.
struct PhaseOnZero {
    std::vector<int> wires;
    double phi;
    Controls controls;
};

using Op = std::variant<DenseGate, BasisPerm, ReflectZero, PhaseOnZero>;

Op adjoint_op(const Op& op);
Op with_extra_controls(const Op& op, const Controls& extra);

// A gate sequence bound to a layout. Ops apply in vector order.
struct Circuit {
    RegisterLayout layout;
    std::vector<Op> ops;

    Circuit() = default;
    explicit Circuit(RegisterLayout l) : layout(std::move(l)) {}

    void push(Op op) { ops.push_back(std::move(op)); }
    void append(const Circuit& other);  // same layout required

    Circuit adjoint() const;
    Circuit controlled(const Controls& extra) const;

    // Rebind onto `host`, renaming registers via `rename` (identity for
    // registers not listed). Every register of this circuit must map to a
    // host register of equal width.
    Circuit remapped(const RegisterLayout& host,
                     const std::map<std::string, std::string>& rename = {}) const;
};

void apply_op(StateVector& state, const Op& op);
void apply_circuit(StateVector& state, const Circuit& c);

// Full matrix of the circuit (simulates one basis column at a time).
Mat circuit_unitary(const Circuit& c);

// Unitarity check at the sim-core tolerance (1e-10 by default).
bool is_unitary(const Mat& u, double tol = 1e-10);

// Validated general gate application; checks unitarity of the block, wire
// bounds, and control/target disjointness.
void apply_gate(StateVector& state, const DenseGate& g);

}  // namespace qgnn::sim
