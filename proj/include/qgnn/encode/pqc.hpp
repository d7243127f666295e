#pragma once

#include <random>
#include <string>
#include <vector>

#include "qgnn/sim/ops.hpp"

namespace qgnn::encode {

// Hardware-efficient layered ansatz: per layer, Ry and Rz on every wire
// followed by a ring of Rzz entanglers (none for 1 wire, a single coupling
// for 2). All-zero angles give the identity.
struct PQCParams {
    int num_layers = 0;
    std::vector<double> angles;  // layer-major: [ry(w)..., rz(w)..., rzz(e)...] per layer
    std::string target_register = "k";

    static int angles_per_layer(int n_qubits);
    static PQCParams identity(int n_qubits, std::string target = "k");
    static PQCParams random(int n_qubits, int layers, std::mt19937_64& rng,
                            std::string target = "k");
};

// Dense unitary of the ansatz on n_qubits wires (n_qubits <= 10).
sim::Mat build_pqc_unitary(const PQCParams& p, int n_qubits);

// Weight matrix the classical references use for this PQC. Applying the PQC
// on Reg(k) realizes right-multiplication of the feature matrix by the
// TRANSPOSE of the circuit unitary, so W := U^T.
sim::Mat weight_matrix_of(const PQCParams& p, int n_qubits);

}  // namespace qgnn::encode
