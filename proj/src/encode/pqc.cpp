#include "qgnn/encode/pqc.hpp"

#include "qgnn/sim/gates.hpp"

namespace qgnn::encode {

using sim::Mat;

int PQCParams::angles_per_layer(int n) {
    int ring = n >= 3 ? n : (n == 2 ? 1 : 0);
    return 2 * n + ring;
}

PQCParams PQCParams::identity(int n, std::string target) {
    PQCParams p;
    p.num_layers = 1;
    p.angles.assign(angles_per_layer(n), 0.0);
    p.target_register = std::move(target);
    return p;
}

PQCParams PQCParams::random(int n, int layers, std::mt19937_64& rng, std::string target) {
    PQCParams p;
    p.num_layers = layers;
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    p.angles.resize(std::size_t(layers) * angles_per_layer(n));
    for (auto& a : p.angles) a = uni(rng);
    p.target_register = std::move(target);
    return p;
}

Mat build_pqc_unitary(const PQCParams& p, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 10) throw std::invalid_argument("pqc: 1..10 qubits supported");
    const int per_layer = PQCParams::angles_per_layer(n_qubits);
    if (int(p.angles.size()) != p.num_layers * per_layer)
        throw std::invalid_argument("pqc: angle count does not match the layer schedule");
    for (double a : p.angles)
        if (!std::isfinite(a)) throw std::invalid_argument("pqc: non-finite angle");

    sim::RegisterLayout l{{{"q", n_qubits}}};
    sim::Circuit c(l);
    const int ring = n_qubits >= 3 ? n_qubits : (n_qubits == 2 ? 1 : 0);
    for (int layer = 0; layer < p.num_layers; ++layer) {
        const double* a = p.angles.data() + std::size_t(layer) * per_layer;
        for (int w = 0; w < n_qubits; ++w) c.push(sim::DenseGate{sim::gates::Ry(a[w]), {w}, {}});
        for (int w = 0; w < n_qubits; ++w)
            c.push(sim::DenseGate{sim::gates::Rz(a[n_qubits + w]), {w}, {}});
        for (int e = 0; e < ring; ++e) {
            int w0 = e, w1 = (e + 1) % n_qubits;
            c.push(sim::DenseGate{sim::gates::Rzz(a[2 * n_qubits + e]), {w0, w1}, {}});
        }
    }
    return sim::circuit_unitary(c);
}

Mat weight_matrix_of(const PQCParams& p, int n_qubits) {
    return build_pqc_unitary(p, n_qubits).transpose();
}

}  // namespace qgnn::encode
