#include "qgnn/be/qsvt.hpp"

#include <cmath>

#include "qgnn/sim/gates.hpp"

namespace qgnn::be {

using sim::Circuit;
using sim::cplx;
using sim::Mat;
using sim::RegisterLayout;

double reference_qsvt_scalar(const std::vector<double>& phases, double lambda) {
    if (phases.empty()) throw std::invalid_argument("qsvt scalar: empty phase list");
    if (std::abs(lambda) > 1.0 + 1e-12) throw std::invalid_argument("qsvt scalar: |lambda| > 1");
    lambda = std::clamp(lambda, -1.0, 1.0);
    const cplx i1{0.0, 1.0};
    const double s = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
    Eigen::Matrix2cd w;
    w << lambda, i1 * s, i1 * s, lambda;
    auto ez = [&](double phi) {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = std::polar(1.0, phi);
        m(1, 1) = std::polar(1.0, -phi);
        return m;
    };
    Eigen::Matrix2cd acc = ez(phases[0]);
    for (std::size_t k = 1; k < phases.size(); ++k) acc = acc * w * ez(phases[k]);
    return acc(0, 0).real();
}

std::vector<double> identity_polynomial_phases() { return {0.0, 0.0}; }

BlockEncoding qsvt_transform(const QSVTSpec& spec) {
    const int K = spec.degree();
    if (K < 0) throw std::invalid_argument("qsvt: empty phase list");
    if (K > 8) throw std::invalid_argument("qsvt: degree above 8 not supported at desk scale");
    for (double p : spec.phases)
        if (!std::isfinite(p)) throw std::invalid_argument("qsvt: non-finite phase");

    const BlockEncoding& u = spec.encoding;
    {
        Mat b = extract_encoded_block(u);
        if ((b - b.transpose()).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("qsvt: asymmetric input block");
    }

    // Layout: one real-part ancilla in front of the underlying registers.
    std::string re_name = "re";
    for (int k = 1; u.circuit.layout.has(re_name); ++k) re_name = "re" + std::to_string(k);
    std::vector<std::pair<std::string, int>> regs{{re_name, 1}};
    for (const auto& [n, w] : u.circuit.layout.registers()) regs.push_back({n, w});
    RegisterLayout host(regs);
    const int re_wire = host.wires(re_name)[0];
    std::vector<int> anc_wires;
    for (const auto& a : u.ancilla_regs)
        for (int w : host.wires(a)) anc_wires.push_back(w);

    Circuit c(host);
    c.push(sim::DenseGate{sim::gates::H(), {re_wire}, {}});

    // Operator product e^{i phi_0 P~} V_1 e^{i phi_1 P~} ... V_K e^{i phi_K P~}
    // with V_k = U for odd k, U^dagger for even k; circuit order is reversed.
    // The re ancilla selects the sign of every phase.
    auto push_phase = [&](double phi) {
        if (anc_wires.empty()) {
            // No ancillas: the projector is the identity, phase is global.
            c.push(sim::PhaseOnZero{{}, phi, {{re_wire, 0}}});
            c.push(sim::PhaseOnZero{{}, -phi, {{re_wire, 1}}});
            return;
        }
        c.push(sim::PhaseOnZero{anc_wires, phi, {{re_wire, 0}}});
        c.push(sim::PhaseOnZero{anc_wires, -phi, {{re_wire, 1}}});
    };

    Circuit u_fwd = u.circuit.remapped(host);
    Circuit u_adj = u_fwd.adjoint();

    push_phase(spec.phases[K]);
    for (int k = K; k >= 1; --k) {
        c.append((k % 2 == 1) ? u_fwd : u_adj);
        push_phase(spec.phases[k - 1]);
    }

    c.push(sim::DenseGate{sim::gates::H(), {re_wire}, {}});

    BlockEncoding out;
    out.circuit = std::move(c);
    out.data_reg = u.data_reg;
    out.ancilla_regs = {re_name};
    for (const auto& a : u.ancilla_regs) out.ancilla_regs.push_back(a);
    out.alpha = 1.0;
    out.eps = double(std::max(1, K)) * u.eps + 1e-10;
    return out;
}

}  // namespace qgnn::be
