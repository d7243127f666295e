#include "qgnn/encode/feature_state.hpp"

#include <cmath>

#include "qgnn/sim/gates.hpp"

namespace qgnn::encode {

using sim::cplx;

sim::StateVector prepare_feature_state(const Eigen::MatrixXd& x, const sim::RegisterLayout& layout,
                                       const std::string& i_reg, const std::string& k_reg) {
    const double fnorm = x.norm();
    if (fnorm == 0.0) throw std::invalid_argument("feature state: all-zero feature matrix");
    const int n_i = layout.width(i_reg), n_k = layout.width(k_reg);
    if (x.rows() > (1 << n_i) || x.cols() > (1 << n_k))
        throw std::invalid_argument("feature state: matrix does not fit the registers");
    sim::StateVector s(layout);
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            std::uint64_t idx = layout.with_value(0, i_reg, i);
            idx = layout.with_value(idx, k_reg, k);
            s.amplitudes()[idx] = x(i, k) / fnorm;
        }
    return s;
}

sim::Mat feature_prep_unitary(const Eigen::MatrixXd& x, int n_i, int n_k) {
    const double fnorm = x.norm();
    if (fnorm == 0.0) throw std::invalid_argument("feature state: all-zero feature matrix");
    if (x.rows() > (1 << n_i) || x.cols() > (1 << n_k))
        throw std::invalid_argument("feature state: matrix does not fit the registers");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << (n_i + n_k));
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) v((i << n_k) | k) = x(i, k) / fnorm;
    return sim::gates::unitary_with_first_column(v);
}

Activation activation_from_string(const std::string& s) {
    if (s == "none") return Activation::None;
    if (s == "relu") return Activation::Relu;
    if (s == "tanh") return Activation::Tanh;
    throw std::invalid_argument("activation: unknown '" + s + "'");
}

std::string to_string(Activation a) {
    switch (a) {
        case Activation::None: return "none";
        case Activation::Relu: return "relu";
        case Activation::Tanh: return "tanh";
    }
    return "?";
}

namespace {

double sigma(double v, Activation act) {
    switch (act) {
        case Activation::None: return v;
        case Activation::Relu: return v > 0.0 ? v : 0.0;
        case Activation::Tanh: return std::tanh(v);
    }
    return v;
}

}  // namespace

sim::StateVector apply_idealized_activation(const sim::StateVector& state, Activation act) {
    if (act == Activation::None) return state;
    sim::StateVector out = state;
    for (auto& a : out.amplitudes()) a = cplx{sigma(a.real(), act), sigma(a.imag(), act)};
    if (out.norm_sq() < 1e-28)
        throw std::runtime_error("activation: all amplitudes vanished");
    out.renormalize();
    return out;
}

Eigen::MatrixXd apply_activation_matrix(const Eigen::MatrixXd& m, Activation act) {
    Eigen::MatrixXd out = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = sigma(m(i, j), act);
    return out;
}

}  // namespace qgnn::encode
