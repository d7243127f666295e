#pragma once

#include <Eigen/Dense>

#include "qgnn/sim/ops.hpp"

namespace qgnn::encode {

// Amplitude-encode X into registers (i_reg, k_reg) of `layout`:
// amplitude at (i, k) is X(i, k) / ||X||_F, everything else zero.
// Other registers of the layout stay |0>.
sim::StateVector prepare_feature_state(const Eigen::MatrixXd& x, const sim::RegisterLayout& layout,
                                       const std::string& i_reg = "i",
                                       const std::string& k_reg = "k");

// Dense unitary whose first column is the flattened normalized X, for use as
// a state-preparation gate inside larger circuits (Hadamard-test operands).
sim::Mat feature_prep_unitary(const Eigen::MatrixXd& x, int n_i, int n_k);

enum class Activation { None, Relu, Tanh };

Activation activation_from_string(const std::string& s);
std::string to_string(Activation a);

// Idealized amplitude nonlinearity: sigma applied elementwise to the real and
// imaginary parts, then global renormalization. Emulates the external
// amplitude-transformation primitive at simulator level.
sim::StateVector apply_idealized_activation(const sim::StateVector& state, Activation act);

// The matching map on classical matrices (sigma entrywise on M, with M taken
// at the caller's normalization).
Eigen::MatrixXd apply_activation_matrix(const Eigen::MatrixXd& m, Activation act);

}  // namespace qgnn::encode
