#pragma once

#include <random>

#include "qgnn/sim/ops.hpp"

namespace qgnn::sim::gates {

Mat I2();
Mat X();
Mat Y();
Mat Z();
Mat H();
Mat Ry(double theta);   // [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
Mat Rz(double theta);   // diag(e^{-it/2}, e^{+it/2})
Mat Rzz(double theta);  // exp(-i t/2 Z(x)Z)
// Reflection [[cos t, sin t], [sin t, -cos t]]; Hermitian, self-inverse.
Mat Reflection(double theta);

Mat kron(const Mat& a, const Mat& b);

// Deterministic unitary whose first column is `v` (must be unit norm);
// remaining columns completed by modified Gram-Schmidt over basis vectors.
Mat unitary_with_first_column(const Eigen::VectorXcd& v);

// Haar-ish random unitary via QR of a Gaussian matrix; deterministic in rng.
Mat random_unitary(int dim, std::mt19937_64& rng);

// XOR-write permutation |a>|b> -> |a ^ f(b)>|b> on (value_reg, key_reg):
// table over the joint sub-index with value bits above key bits. Width of
// f(b) must fit value_width.
BasisPerm xor_write_table(const std::vector<std::uint32_t>& f, int value_width, int key_width,
                          std::vector<int> value_wires, std::vector<int> key_wires);

}  // namespace qgnn::sim::gates
