#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qgnn/graph/one_sparse.hpp"
#include "qgnn/sim/ops.hpp"

namespace qgnn::be {

// A unitary circuit U whose ancilla-zero block represents a matrix:
//   represented = alpha * (<0|_anc U |0>_anc) on the data register,
// up to the declared tolerance eps. Post-selecting the ancillas on all-zero
// implements the block probabilistically.
struct BlockEncoding {
    sim::Circuit circuit;
    std::string data_reg;
    std::vector<std::string> ancilla_regs;
    double alpha = 1.0;
    double eps = 0.0;

    int data_width() const { return circuit.layout.width(data_reg); }
};

struct OneSparseOptions {
    int angle_bits = 8;       // width of the arccos(A)/pi scratch register
    bool exact_angles = true; // rotate by the exact per-column angle (see below)
};

// Block-encoding of a single 1-sparse part: write the d-bit angle, rotate the
// flag ancilla, uncompute the angle register, permute the data basis by c.
//
// With exact_angles the rotation is keyed on the data register with the exact
// arccos value and the block reproduces the part matrix to machine precision;
// the angle register still carries the d-bit code through the rotation and is
// returned to |0..0> on every branch. With exact_angles=false the rotation is
// keyed on the angle register contents (value pi*k/2^d), and the entrywise
// error is bounded by pi*2^-d, folded into eps.
BlockEncoding one_sparse_block_encoding(const graph::OneSparsePart& part,
                                        const OneSparseOptions& opts = {});

// LCU of blocks with positive coefficients: block = sum_l c_l B_l / sum c_l,
// alpha = sum_l c_l (times component alphas), select register of
// ceil(log2(count)) qubits. Component circuits share ancilla registers by
// name; identical names must have identical widths.
BlockEncoding lcu_combine(const std::vector<BlockEncoding>& encodings,
                          const std::vector<double>& coefficients);

// Product AB: apply b then a; ancillas are concatenated (renamed apart),
// alpha and eps multiply/accumulate per the product lemma.
BlockEncoding product_block_encoding(const BlockEncoding& a, const BlockEncoding& b);

// (<0|_anc x I) U (|0>_anc x I), one simulation per data basis column.
sim::Mat extract_encoded_block(const BlockEncoding& enc);

// Convenience: decompose a matrix, encode each part, combine with unit
// coefficients. alpha = number of parts. Entries must lie in [-1, 1].
BlockEncoding encode_sparse_matrix(const Eigen::MatrixXd& m, const OneSparseOptions& opts = {});

}  // namespace qgnn::be
