#pragma once

#include "qgnn/be/block_encoding.hpp"

namespace qgnn::be {

// Alternating-phase eigenvalue transform of a symmetric encoded block.
// phases has length K+1 for polynomial degree K; the induced polynomial has
// parity K mod 2 and is evaluated by reference_qsvt_scalar.
struct QSVTSpec {
    std::vector<double> phases;
    BlockEncoding encoding;

    int degree() const { return int(phases.size()) - 1; }
    bool odd_parity() const { return degree() % 2 == 1; }
};

// Scalar oracle for the induced polynomial: top-left real part of
//   e^{i phi_0 Z} W(x) e^{i phi_1 Z} ... W(x) e^{i phi_K Z},
// with W(x) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]].
double reference_qsvt_scalar(const std::vector<double>& phases, double lambda);

// Block-encoding whose block equals V diag(P(lambda_i)) V^T for the
// eigendecomposition of the underlying encoded block, P given by
// reference_qsvt_scalar on the same phases. The real part of the complex QSP
// polynomial is taken by averaging the +phases and -phases circuits over one
// extra ancilla. Requires the underlying block symmetric within 1e-10 and
// degree <= 8.
BlockEncoding qsvt_transform(const QSVTSpec& spec);

// Phase list whose induced polynomial is P(x) = x.
std::vector<double> identity_polynomial_phases();

}  // namespace qgnn::be
