#include "qgnn/sim/gates.hpp"

#include <cmath>

namespace qgnn::sim::gates {

namespace {
const cplx i1{0.0, 1.0};
}

Mat I2() { return Mat::Identity(2, 2); }

Mat X() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat Y() {
    Mat m(2, 2);
    m << 0, -i1, i1, 0;
    return m;
}

Mat Z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Mat H() {
    Mat m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Mat Ry(double t) {
    Mat m(2, 2);
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

Mat Rz(double t) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -t / 2);
    m(1, 1) = std::polar(1.0, t / 2);
    return m;
}

Mat Rzz(double t) {
    Mat m = Mat::Zero(4, 4);
    const cplx e0 = std::polar(1.0, -t / 2), e1 = std::polar(1.0, t / 2);
    m(0, 0) = e0;
    m(1, 1) = e1;
    m(2, 2) = e1;
    m(3, 3) = e0;
    return m;
}

Mat Reflection(double t) {
    Mat m(2, 2);
    m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat unitary_with_first_column(const Eigen::VectorXcd& v) {
    const int n = int(v.size());
    if (std::abs(v.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("unitary_with_first_column: column not normalized");
    Mat u = Mat::Zero(n, n);
    u.col(0) = v;
    int placed = 1;
    for (int e = 0; e < n && placed < n; ++e) {
        Eigen::VectorXcd cand = Eigen::VectorXcd::Zero(n);
        cand(e) = 1.0;
        for (int c = 0; c < placed; ++c) cand -= u.col(c).dot(cand) * u.col(c);
        double nn = cand.norm();
        if (nn > 1e-8) u.col(placed++) = cand / nn;
    }
    if (placed != n) throw std::runtime_error("unitary_with_first_column: completion failed");
    return u;
}

Mat random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = cplx{g(rng), g(rng)};
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        cplx d = r(j, j);
        q.col(j) *= (d == cplx(0.0) ? 1.0 : d / std::abs(d));
    }
    return q;
}

BasisPerm xor_write_table(const std::vector<std::uint32_t>& f, int value_width, int key_width,
                          std::vector<int> value_wires, std::vector<int> key_wires) {
    if (int(value_wires.size()) != value_width || int(key_wires.size()) != key_width)
        throw std::invalid_argument("xor_write_table: wire count mismatch");
    if (f.size() != (std::size_t(1) << key_width))
        throw std::invalid_argument("xor_write_table: table size mismatch");
    const std::uint32_t vmax = std::uint32_t(1) << value_width;
    BasisPerm p;
    p.targets = value_wires;
    p.targets.insert(p.targets.end(), key_wires.begin(), key_wires.end());
    p.table.resize(std::size_t(1) << (value_width + key_width));
    for (std::uint32_t v = 0; v < vmax; ++v)
        for (std::uint32_t k = 0; k < f.size(); ++k) {
            if (f[k] >= vmax) throw std::invalid_argument("xor_write_table: value overflows register");
            p.table[(v << key_width) | k] = ((v ^ f[k]) << key_width) | k;
        }
    return p;
}

}  // namespace qgnn::sim::gates
