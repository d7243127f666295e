#include "qgnn/be/block_encoding.hpp"

#include <cmath>
#include <map>

#include "qgnn/sim/gates.hpp"

namespace qgnn::be {

using sim::Circuit;
using sim::cplx;
using sim::Mat;
using sim::RegisterLayout;

namespace {

int width_for(int count) {
    int w = 0;
    while ((1 << w) < count) ++w;
    return w;
}

}  // namespace

BlockEncoding one_sparse_block_encoding(const graph::OneSparsePart& part,
                                        const OneSparseOptions& opts) {
    const int n_vals = int(part.perm.size());
    const int n = std::max(1, width_for(n_vals));
    const int d = opts.angle_bits;
    if (d < 1 || d > 16) throw std::invalid_argument("one-sparse: angle_bits out of range");
    for (double v : part.values)
        if (std::abs(v) > 1.0) throw std::invalid_argument("one-sparse: |value| > 1");

    RegisterLayout l{{{"rot", 1}, {"angle", d}, {"data", n}}};
    Circuit c(l);
    const auto angle_wires = l.wires("angle");
    const auto data_wires = l.wires("data");
    const int rot_wire = l.wires("rot")[0];

    // theta_j = arccos(A_{c(j),j}) / pi, stored as a d-bit code. Columns
    // beyond the matrix dimension behave as value-0 identity columns.
    const std::uint32_t dmax = (std::uint32_t(1) << d) - 1;
    std::vector<double> theta(std::size_t(1) << n, std::acos(0.0) / M_PI);
    std::vector<std::uint32_t> code(std::size_t(1) << n);
    for (int j = 0; j < (1 << n); ++j) {
        if (j < n_vals) theta[j] = std::acos(part.values[j]) / M_PI;
        code[j] = std::min<std::uint32_t>(dmax, std::uint32_t(std::lround(theta[j] * (1 << d))));
    }

    // O_A': |a>|j> -> |a xor code_j>|j>
    auto write_angle = sim::gates::xor_write_table(code, d, n, angle_wires, data_wires);
    c.push(write_angle);

    // CR: reflection R(theta) on the rot ancilla, column 0 = (A, sqrt(1-A^2)).
    if (opts.exact_angles) {
        Mat cr = Mat::Zero(std::size_t(2) << n, std::size_t(2) << n);
        for (int j = 0; j < (1 << n); ++j) {
            Mat r = sim::gates::Reflection(theta[j] * M_PI);
            for (int b0 = 0; b0 < 2; ++b0)
                for (int b1 = 0; b1 < 2; ++b1) cr((b0 << n) | j, (b1 << n) | j) = r(b0, b1);
        }
        std::vector<int> targets{rot_wire};
        targets.insert(targets.end(), data_wires.begin(), data_wires.end());
        c.push(sim::DenseGate{cr, targets, {}});
    } else {
        // Rotation read from the angle register: Ry(2 pi 2^(d-1-b) / 2^d) per
        // set bit, then Z, composing R(pi * k / 2^d).
        for (int b = 0; b < d; ++b) {
            double step = 2.0 * M_PI * double(std::uint64_t(1) << (d - 1 - b)) / double(1 << d);
            c.push(sim::DenseGate{sim::gates::Ry(step), {rot_wire}, {{angle_wires[b], 1}}});
        }
        c.push(sim::DenseGate{sim::gates::Z(), {rot_wire}, {}});
    }

    // Uncompute O_A' (xor write is self-inverse), then O_c on the data basis.
    c.push(write_angle);
    sim::BasisPerm oc;
    oc.targets = data_wires;
    oc.table.resize(std::size_t(1) << n);
    for (int j = 0; j < (1 << n); ++j) oc.table[j] = (j < n_vals) ? std::uint32_t(part.perm[j]) : std::uint32_t(j);
    c.push(oc);

    BlockEncoding enc;
    enc.circuit = std::move(c);
    enc.data_reg = "data";
    enc.ancilla_regs = {"rot", "angle"};
    enc.alpha = 1.0;
    enc.eps = opts.exact_angles ? 1e-12 : M_PI / double(1 << d);
    return enc;
}

BlockEncoding lcu_combine(const std::vector<BlockEncoding>& encodings,
                          const std::vector<double>& coefficients) {
    if (encodings.empty()) throw std::invalid_argument("lcu: empty encoding list");
    if (encodings.size() != coefficients.size())
        throw std::invalid_argument("lcu: coefficient count mismatch");
    for (double ci : coefficients)
        if (!(ci > 0.0)) throw std::invalid_argument("lcu: coefficients must be positive");
    const int L = int(encodings.size());
    const int nd = encodings[0].data_width();
    for (const auto& e : encodings)
        if (e.data_width() != nd) throw std::invalid_argument("lcu: data register width mismatch");

    // Merged register list: select first, then the union of component
    // ancillas (shared by name), then data. The select name must not collide
    // with any component ancilla (nested LCUs).
    const int sel_w = width_for(L);
    std::string sel_name = "sel";
    {
        auto taken = [&](const std::string& n) {
            for (const auto& e : encodings)
                if (e.circuit.layout.has(n)) return true;
            return false;
        };
        for (int k = 1; taken(sel_name); ++k) sel_name = "sel" + std::to_string(k);
    }
    std::vector<std::pair<std::string, int>> regs;
    if (sel_w > 0) regs.push_back({sel_name, sel_w});
    std::vector<std::string> anc_names;
    if (sel_w > 0) anc_names.push_back(sel_name);
    for (const auto& e : encodings)
        for (const auto& a : e.ancilla_regs) {
            int w = e.circuit.layout.width(a);
            bool found = false;
            for (auto& [rn, rw] : regs)
                if (rn == a) {
                    if (rw != w) throw std::invalid_argument("lcu: ancilla register width clash for '" + a + "'");
                    found = true;
                }
            if (!found) {
                regs.push_back({a, w});
                anc_names.push_back(a);
            }
        }
    regs.push_back({"data", encodings[0].circuit.layout.width(encodings[0].data_reg)});
    RegisterLayout host(regs);

    Circuit c(host);
    double csum = 0.0;
    for (double ci : coefficients) csum += ci;

    if (sel_w > 0) {
        Eigen::VectorXcd prep = Eigen::VectorXcd::Zero(1 << sel_w);
        for (int i = 0; i < L; ++i) prep(i) = std::sqrt(coefficients[i] / csum);
        Mat prep_u = sim::gates::unitary_with_first_column(prep);
        auto sel_wires = host.wires(sel_name);
        c.push(sim::DenseGate{prep_u, sel_wires, {}});
        for (int li = 0; li < L; ++li) {
            sim::Controls ctl;
            for (int b = 0; b < sel_w; ++b) ctl.push_back({sel_wires[b], (li >> (sel_w - 1 - b)) & 1});
            Circuit sub = encodings[li].circuit.remapped(host, {{encodings[li].data_reg, "data"}});
            c.append(sub.controlled(ctl));
        }
        c.push(sim::DenseGate{Mat(prep_u.adjoint()), sel_wires, {}});
    } else {
        c.append(encodings[0].circuit.remapped(host, {{encodings[0].data_reg, "data"}}));
    }

    BlockEncoding out;
    out.circuit = std::move(c);
    out.data_reg = "data";
    out.ancilla_regs = anc_names;
    double alpha_in = 0.0, eps_in = 0.0;
    for (int i = 0; i < L; ++i) {
        alpha_in = std::max(alpha_in, encodings[i].alpha);
        eps_in = std::max(eps_in, encodings[i].eps);
    }
    out.alpha = csum * alpha_in;
    out.eps = eps_in;
    return out;
}

BlockEncoding product_block_encoding(const BlockEncoding& a, const BlockEncoding& b) {
    if (a.data_width() != b.data_width())
        throw std::invalid_argument("product: data register dimension mismatch");

    std::vector<std::pair<std::string, int>> regs;
    std::map<std::string, std::string> rename_a, rename_b;
    std::vector<std::string> anc_names;
    for (const auto& r : a.ancilla_regs) {
        std::string nn = "a." + r;
        rename_a[r] = nn;
        regs.push_back({nn, a.circuit.layout.width(r)});
        anc_names.push_back(nn);
    }
    for (const auto& r : b.ancilla_regs) {
        std::string nn = "b." + r;
        rename_b[r] = nn;
        regs.push_back({nn, b.circuit.layout.width(r)});
        anc_names.push_back(nn);
    }
    regs.push_back({"data", a.circuit.layout.width(a.data_reg)});
    rename_a[a.data_reg] = "data";
    rename_b[b.data_reg] = "data";
    RegisterLayout host(regs);

    Circuit c(host);
    c.append(b.circuit.remapped(host, rename_b));
    c.append(a.circuit.remapped(host, rename_a));

    BlockEncoding out;
    out.circuit = std::move(c);
    out.data_reg = "data";
    out.ancilla_regs = anc_names;
    out.alpha = a.alpha * b.alpha;
    out.eps = a.alpha * b.eps + b.alpha * a.eps + 1e-12;
    return out;
}

sim::Mat extract_encoded_block(const BlockEncoding& enc) {
    const auto& l = enc.circuit.layout;
    const int n = enc.data_width();
    const std::size_t dim = std::size_t(1) << n;
    Mat block(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto s = sim::init_basis_state(l, l.with_value(0, enc.data_reg, col));
        sim::apply_circuit(s, enc.circuit);
        for (std::size_t row = 0; row < dim; ++row)
            block(row, col) = s.amp(l.with_value(0, enc.data_reg, row));
    }
    return block;
}

BlockEncoding encode_sparse_matrix(const Eigen::MatrixXd& m, const OneSparseOptions& opts) {
    auto dec = graph::one_sparse_decompose(m);
    std::vector<BlockEncoding> encs;
    encs.reserve(dec.parts.size());
    for (const auto& p : dec.parts) encs.push_back(one_sparse_block_encoding(p, opts));
    return lcu_combine(encs, std::vector<double>(dec.parts.size(), 1.0));
}

}  // namespace qgnn::be
