#include "qgnn/sim/ops.hpp"

#include <algorithm>
#include <cmath>

#include "qgnn/sim/kernels.hpp"

namespace qgnn::sim {

namespace {

struct WireInfo {
    std::uint64_t control_mask = 0;
    std::uint64_t control_want = 0;
};

WireInfo control_info(const RegisterLayout& l, const Controls& cs) {
    WireInfo w;
    for (auto [wire, val] : cs) {
        std::uint64_t m = l.wire_mask(wire);
        w.control_mask |= m;
        if (val) w.control_want |= m;
    }
    return w;
}

void check_disjoint(const RegisterLayout& l, const std::vector<int>& targets, const Controls& cs) {
    for (int t : targets) {
        if (t < 0 || t >= l.total()) throw std::invalid_argument("op: target wire out of range");
        for (auto [c, v] : cs) {
            (void)v;
            if (c == t) throw std::invalid_argument("op: control wire collides with target");
        }
    }
    for (auto [c, v] : cs) {
        (void)v;
        if (c < 0 || c >= l.total()) throw std::invalid_argument("op: control wire out of range");
    }
    auto sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("op: duplicate target wire");
}

void apply_dense(StateVector& state, const DenseGate& g) {
    const auto& l = state.layout();
    const int m = int(g.targets.size());
    if (m == 0) throw std::invalid_argument("op: dense gate with no targets");
    if (m > 10) throw std::invalid_argument("op: dense gate above 2^10 dimension");
    const std::size_t bdim = std::size_t(1) << m;
    if (std::size_t(g.u.rows()) != bdim || std::size_t(g.u.cols()) != bdim)
        throw std::invalid_argument("op: dense block dimension does not match target count");
    check_disjoint(l, g.targets, g.controls);

    auto ci = control_info(l, g.controls);
    auto& amps = state.amplitudes();

    // Fast path: uncontrolled single-qubit gate through the kernel table.
    if (m == 1 && g.controls.empty()) {
        cplx mat[4] = {g.u(0, 0), g.u(0, 1), g.u(1, 0), g.u(1, 1)};
        kernels::active().apply_single_qubit(amps.data(), amps.size(), l.wire_mask(g.targets[0]),
                                             mat);
        return;
    }

    std::vector<std::uint64_t> tmask(m);
    std::uint64_t all_t = 0;
    for (int i = 0; i < m; ++i) {
        tmask[i] = l.wire_mask(g.targets[i]);
        all_t |= tmask[i];
    }

    std::vector<cplx> in(bdim), out(bdim);
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if (base & all_t) continue;
        if ((base & ci.control_mask) != ci.control_want) continue;
        for (std::uint64_t v = 0; v < bdim; ++v) {
            std::uint64_t idx = base;
            for (int b = 0; b < m; ++b)
                if ((v >> (m - 1 - b)) & 1) idx |= tmask[b];
            in[v] = amps[idx];
        }
        for (std::uint64_t r = 0; r < bdim; ++r) {
            cplx acc = 0.0;
            for (std::uint64_t c = 0; c < bdim; ++c) acc += g.u(r, c) * in[c];
            out[r] = acc;
        }
        for (std::uint64_t v = 0; v < bdim; ++v) {
            std::uint64_t idx = base;
            for (int b = 0; b < m; ++b)
                if ((v >> (m - 1 - b)) & 1) idx |= tmask[b];
            amps[idx] = out[v];
        }
    }
}

void apply_perm(StateVector& state, const BasisPerm& p) {
    const auto& l = state.layout();
    const int m = int(p.targets.size());
    const std::size_t bdim = std::size_t(1) << m;
    if (p.table.size() != bdim)
        throw std::invalid_argument("op: permutation table size does not match target count");
    check_disjoint(l, p.targets, p.controls);

    auto ci = control_info(l, p.controls);
    std::vector<std::uint64_t> tmask(m);
    std::uint64_t all_t = 0;
    for (int i = 0; i < m; ++i) {
        tmask[i] = l.wire_mask(p.targets[i]);
        all_t |= tmask[i];
    }
    auto expand = [&](std::uint64_t base, std::uint64_t v) {
        std::uint64_t idx = base;
        for (int b = 0; b < m; ++b)
            if ((v >> (m - 1 - b)) & 1) idx |= tmask[b];
        return idx;
    };

    // Walk permutation cycles per block; amplitudes move, never recompute.
    std::vector<bool> visited(bdim);
    auto& amps = state.amplitudes();
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if (base & all_t) continue;
        if ((base & ci.control_mask) != ci.control_want) continue;
        std::fill(visited.begin(), visited.end(), false);
        for (std::uint64_t start = 0; start < bdim; ++start) {
            if (visited[start] || p.table[start] == start) {
                visited[start] = true;
                continue;
            }
            std::uint64_t cur = start;
            cplx carry = amps[expand(base, cur)];
            do {
                visited[cur] = true;
                std::uint64_t nxt = p.table[cur];
                std::swap(carry, amps[expand(base, nxt)]);
                cur = nxt;
            } while (cur != start);
        }
    }
}

void apply_reflect(StateVector& state, const ReflectZero& r) {
    const auto& l = state.layout();
    auto ci = control_info(l, r.controls);
    std::uint64_t zmask = 0;
    for (int w : r.wires) zmask |= l.wire_mask(w);
    auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        if ((i & ci.control_mask) == ci.control_want && (i & zmask) == 0) amps[i] = -amps[i];
}

void apply_phase(StateVector& state, const PhaseOnZero& p) {
    const auto& l = state.layout();
    auto ci = control_info(l, p.controls);
    std::uint64_t zmask = 0;
    for (int w : p.wires) zmask |= l.wire_mask(w);
    const cplx on = std::polar(1.0, p.phi), off = std::polar(1.0, -p.phi);
    auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & ci.control_mask) != ci.control_want) continue;
        amps[i] *= ((i & zmask) == 0) ? on : off;
    }
}

}  // namespace

bool is_unitary(const Mat& u, double tol) {
    if (u.rows() != u.cols()) return false;
    Mat delta = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
    return delta.cwiseAbs().maxCoeff() <= tol;
}

void apply_gate(StateVector& state, const DenseGate& g) {
    if (!is_unitary(g.u)) throw std::invalid_argument("apply_gate: block is not unitary within 1e-10");
    apply_dense(state, g);
}

void apply_op(StateVector& state, const Op& op) {
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DenseGate>) apply_dense(state, o);
            else if constexpr (std::is_same_v<T, BasisPerm>) apply_perm(state, o);
            else if constexpr (std::is_same_v<T, ReflectZero>) apply_reflect(state, o);
            else apply_phase(state, o);
        },
        op);
}

void apply_circuit(StateVector& state, const Circuit& c) {
    if (!(state.layout() == c.layout)) throw std::invalid_argument("apply_circuit: layout mismatch");
    for (const auto& op : c.ops) apply_op(state, op);
}

Op adjoint_op(const Op& op) {
    return std::visit(
        [](const auto& o) -> Op {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, DenseGate>) {
                DenseGate g = o;
                g.u = Mat(o.u.adjoint());
                return g;
            } else if constexpr (std::is_same_v<T, BasisPerm>) {
                BasisPerm p = o;
                for (std::uint32_t v = 0; v < o.table.size(); ++v) p.table[o.table[v]] = v;
                return p;
            } else if constexpr (std::is_same_v<T, ReflectZero>) {
                return o;  // self-adjoint
            } else {
                PhaseOnZero p = o;
                p.phi = -o.phi;
                return p;
            }
        },
        op);
}

Op with_extra_controls(const Op& op, const Controls& extra) {
    return std::visit(
        [&](auto o) -> Op {
            o.controls.insert(o.controls.end(), extra.begin(), extra.end());
            return o;
        },
        op);
}

void Circuit::append(const Circuit& other) {
    if (!(layout == other.layout)) throw std::invalid_argument("circuit append: layout mismatch");
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

Circuit Circuit::adjoint() const {
    Circuit out(layout);
    out.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) out.push(adjoint_op(*it));
    return out;
}

Circuit Circuit::controlled(const Controls& extra) const {
    Circuit out(layout);
    out.ops.reserve(ops.size());
    for (const auto& op : ops) out.push(with_extra_controls(op, extra));
    return out;
}

Circuit Circuit::remapped(const RegisterLayout& host,
                          const std::map<std::string, std::string>& rename) const {
    // Per-wire translation table computed from register name mapping.
    std::vector<int> tr(layout.total(), -1);
    for (const auto& [name, w] : layout.registers()) {
        auto it = rename.find(name);
        const std::string& hname = (it == rename.end()) ? name : it->second;
        if (!host.has(hname) || host.width(hname) != w)
            throw std::invalid_argument("remap: host register '" + hname + "' missing or width mismatch");
        int src = layout.offset(name), dst = host.offset(hname);
        for (int i = 0; i < w; ++i) tr[src + i] = dst + i;
    }
    auto trwires = [&](std::vector<int> ws) {
        for (int& w : ws) w = tr[w];
        return ws;
    };
    auto trcontrols = [&](Controls cs) {
        for (auto& [w, v] : cs) {
            (void)v;
            w = tr[w];
        }
        return cs;
    };
    Circuit out(host);
    for (const auto& op : ops) {
        out.push(std::visit(
            [&](auto o) -> Op {
                using T = std::decay_t<decltype(o)>;
                if constexpr (std::is_same_v<T, ReflectZero> || std::is_same_v<T, PhaseOnZero>) {
                    o.wires = trwires(o.wires);
                } else {
                    o.targets = trwires(o.targets);
                }
                o.controls = trcontrols(o.controls);
                return o;
            },
            op));
    }
    return out;
}

Mat circuit_unitary(const Circuit& c) {
    const std::size_t dim = c.layout.dim();
    if (c.layout.total() > 12) throw std::invalid_argument("circuit_unitary: too many wires");
    Mat u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector s = init_basis_state(c.layout, col);
        apply_circuit(s, c);
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = s.amp(row);
    }
    return u;
}

}  // namespace qgnn::sim
