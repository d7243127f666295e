#include "qgnn/sim/register_layout.hpp"

#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace qgnn::sim {

int RegisterLayout::max_qubits_default() {
    if (const char* env = std::getenv("QGNN_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 26;
}

RegisterLayout::RegisterLayout(std::vector<std::pair<std::string, int>> regs, int max_qubits)
    : regs_(std::move(regs)) {
    if (max_qubits < 0) max_qubits = max_qubits_default();
    std::unordered_set<std::string> seen;
    for (const auto& [name, w] : regs_) {
        if (w <= 0) throw std::invalid_argument("layout: register '" + name + "' has width " + std::to_string(w));
        if (!seen.insert(name).second) throw std::invalid_argument("layout: duplicate register '" + name + "'");
        total_ += w;
    }
    if (total_ > max_qubits)
        throw std::invalid_argument("layout: " + std::to_string(total_) + " qubits exceeds cap of " +
                                    std::to_string(max_qubits));
    if (total_ == 0) throw std::invalid_argument("layout: empty");
}

int RegisterLayout::find(const std::string& name) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].first == name) return int(i);
    throw std::invalid_argument("layout: no register '" + name + "'");
}

bool RegisterLayout::has(const std::string& name) const {
    for (const auto& r : regs_)
        if (r.first == name) return true;
    return false;
}

int RegisterLayout::width(const std::string& name) const { return regs_[find(name)].second; }

int RegisterLayout::offset(const std::string& name) const {
    int off = 0;
    for (const auto& [n, w] : regs_) {
        if (n == name) return off;
        off += w;
    }
    throw std::invalid_argument("layout: no register '" + name + "'");
}

std::vector<int> RegisterLayout::wires(const std::string& name) const {
    int off = offset(name), w = width(name);
    std::vector<int> out(w);
    for (int i = 0; i < w; ++i) out[i] = off + i;
    return out;
}

std::uint64_t RegisterLayout::wire_mask(int wire) const {
    return std::uint64_t(1) << (total_ - 1 - wire);
}

std::uint64_t RegisterLayout::value(std::uint64_t idx, const std::string& name) const {
    int off = offset(name), w = width(name);
    int shift = total_ - off - w;
    return (idx >> shift) & ((std::uint64_t(1) << w) - 1);
}

std::uint64_t RegisterLayout::with_value(std::uint64_t idx, const std::string& name,
                                         std::uint64_t v) const {
    int off = offset(name), w = width(name);
    int shift = total_ - off - w;
    std::uint64_t mask = ((std::uint64_t(1) << w) - 1) << shift;
    return (idx & ~mask) | ((v << shift) & mask);
}

}  // namespace qgnn::sim
