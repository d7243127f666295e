#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgnn::sim {

// Named, contiguous qubit registers over one amplitude index.
//
// Conventions (fixed once, used everywhere):
//  * registers are concatenated in layout order, first register most
//    significant;
//  * within a register the first wire is the most significant bit;
//  * wire w (0-based from the front of the layout) owns index bit
//    (total - 1 - w).
class RegisterLayout {
public:
    RegisterLayout() = default;
    RegisterLayout(std::vector<std::pair<std::string, int>> regs, int max_qubits = -1);

    int total() const { return total_; }
    std::size_t dim() const { return std::size_t(1) << total_; }
    bool has(const std::string& name) const;
    int width(const std::string& name) const;
    int offset(const std::string& name) const;  // wire id of the register's first wire
    std::vector<int> wires(const std::string& name) const;
    const std::vector<std::pair<std::string, int>>& registers() const { return regs_; }

    std::uint64_t wire_mask(int wire) const;
    // Value held by a register in basis index `idx`.
    std::uint64_t value(std::uint64_t idx, const std::string& name) const;
    // Basis index with register `name` set to `v`, other bits from `idx`.
    std::uint64_t with_value(std::uint64_t idx, const std::string& name, std::uint64_t v) const;

    bool operator==(const RegisterLayout& o) const { return regs_ == o.regs_; }

    // Default simulator width cap; QGNN_MAX_QUBITS overrides.
    static int max_qubits_default();

private:
    std::vector<std::pair<std::string, int>> regs_;
    int total_ = 0;
    int find(const std::string& name) const;
};

}  // namespace qgnn::sim
