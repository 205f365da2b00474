#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvc/circuit.hpp"
#include "qvc/param_expr.hpp"

namespace qvc {

// phi_S(x) for one qubit subset S, given the data symbols of that subset.
using DataMapFn = std::function<ParamExpr(const std::vector<int>& pattern,
                                          const std::vector<ParamExpr>& subset_symbols)>;

// Default encoding: phi_{i} = x_i for singletons and
// phi_S = prod_{i in S} (pi - x_i) for larger subsets.
inline ParamExpr default_data_map(const std::vector<int>& pattern,
                                  const std::vector<ParamExpr>& subset_symbols) {
    (void)pattern;
    if (subset_symbols.size() == 1) return subset_symbols.front();
    ParamExpr acc = ParamExpr::pi() - subset_symbols[0];
    for (std::size_t i = 1; i < subset_symbols.size(); ++i) {
        acc = acc * (ParamExpr::pi() - subset_symbols[i]);
    }
    return acc;
}

// Default subsets: every singleton {i}, then the linearly adjacent pairs
// {i, i+1}.
inline std::vector<std::vector<int>> default_z_zz_patterns(int num_qubits) {
    std::vector<std::vector<int>> patterns;
    for (int i = 0; i < num_qubits; ++i) patterns.push_back({i});
    for (int i = 0; i + 1 < num_qubits; ++i) patterns.push_back({i, i + 1});
    return patterns;
}

// Data-encoding circuit: `reps` blocks, each block a Hadamard on every
// qubit followed by one multi-Z phase per subset pattern, with angles
// produced by the data map over symbols x0..x{n-1}.
inline Circuit build_pauli_feature_map(int num_qubits, int reps,
                                       std::vector<std::vector<int>> patterns = {},
                                       DataMapFn data_map = nullptr) {
    if (num_qubits < 1) throw std::invalid_argument("feature map needs at least one qubit");
    if (reps < 1) throw std::invalid_argument("feature map needs at least one repetition");
    if (patterns.empty()) patterns = default_z_zz_patterns(num_qubits);
    if (!data_map) data_map = default_data_map;

    std::vector<std::string> data_symbols;
    std::vector<ParamExpr> x;
    data_symbols.reserve(static_cast<std::size_t>(num_qubits));
    for (int i = 0; i < num_qubits; ++i) {
        data_symbols.push_back("x" + std::to_string(i));
        x.push_back(ParamExpr::symbol(data_symbols.back()));
    }

    for (const auto& pattern : patterns) {
        if (pattern.empty()) throw std::invalid_argument("empty qubit subset in feature map");
        if (static_cast<int>(pattern.size()) > num_qubits) {
            throw std::invalid_argument("feature map subset larger than the register");
        }
        for (int q : pattern) {
            if (q < 0 || q >= num_qubits) {
                throw std::invalid_argument("feature map subset index out of range");
            }
        }
    }

    std::vector<GateOp> ops;
    for (int rep = 0; rep < reps; ++rep) {
        for (int q = 0; q < num_qubits; ++q) ops.push_back(GateOp::h(q));
        for (const auto& pattern : patterns) {
            std::vector<ParamExpr> subset;
            subset.reserve(pattern.size());
            for (int q : pattern) subset.push_back(x[static_cast<std::size_t>(q)]);
            ops.push_back(GateOp::multi_z_phase(pattern, data_map(pattern, subset)));
        }
    }
    return Circuit(num_qubits, std::move(ops), std::move(data_symbols), {});
}

} // namespace qvc
