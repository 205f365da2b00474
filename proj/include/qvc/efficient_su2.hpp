#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qvc/circuit.hpp"
#include "qvc/param_expr.hpp"

namespace qvc {

enum class Entanglement { linear, full };

inline const char* entanglement_name(Entanglement e) {
    return e == Entanglement::linear ? "linear" : "full";
}

inline Entanglement entanglement_from_name(const std::string& name) {
    if (name == "linear") return Entanglement::linear;
    if (name == "full") return Entanglement::full;
    throw std::invalid_argument("unknown entanglement '" + name + "'");
}

// Hardware-efficient ansatz: reps+1 rotation layers (RY then RZ on every
// qubit, fresh symbols t0, t1, ...) with a CX entanglement layer between
// consecutive rotation layers. Trainable parameter count is 2*n*(reps+1).
inline Circuit build_efficient_su2(int num_qubits, int reps,
                                   Entanglement entanglement = Entanglement::linear,
                                   const std::string& symbol_prefix = "t") {
    if (num_qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
    if (reps < 0) throw std::invalid_argument("ansatz repetitions must be >= 0");

    std::vector<std::string> theta_symbols;
    std::vector<GateOp> ops;
    int next = 0;
    auto fresh = [&] {
        theta_symbols.push_back(symbol_prefix + std::to_string(next++));
        return ParamExpr::symbol(theta_symbols.back());
    };

    for (int layer = 0; layer <= reps; ++layer) {
        if (layer > 0) {
            if (entanglement == Entanglement::linear) {
                for (int q = 0; q + 1 < num_qubits; ++q) ops.push_back(GateOp::cx(q, q + 1));
            } else {
                for (int c = 0; c < num_qubits; ++c)
                    for (int t = c + 1; t < num_qubits; ++t) ops.push_back(GateOp::cx(c, t));
            }
        }
        for (int q = 0; q < num_qubits; ++q) ops.push_back(GateOp::ry(fresh(), q));
        for (int q = 0; q < num_qubits; ++q) ops.push_back(GateOp::rz(fresh(), q));
    }
    return Circuit(num_qubits, std::move(ops), {}, std::move(theta_symbols));
}

} // namespace qvc
