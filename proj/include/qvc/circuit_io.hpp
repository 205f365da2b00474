#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qvc/circuit.hpp"
#include "qvc/errors.hpp"

namespace qvc {

// Line-oriented circuit text format:
//
//   qvc-circuit 1
//   qubits <n>
//   data [sym ...]
//   theta [sym ...]
//   KIND q0[,q1,...] [angle-expr]
//
// One gate per line; the angle expression, when present, is everything
// after the qubit list. Writing then reading reproduces the circuit
// structurally, including exact angle constants.

inline void write_circuit(std::ostream& os, const Circuit& c) {
    os << "qvc-circuit 1\n";
    os << "qubits " << c.num_qubits() << "\n";
    os << "data";
    for (const auto& s : c.data_symbols()) os << ' ' << s;
    os << "\n";
    os << "theta";
    for (const auto& s : c.theta_symbols()) os << ' ' << s;
    os << "\n";
    for (const GateOp& op : c.ops()) {
        os << gate_kind_name(op.kind) << ' ';
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            if (i) os << ',';
            os << op.qubits[i];
        }
        if (op.angle) os << ' ' << op.angle->to_string();
        os << "\n";
    }
}

inline std::string circuit_to_string(const Circuit& c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline GateKind gate_kind_from_name(const std::string& name, std::size_t lineno) {
    if (name == "H") return GateKind::H;
    if (name == "RX") return GateKind::RX;
    if (name == "RY") return GateKind::RY;
    if (name == "RZ") return GateKind::RZ;
    if (name == "CX") return GateKind::CX;
    if (name == "MULTIZPHASE") return GateKind::MultiZPhase;
    throw ParseError("unknown gate kind '" + name + "'", lineno);
}

inline std::vector<int> parse_qubit_list(const std::string& text, std::size_t lineno) {
    std::vector<int> qs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        const std::string item = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            qs.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad qubit index '" + item + "'", lineno);
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (qs.empty()) throw ParseError("empty qubit list", lineno);
    return qs;
}

} // namespace detail

inline Circuit read_circuit(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line() || line != "qvc-circuit 1") {
        throw ParseError("expected 'qvc-circuit 1' header", lineno);
    }
    if (!next_line()) throw ParseError("missing 'qubits' line", lineno);
    auto toks = detail::split_ws(line);
    if (toks.size() != 2 || toks[0] != "qubits") throw ParseError("malformed 'qubits' line", lineno);
    const int num_qubits = std::stoi(toks[1]);

    if (!next_line()) throw ParseError("missing 'data' line", lineno);
    toks = detail::split_ws(line);
    if (toks.empty() || toks[0] != "data") throw ParseError("malformed 'data' line", lineno);
    std::vector<std::string> data_symbols(toks.begin() + 1, toks.end());

    if (!next_line()) throw ParseError("missing 'theta' line", lineno);
    toks = detail::split_ws(line);
    if (toks.empty() || toks[0] != "theta") throw ParseError("malformed 'theta' line", lineno);
    std::vector<std::string> theta_symbols(toks.begin() + 1, toks.end());

    std::vector<GateOp> ops;
    while (next_line()) {
        std::istringstream ls(line);
        std::string kind_name, qubit_list;
        ls >> kind_name >> qubit_list;
        if (kind_name.empty() || qubit_list.empty()) {
            throw ParseError("malformed gate line '" + line + "'", lineno);
        }
        const GateKind kind = detail::gate_kind_from_name(kind_name, lineno);
        std::vector<int> qubits = detail::parse_qubit_list(qubit_list, lineno);
        std::string rest;
        std::getline(ls, rest);
        const std::size_t start = rest.find_first_not_of(" \t");
        std::optional<ParamExpr> angle;
        if (start != std::string::npos) {
            try {
                angle = ParamExpr::parse(rest.substr(start));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad angle expression: ") + e.what(), lineno);
            }
        }
        try {
            ops.emplace_back(kind, std::move(qubits), std::move(angle));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return Circuit(num_qubits, std::move(ops), std::move(data_symbols), std::move(theta_symbols));
}

inline Circuit circuit_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_circuit(is);
}

} // namespace qvc
