#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qvc/errors.hpp"
#include "qvc/param_expr.hpp"
#include "qvc/statevector.hpp"

namespace qvc {

enum class GateKind { H, RX, RY, RZ, CX, MultiZPhase };

inline const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::CX: return "CX";
        case GateKind::MultiZPhase: return "MULTIZPHASE";
    }
    return "?";
}

// One gate in the IR. H and CX carry no angle; rotations and MultiZPhase
// carry exactly one. Arity is fixed by the kind (1, 2 for CX, >=1 for
// MultiZPhase); all of this is enforced at construction.
struct GateOp {
    GateKind kind;
    std::vector<int> qubits;
    std::optional<ParamExpr> angle;

    GateOp(GateKind k, std::vector<int> qs, std::optional<ParamExpr> a)
        : kind(k), qubits(std::move(qs)), angle(std::move(a)) {
        const bool wants_angle =
            kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
            kind == GateKind::MultiZPhase;
        if (wants_angle != angle.has_value()) {
            throw std::invalid_argument(std::string(gate_kind_name(kind)) +
                                        (wants_angle ? " requires an angle" : " carries no angle"));
        }
        switch (kind) {
            case GateKind::CX:
                if (qubits.size() != 2) throw std::invalid_argument("CX needs two qubits");
                if (qubits[0] == qubits[1]) {
                    throw std::invalid_argument("CX control and target must differ");
                }
                break;
            case GateKind::MultiZPhase:
                if (qubits.empty()) {
                    throw std::invalid_argument("MULTIZPHASE needs at least one qubit");
                }
                break;
            default:
                if (qubits.size() != 1) {
                    throw std::invalid_argument(std::string(gate_kind_name(kind)) +
                                                " needs exactly one qubit");
                }
        }
    }

    static GateOp h(int q) { return {GateKind::H, {q}, std::nullopt}; }
    static GateOp rx(ParamExpr a, int q) { return {GateKind::RX, {q}, std::move(a)}; }
    static GateOp ry(ParamExpr a, int q) { return {GateKind::RY, {q}, std::move(a)}; }
    static GateOp rz(ParamExpr a, int q) { return {GateKind::RZ, {q}, std::move(a)}; }
    static GateOp cx(int control, int target) { return {GateKind::CX, {control, target}, std::nullopt}; }
    static GateOp multi_z_phase(std::vector<int> qs, ParamExpr a) {
        return {GateKind::MultiZPhase, std::move(qs), std::move(a)};
    }

    bool operator==(const GateOp& o) const {
        if (kind != o.kind || qubits != o.qubits || angle.has_value() != o.angle.has_value())
            return false;
        return !angle || *angle == *o.angle;
    }
};

// Parameterized circuit: ordered gate list plus the two ordered symbol
// lists (data x, trainable theta). Immutable after construction; every
// referenced symbol must appear in exactly one list and qubit indices must
// be in range. Construction also compiles each angle into a small postfix
// program over (data, theta) indices so repeated binding stays cheap.
class Circuit {
  public:
    Circuit(int num_qubits, std::vector<GateOp> ops, std::vector<std::string> data_symbols,
            std::vector<std::string> theta_symbols)
        : num_qubits_(num_qubits),
          ops_(std::move(ops)),
          data_symbols_(std::move(data_symbols)),
          theta_symbols_(std::move(theta_symbols)) {
        if (num_qubits_ < 1) throw std::invalid_argument("circuit needs at least one qubit");
        std::unordered_map<std::string, std::pair<char, int>> table;
        for (std::size_t i = 0; i < data_symbols_.size(); ++i) {
            if (!table.emplace(data_symbols_[i], std::pair<char, int>{'x', static_cast<int>(i)}).second)
                throw std::invalid_argument("duplicate symbol '" + data_symbols_[i] + "'");
        }
        for (std::size_t i = 0; i < theta_symbols_.size(); ++i) {
            if (!table.emplace(theta_symbols_[i], std::pair<char, int>{'t', static_cast<int>(i)}).second)
                throw std::invalid_argument("symbol '" + theta_symbols_[i] +
                                            "' appears in both symbol lists or twice");
        }
        programs_.reserve(ops_.size());
        for (const GateOp& op : ops_) {
            for (int q : op.qubits) {
                if (q < 0 || q >= num_qubits_) {
                    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                                " out of range for " +
                                                std::to_string(num_qubits_) + "-qubit circuit");
                }
            }
            programs_.push_back(op.angle ? compile_angle(*op.angle, table) : AngleProgram{});
        }
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }
    const std::vector<std::string>& data_symbols() const { return data_symbols_; }
    const std::vector<std::string>& theta_symbols() const { return theta_symbols_; }

    bool fully_bound() const {
        for (const GateOp& op : ops_) {
            if (op.angle && !op.angle->is_constant()) return false;
        }
        return true;
    }

    // Substitutes x into the data symbols and theta into the trainable
    // symbols, positionally. Every angle becomes a constant.
    Circuit bind(std::span<const double> x, std::span<const double> theta) const {
        check_binding_arity(x.size(), theta.size());
        std::vector<GateOp> bound;
        bound.reserve(ops_.size());
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const GateOp& op = ops_[i];
            if (op.angle) {
                bound.emplace_back(op.kind, op.qubits,
                                   ParamExpr::constant(programs_[i].eval(x, theta)));
            } else {
                bound.push_back(op);
            }
        }
        return Circuit(num_qubits_, std::move(bound), data_symbols_, theta_symbols_);
    }

    // Applies the ops in order onto an existing state. Requires a fully
    // bound circuit and a matching register size.
    void apply_to(Statevector& state) const {
        if (state.num_qubits() != num_qubits_) {
            throw std::invalid_argument("state size does not match circuit register");
        }
        for (const GateOp& op : ops_) {
            if (op.angle && !op.angle->is_constant()) {
                throw BindingError("cannot simulate: unbound symbol in angle '" +
                                   op.angle->to_string() + "'");
            }
        }
        for (const GateOp& op : ops_) {
            apply_op(state, op, op.angle ? op.angle->constant_value() : 0.0);
        }
    }

    // Applies the ops in order to |0...0>. Requires a fully bound circuit.
    Statevector simulate() const {
        Statevector state(num_qubits_);
        apply_to(state);
        return state;
    }

    // bind + simulate without materializing the bound circuit. Same result
    // as simulate-of-bind; this is the hot path for training loops.
    Statevector simulate_with(std::span<const double> x, std::span<const double> theta) const {
        check_binding_arity(x.size(), theta.size());
        Statevector state(num_qubits_);
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            const GateOp& op = ops_[i];
            apply_op(state, op, op.angle ? programs_[i].eval(x, theta) : 0.0);
        }
        return state;
    }

    // Reversed op order with negated rotation/phase angles. H and CX are
    // their own inverses. Requires a fully bound circuit.
    Circuit inverse() const {
        if (!fully_bound()) throw BindingError("inverse requires a fully bound circuit");
        std::vector<GateOp> rev;
        rev.reserve(ops_.size());
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
            if (it->angle) {
                rev.emplace_back(it->kind, it->qubits,
                                 ParamExpr::constant(-it->angle->constant_value()));
            } else {
                rev.push_back(*it);
            }
        }
        return Circuit(num_qubits_, std::move(rev), data_symbols_, theta_symbols_);
    }

    bool operator==(const Circuit& o) const {
        return num_qubits_ == o.num_qubits_ && ops_ == o.ops_ &&
               data_symbols_ == o.data_symbols_ && theta_symbols_ == o.theta_symbols_;
    }

  private:
    struct AngleProgram {
        enum class Op : unsigned char { push_const, push_data, push_theta, add, sub, mul, neg };
        struct Instr {
            Op op;
            int index = 0;
            double value = 0.0;
        };
        std::vector<Instr> code;

        double eval(std::span<const double> x, std::span<const double> theta) const {
            double stack[kMaxStack];
            int top = -1;
            for (const Instr& ins : code) {
                switch (ins.op) {
                    case Op::push_const: stack[++top] = ins.value; break;
                    case Op::push_data: stack[++top] = x[static_cast<std::size_t>(ins.index)]; break;
                    case Op::push_theta: stack[++top] = theta[static_cast<std::size_t>(ins.index)]; break;
                    case Op::add: --top; stack[top] += stack[top + 1]; break;
                    case Op::sub: --top; stack[top] -= stack[top + 1]; break;
                    case Op::mul: --top; stack[top] *= stack[top + 1]; break;
                    case Op::neg: stack[top] = -stack[top]; break;
                }
            }
            return stack[0];
        }

        static constexpr int kMaxStack = 64;
    };

    AngleProgram compile_angle(const ParamExpr& expr,
                               const std::unordered_map<std::string, std::pair<char, int>>& table) {
        AngleProgram prog;
        int depth = 0, max_depth = 0;
        compile_node(expr, table, prog, depth, max_depth);
        if (max_depth > AngleProgram::kMaxStack) {
            throw std::invalid_argument("angle expression too deep");
        }
        return prog;
    }

    static void compile_node(const ParamExpr& e,
                             const std::unordered_map<std::string, std::pair<char, int>>& table,
                             AngleProgram& prog, int& depth, int& max_depth) {
        using Op = AngleProgram::Op;
        switch (e.kind()) {
            case ParamExpr::Kind::constant:
                prog.code.push_back({Op::push_const, 0, e.constant_value()});
                max_depth = std::max(max_depth, ++depth);
                break;
            case ParamExpr::Kind::symbol: {
                auto it = table.find(e.symbol_name());
                if (it == table.end()) {
                    throw std::invalid_argument("angle references symbol '" + e.symbol_name() +
                                                "' missing from the circuit symbol lists");
                }
                prog.code.push_back({it->second.first == 'x' ? Op::push_data : Op::push_theta,
                                     it->second.second, 0.0});
                max_depth = std::max(max_depth, ++depth);
                break;
            }
            case ParamExpr::Kind::neg:
                compile_node(e.lhs(), table, prog, depth, max_depth);
                prog.code.push_back({Op::neg, 0, 0.0});
                break;
            default: {
                compile_node(e.lhs(), table, prog, depth, max_depth);
                compile_node(e.rhs(), table, prog, depth, max_depth);
                const Op op = e.kind() == ParamExpr::Kind::add   ? Op::add
                              : e.kind() == ParamExpr::Kind::sub ? Op::sub
                                                                 : Op::mul;
                prog.code.push_back({op, 0, 0.0});
                --depth;
                break;
            }
        }
    }

    void check_binding_arity(std::size_t nx, std::size_t ntheta) const {
        if (nx != data_symbols_.size()) {
            throw BindingError("data binding arity mismatch: got " + std::to_string(nx) +
                               " values for " + std::to_string(data_symbols_.size()) +
                               " symbols");
        }
        if (ntheta != theta_symbols_.size()) {
            throw BindingError("theta binding arity mismatch: got " + std::to_string(ntheta) +
                               " values for " + std::to_string(theta_symbols_.size()) +
                               " symbols");
        }
    }

    static void apply_op(Statevector& state, const GateOp& op, double angle) {
        switch (op.kind) {
            case GateKind::H: state.apply_single(gates::hadamard(), op.qubits[0]); break;
            case GateKind::RX: state.apply_single(gates::rx(angle), op.qubits[0]); break;
            case GateKind::RY: state.apply_single(gates::ry(angle), op.qubits[0]); break;
            case GateKind::RZ: state.apply_single(gates::rz(angle), op.qubits[0]); break;
            case GateKind::CX: state.apply_cx(op.qubits[0], op.qubits[1]); break;
            case GateKind::MultiZPhase: state.apply_multi_z_phase(op.qubits, angle); break;
        }
    }

    int num_qubits_;
    std::vector<GateOp> ops_;
    std::vector<std::string> data_symbols_;
    std::vector<std::string> theta_symbols_;
    std::vector<AngleProgram> programs_;
};

// Concatenates two circuits over the same register. Symbol lists are
// concatenated; a name present in both circuits is an error.
inline Circuit compose(const Circuit& first, const Circuit& second) {
    if (first.num_qubits() != second.num_qubits()) {
        throw std::invalid_argument("cannot compose circuits with different qubit counts");
    }
    std::vector<GateOp> ops = first.ops();
    ops.insert(ops.end(), second.ops().begin(), second.ops().end());
    std::vector<std::string> data = first.data_symbols();
    data.insert(data.end(), second.data_symbols().begin(), second.data_symbols().end());
    std::vector<std::string> theta = first.theta_symbols();
    theta.insert(theta.end(), second.theta_symbols().begin(), second.theta_symbols().end());
    return Circuit(first.num_qubits(), std::move(ops), std::move(data), std::move(theta));
}

} // namespace qvc
