#pragma once

// Shared helpers for circuit-level tests: dense evaluation of bound
// circuits through the Kronecker oracle, random states and gates.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qvc/circuit.hpp"
#include "qvc/prng.hpp"
#include "qvc/statevector.hpp"

#include "dense_oracle.hpp"

namespace test_util {

inline oracle::CMat to_cmat(const qvc::Unitary2x2& u) {
    return oracle::from_2x2(u.u00(), u.u01(), u.u10(), u.u11());
}

inline oracle::CMat dense_of(const qvc::GateOp& op, int num_qubits) {
    const double angle = op.angle ? op.angle->constant_value() : 0.0;
    switch (op.kind) {
        case qvc::GateKind::H:
            return oracle::embed_single(to_cmat(qvc::gates::hadamard()), op.qubits[0], num_qubits);
        case qvc::GateKind::RX:
            return oracle::embed_single(to_cmat(qvc::gates::rx(angle)), op.qubits[0], num_qubits);
        case qvc::GateKind::RY:
            return oracle::embed_single(to_cmat(qvc::gates::ry(angle)), op.qubits[0], num_qubits);
        case qvc::GateKind::RZ:
            return oracle::embed_single(to_cmat(qvc::gates::rz(angle)), op.qubits[0], num_qubits);
        case qvc::GateKind::CX:
            return oracle::cx_matrix(op.qubits[0], op.qubits[1], num_qubits);
        case qvc::GateKind::MultiZPhase:
            return oracle::multi_z_phase_matrix(op.qubits, angle, num_qubits);
    }
    throw std::logic_error("unreachable gate kind");
}

// Dense-matrix evaluation of a fully bound circuit applied to |0...0>.
inline std::vector<oracle::cdouble> dense_simulate(const qvc::Circuit& bound) {
    std::vector<oracle::cdouble> v(std::size_t{1} << bound.num_qubits(), {0, 0});
    v[0] = {1, 0};
    for (const qvc::GateOp& op : bound.ops()) {
        v = oracle::matvec(dense_of(op, bound.num_qubits()), v);
    }
    return v;
}

// Full unitary of a fully bound circuit as one dense matrix product.
inline oracle::CMat dense_unitary(const qvc::Circuit& bound) {
    oracle::CMat u = oracle::identity(std::size_t{1} << bound.num_qubits());
    for (const qvc::GateOp& op : bound.ops()) {
        u = oracle::matmul(dense_of(op, bound.num_qubits()), u);
    }
    return u;
}

inline std::vector<double> random_vector(std::size_t n, qvc::SplitMix64& rng, double lo, double hi) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.next_double(lo, hi);
    return v;
}

} // namespace test_util
