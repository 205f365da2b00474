#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvc {

using cdouble = std::complex<double>;

inline constexpr int kMaxQubits = 20;

// 2x2 complex matrix validated unitary at construction (columns orthonormal
// within 1e-12). Gate application assumes this invariant and never re-checks.
class Unitary2x2 {
  public:
    Unitary2x2(cdouble u00, cdouble u01, cdouble u10, cdouble u11)
        : u00_(u00), u01_(u01), u10_(u10), u11_(u11) {
        constexpr double tol = 1e-12;
        const double c0 = std::norm(u00_) + std::norm(u10_);
        const double c1 = std::norm(u01_) + std::norm(u11_);
        const cdouble dot = std::conj(u00_) * u01_ + std::conj(u10_) * u11_;
        if (std::abs(c0 - 1.0) > tol || std::abs(c1 - 1.0) > tol || std::abs(dot) > tol) {
            throw std::invalid_argument("matrix is not unitary within 1e-12");
        }
    }

    cdouble u00() const { return u00_; }
    cdouble u01() const { return u01_; }
    cdouble u10() const { return u10_; }
    cdouble u11() const { return u11_; }

  private:
    cdouble u00_, u01_, u10_, u11_;
};

namespace gates {

inline Unitary2x2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, 0}, {s, 0}, {s, 0}, {-s, 0}};
}

inline Unitary2x2 rx(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {{c, 0}, {0, -s}, {0, -s}, {c, 0}};
}

inline Unitary2x2 ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
}

inline Unitary2x2 rz(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {{c, -s}, {0, 0}, {0, 0}, {c, s}};
}

inline Unitary2x2 pauli_x() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }

} // namespace gates

enum class Parity { even, odd };

// Dense statevector over n qubits, basis-index ordered with qubit 0 as the
// least significant bit. Gates update amplitudes in place.
class Statevector {
  public:
    // |0...0> on n qubits. n outside [1, 20] is a capacity error.
    explicit Statevector(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::out_of_range("qubit count " + std::to_string(num_qubits) +
                                    " outside supported range [1, " +
                                    std::to_string(kMaxQubits) + "]");
        }
        amps_.assign(std::size_t{1} << num_qubits, cdouble{0, 0});
        amps_[0] = cdouble{1, 0};
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const cdouble& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const cdouble> amplitudes() const { return amps_; }
    std::span<cdouble> amplitudes() { return amps_; }

    void apply_single(const Unitary2x2& u, int target) {
        check_qubit(target);
        const std::size_t step = std::size_t{1} << target;
        const cdouble u00 = u.u00(), u01 = u.u01(), u10 = u.u10(), u11 = u.u11();
        for (std::size_t group = 0; group < amps_.size(); group += 2 * step) {
            for (std::size_t i = group; i < group + step; ++i) {
                const cdouble a0 = amps_[i];
                const cdouble a1 = amps_[i + step];
                amps_[i] = u00 * a0 + u01 * a1;
                amps_[i + step] = u10 * a0 + u11 * a1;
            }
        }
    }

    void apply_cx(int control, int target) {
        check_qubit(control);
        check_qubit(target);
        if (control == target) {
            throw std::invalid_argument("cx control and target must differ");
        }
        const std::size_t cmask = std::size_t{1} << control;
        const std::size_t tmask = std::size_t{1} << target;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cmask) && !(i & tmask)) {
                std::swap(amps_[i], amps_[i | tmask]);
            }
        }
    }

    // Multiplies each basis amplitude by exp(i*angle*p), p = +1 when the bits
    // selected by `qubits` have even parity and -1 when odd. angle == 0 is the
    // exact identity.
    void apply_multi_z_phase(std::span<const int> qubits, double angle) {
        if (qubits.empty()) {
            throw std::invalid_argument("multi-z phase needs a non-empty qubit set");
        }
        std::size_t mask = 0;
        for (int q : qubits) {
            check_qubit(q);
            mask |= std::size_t{1} << q;
        }
        const cdouble even{std::cos(angle), std::sin(angle)};
        const cdouble odd = std::conj(even);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            amps_[i] *= (std::popcount(i & mask) & 1U) ? odd : even;
        }
    }

    // Total probability of basis states whose popcount has the given parity.
    double parity_probability(Parity parity) const {
        const unsigned want = parity == Parity::odd ? 1U : 0U;
        double p = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((static_cast<unsigned>(std::popcount(i)) & 1U) == want) {
                p += std::norm(amps_[i]);
            }
        }
        return p;
    }

    double norm_sq() const {
        double s = 0.0;
        for (const cdouble& a : amps_) s += std::norm(a);
        return s;
    }

  private:
    void check_qubit(int q) const {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(q) +
                                    " out of range for " + std::to_string(num_qubits_) +
                                    " qubits");
        }
    }

    int num_qubits_;
    std::vector<cdouble> amps_;
};

inline Statevector zero_state(int num_qubits) { return Statevector(num_qubits); }

} // namespace qvc
