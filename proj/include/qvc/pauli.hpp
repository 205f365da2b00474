#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qvc/statevector.hpp"

namespace qvc {

struct PauliTerm {
    double coefficient;
    std::string word; // letters over {I, X, Y, Z}; word[k] acts on qubit k
};

// Real-weighted sum of Pauli words, Hermitian by construction. Every word
// must have the same width.
class PauliObservable {
  public:
    explicit PauliObservable(std::vector<PauliTerm> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("observable needs at least one term");
        width_ = static_cast<int>(terms_.front().word.size());
        for (const PauliTerm& t : terms_) {
            if (static_cast<int>(t.word.size()) != width_) {
                throw std::invalid_argument("pauli words must all have the same width");
            }
            for (char c : t.word) {
                if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                    throw std::invalid_argument(std::string("invalid pauli letter '") + c + "'");
                }
            }
        }
    }

    static PauliObservable single(double coefficient, const std::string& word) {
        return PauliObservable({{coefficient, word}});
    }

    // Z on every qubit: eigenvalue +1 on even-parity basis states.
    static PauliObservable z_all(int num_qubits) {
        return single(1.0, std::string(static_cast<std::size_t>(num_qubits), 'Z'));
    }

    int width() const { return width_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }

  private:
    std::vector<PauliTerm> terms_;
    int width_;
};

// Exact <psi|O|psi> (infinite-shot limit). Width must match the state.
inline double expectation(const Statevector& state, const PauliObservable& obs) {
    if (obs.width() != state.num_qubits()) {
        throw std::invalid_argument("observable width " + std::to_string(obs.width()) +
                                    " does not match state qubit count " +
                                    std::to_string(state.num_qubits()));
    }
    double total = 0.0;
    const auto amps = state.amplitudes();
    for (const PauliTerm& term : obs.terms()) {
        std::size_t xmask = 0, ymask = 0, zmask = 0;
        for (std::size_t k = 0; k < term.word.size(); ++k) {
            const std::size_t bit = std::size_t{1} << k;
            switch (term.word[k]) {
                case 'X': xmask |= bit; break;
                case 'Y': ymask |= bit; break;
                case 'Z': zmask |= bit; break;
                default: break;
            }
        }
        const std::size_t fmask = xmask | ymask;
        // i^k for k = popcount(ymask) mod 4
        static constexpr cdouble ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const cdouble yfactor = ipow[std::popcount(ymask) & 3U];
        const std::size_t signmask = zmask | ymask;
        cdouble acc{0, 0};
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double sign = (std::popcount(i & signmask) & 1U) ? -1.0 : 1.0;
            acc += std::conj(amps[i ^ fmask]) * (sign * amps[i]);
        }
        total += term.coefficient * (yfactor * acc).real();
    }
    return total;
}

} // namespace qvc
