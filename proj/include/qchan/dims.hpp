#pragma once

#include <string>

#include "qchan/error.hpp"

namespace qchan {

// Which tensor factor an operation acts on.
enum class Subsystem { A, B };

// Dimensions (N_A, N_B) of a two-particle space, with the flat-index
// convention flat = m*N_B + n: subsystem A is the slow index.
struct BipartiteDims {
    int na = 0;
    int nb = 0;

    constexpr int total() const noexcept { return na * nb; }
    constexpr int flat(int m, int n) const noexcept { return m * nb + n; }
    constexpr int a_of(int k) const noexcept { return k / nb; }
    constexpr int b_of(int k) const noexcept { return k % nb; }
    constexpr bool operator==(const BipartiteDims&) const = default;

    std::string str() const {
        return std::to_string(na) + "x" + std::to_string(nb);
    }
};

// State-space dimensions: either a plain N-dimensional space or a bipartite
// product. b == 0 marks the scalar case.
struct Dims {
    int a = 0;
    int b = 0;

    static Dims scalar(int n) { return Dims{n, 0}; }
    static Dims pair(int na, int nb) { return Dims{na, nb}; }
    static Dims pair(BipartiteDims d) { return Dims{d.na, d.nb}; }

    constexpr bool bipartite() const noexcept { return b > 0; }
    constexpr int total() const noexcept { return bipartite() ? a * b : a; }
    constexpr bool operator==(const Dims&) const = default;

    BipartiteDims as_bipartite() const {
        require(bipartite(), ErrorKind::DimMismatch,
                "state does not carry bipartite dimensions");
        return BipartiteDims{a, b};
    }

    std::string str() const {
        return bipartite() ? std::to_string(a) + "x" + std::to_string(b)
                           : std::to_string(a);
    }
};

}  // namespace qchan
