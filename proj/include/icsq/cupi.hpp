#pragma once

#include "icsq/blowup.hpp"

#include <cstdint>
#include <vector>

namespace icsq {

/// Generator of the E(2) resolution in homological degree `index`. The
/// differential sends both kinds to e_{index-1} + tau_{index-1}, and the
/// group action swaps the kinds.
struct E2Generator {
    enum class Kind { e, tau };
    Kind kind = Kind::e;
    int index = 0;

    E2Generator tau_action() const
    {
        return {kind == Kind::e ? Kind::tau : Kind::e, index};
    }
    /// The two summands of the boundary; empty in degree 0.
    std::vector<E2Generator> boundary() const;
    bool operator==(const E2Generator&) const = default;
};

/// The coassociative diagonal D(e_i) = sum_j e_j (x) tau^j . e_{i-j},
/// extended equivariantly to tau_i.
std::vector<std::pair<E2Generator, E2Generator>> e2_diagonal(const E2Generator& g);

/// One summand of the iterated E(2) diagonal spread over m tensor factors:
/// factor k receives cup index parts[k] and argument order twisted by the
/// parity of parts[0] + ... + parts[k-1].
struct CupPartition {
    std::vector<int> parts;
    std::vector<uint8_t> twists;   // 0 = keep order, 1 = swap
};

/// All weak compositions of i into m parts with their twist parities, in
/// lexicographic order; cached per (i, m).
const std::vector<CupPartition>& diagonal_partitions(int i, int m);

/// cup_i of two dual tensor-basis faces inside the full simplex on `verts`
/// ordered vertices, computed with the interval-cut product of the classical
/// engine. At most one face can carry the result; 0 encodes the zero cochain.
uint32_t factor_cup(int verts, uint32_t f, uint32_t g, int i);

/// Local cup_i on the blow-up complex of one regular simplex. `pretwist`
/// applies an extra global tau twist (used by the equivariance checks).
std::vector<TensorFace> cup_i_local(const Blowup& bl, int cell, const std::vector<TensorFace>& a,
                                    const std::vector<TensorFace>& b, int i, int pretwist = 0);

/// A degree plus a coordinate vector over the blow-up layout of that degree.
struct GlobalSection {
    int degree = 0;
    gf2::BitVec v;
};

GlobalSection zero_section(const Blowup& bl, int degree);
GlobalSection section_coboundary(const Blowup& bl, const GlobalSection& c);

/// Simplex-wise perverse cup_i of two global sections.
GlobalSection cup_i_global(const Blowup& bl, const GlobalSection& a, const GlobalSection& b, int i,
                           int pretwist = 0);

} // namespace icsq
