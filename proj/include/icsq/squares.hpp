#pragma once

#include "icsq/blowup.hpp"
#include "icsq/cohomology.hpp"
#include "icsq/cupi.hpp"

#include <map>
#include <string>

namespace icsq {

/// Outcome of one perverse Steenrod square on a class of H^k_p: the class of
/// the witness z cup_{k-i} z in H^{k+i}_{L(p,i)}, its perverse degree, and
/// its image in H^{k+i}_{2p}.
struct SquareResult {
    Perversity source_p;
    int k = 0;
    int i = 0;
    gf2::BitVec source_class;
    Perversity target_p;          // L(p, i)
    gf2::BitVec target_coords;    // in H^{k+i}_{L(p,i)}
    GlobalSection witness;
    PerverseDegree witness_pdeg;
    gf2::BitVec image_2p;         // in H^{k+i}_{2p}
};

/// Perverse cohomology of one filtered face set with cached presentations.
/// Like Blowup, an instance caches lazily and is meant for single-threaded
/// use; independent (complex, perversity, degree) computations parallelize
/// by using one Engine per thread.
class Engine {
public:
    explicit Engine(FilteredFaceSet k) : bl_(std::move(k)) {}

    Blowup& blowup() { return bl_; }
    const Blowup& blowup() const { return bl_; }
    int formal_dim() const { return bl_.formal_dim(); }
    int max_degree() const { return bl_.max_degree(); }

    /// H^k_p with canonical echelon representatives.
    const Presentation& cohomology(const Perversity& p, int k);

    /// Canonical cocycle representing the class with the given coordinates.
    GlobalSection representative(const Perversity& p, int k, const gf2::BitVec& coords);

    /// Matrix of the inclusion-induced map H^k_p -> H^k_q for p <= q.
    gf2::BitMatrix induced_map(const Perversity& p, const Perversity& q, int k);

    /// Sq^i on a class of H^k_p. Internal-invariant failures (non-cocycle
    /// witness, perverse bound violation) throw std::logic_error.
    SquareResult steenrod_square(const Perversity& p, int k, const gf2::BitVec& cls, int i);

    /// Class of an arbitrary cocycle of p-intersection, in the canonical
    /// basis of H^k_p.
    gf2::BitVec express(const Perversity& p, int k, const GlobalSection& cocycle);

private:
    Blowup bl_;
    std::map<std::pair<std::string, int>, Presentation> pres_;
};

} // namespace icsq
