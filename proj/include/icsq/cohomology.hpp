#pragma once

#include "icsq/face_set.hpp"
#include "icsq/gf2.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace icsq {

/// Basis of a cohomology space H^k = Z/B inside some ambient coordinate
/// space, with enough data to express any cocycle of the underlying
/// subcomplex in that basis modulo coboundaries.
struct Presentation {
    int degree = 0;
    std::size_t ambient = 0;
    gf2::Subspace cocycles;
    gf2::Subspace coboundaries;
    std::vector<gf2::BitVec> reps;

    std::size_t dim() const { return reps.size(); }

    /// Coordinates of the class of `cocycle` over reps, or nullopt when the
    /// vector is not a cocycle of the presented subcomplex.
    std::optional<gf2::BitVec> express(const gf2::BitVec& cocycle) const;

    /// Linear combination of reps with the given coordinates.
    gf2::BitVec combine(const gf2::BitVec& coords) const;
};

/// H at one degree of a subcomplex S_* of an ambient coordinate complex:
/// ker(delta_here)|_{S_here} modulo delta_below(S_below). delta_below maps
/// the degree below into this one, delta_here maps out of it.
Presentation make_presentation(const gf2::BitMatrix& delta_below, const gf2::BitMatrix& delta_here,
                               const gf2::Subspace& sub_below, const gf2::Subspace& sub_here);

/// Matrix of the simplicial coboundary N^k -> N^{k+1}.
gf2::BitMatrix classical_delta(const FaceSet& fs, int k);

/// Classical normalized-cochain cohomology of a face set, cached per degree;
/// the independent oracle for everything trivially filtered. Owns its copy
/// of the complex.
class ClassicalOracle {
public:
    explicit ClassicalOracle(FaceSet fs) : fs_(std::move(fs)) {}

    const FaceSet& face_set() const { return fs_; }
    const Presentation& cohomology(int k) const;

    /// Sq^i on a class of H^k given by coordinates; coordinates in H^{k+i}.
    gf2::BitVec sq(int k, int i, const gf2::BitVec& coords) const;

private:
    FaceSet fs_;
    mutable std::map<int, Presentation> pres_;
};

/// Cohomology of the pair (fs, A): cochains vanishing on the closed
/// subcomplex A form a subcomplex of N*(fs).
Presentation relative_cohomology(const FaceSet& fs, const std::set<int>& sub, int k);

/// Matrix of H^k(fs) -> H^k(A) induced by restriction, in the canonical
/// bases of the two presentations.
gf2::BitMatrix restriction_on_cohomology(const FaceSet& fs, const SubcomplexExtract& sub, int k,
                                         const Presentation& h_total, const Presentation& h_sub);

} // namespace icsq
