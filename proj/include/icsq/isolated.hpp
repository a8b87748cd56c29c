#pragma once

#include "icsq/cohomology.hpp"
#include "icsq/face_set.hpp"

#include <map>
#include <optional>
#include <set>

namespace icsq {

/// Independent computation path for pseudomanifolds with isolated
/// singularities, working entirely on a manifold-with-boundary (W, bW):
/// the cochain pullback of N*(W) -> N*(bW) <- (truncation at p), whose
/// cohomology matches the coned-off space at the perversity with top value p.
class IsolatedModel {
public:
    /// Owns its copy of W; `boundary` indexes cells of `w`.
    IsolatedModel(FaceSet w, std::set<int> boundary);

    const FaceSet& w() const { return w_; }

    /// Expected dim H^k for top perversity value p, straight from the
    /// three-case table: H^k(W) below p, the restriction kernel at p+1,
    /// H^k(W, bW) above.
    std::size_t table_dim(long p, int k);

    /// Cohomology of the pullback complex at truncation value p.
    const Presentation& cohomology(long p, int k);

    /// Sq^i from H^k at truncation p into H^{k+i} at truncation
    /// min(2p, p+i), via the cup on W. Returns the full matrix, one column
    /// per basis class of the source.
    gf2::BitMatrix sq_matrix(long p, int k, int i);

private:
    gf2::Subspace member_space(long p, int k);

    FaceSet w_;
    std::set<int> boundary_;
    SubcomplexExtract bextract_;
    std::map<std::pair<long, int>, Presentation> pres_;
};

} // namespace icsq
