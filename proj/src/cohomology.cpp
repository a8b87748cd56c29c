#include "icsq/cohomology.hpp"

#include <stdexcept>

namespace icsq {

std::optional<gf2::BitVec> Presentation::express(const gf2::BitVec& cocycle) const
{
    if (!cocycles.contains(cocycle))
        return std::nullopt;
    std::vector<gf2::BitVec> cols = reps;
    for (const auto& b : coboundaries.basis)
        cols.push_back(b);
    gf2::BitMatrix m = gf2::BitMatrix::from_columns(cols, ambient);
    auto x = gf2::solve(m, cocycle);
    if (!x)
        return std::nullopt;
    gf2::BitVec coords(reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j)
        if (x->get(j))
            coords.set(j);
    return coords;
}

gf2::BitVec Presentation::combine(const gf2::BitVec& coords) const
{
    gf2::BitVec out(ambient);
    for (std::size_t j = 0; j < reps.size(); ++j)
        if (coords.get(j))
            out ^= reps[j];
    return out;
}

Presentation make_presentation(const gf2::BitMatrix& delta_below, const gf2::BitMatrix& delta_here,
                               const gf2::Subspace& sub_below, const gf2::Subspace& sub_here)
{
    Presentation p;
    p.ambient = sub_here.ambient;

    // cocycles of the subcomplex: x in S_k with delta x = 0
    std::vector<gf2::BitVec> zvecs;
    if (sub_here.dim() > 0) {
        gf2::BitMatrix composed(delta_here.rows(), sub_here.dim());
        for (std::size_t j = 0; j < sub_here.dim(); ++j) {
            gf2::BitVec img = delta_here.mul(sub_here.basis[j]);
            for (std::size_t r = 0; r < img.size(); ++r)
                if (img.get(r))
                    composed.set(r, j);
        }
        auto rk = gf2::rank_and_kernel(composed);
        for (const auto& coeff : rk.kernel.basis) {
            gf2::BitVec v(sub_here.ambient);
            for (std::size_t j = 0; j < sub_here.dim(); ++j)
                if (coeff.get(j))
                    v ^= sub_here.basis[j];
            zvecs.push_back(v);
        }
    }
    p.cocycles = gf2::Subspace::from_vectors(sub_here.ambient, zvecs);

    std::vector<gf2::BitVec> bvecs;
    for (const auto& b : sub_below.basis)
        bvecs.push_back(delta_below.mul(b));
    p.coboundaries = gf2::Subspace::from_vectors(sub_here.ambient, bvecs);

    p.reps = gf2::quotient_basis(p.coboundaries, p.cocycles);
    return p;
}

gf2::BitMatrix classical_delta(const FaceSet& fs, int k)
{
    const auto& rows = fs.cells_of_dim(k + 1);
    const auto& cols = fs.cells_of_dim(k);
    gf2::BitMatrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int f : fs.cell(rows[r]).faces)
            m.flip(r, fs.pos_in_dim(f));
    return m;
}

const Presentation& ClassicalOracle::cohomology(int k) const
{
    auto it = pres_.find(k);
    if (it != pres_.end())
        return it->second;
    const std::size_t nk = fs_.cells_of_dim(k).size();
    const std::size_t nkm1 = k > 0 ? fs_.cells_of_dim(k - 1).size() : 0;
    gf2::BitMatrix below = k > 0 ? classical_delta(fs_, k - 1) : gf2::BitMatrix(nk, 0);
    gf2::BitMatrix here = classical_delta(fs_, k);
    Presentation p = make_presentation(below, here, gf2::Subspace::full(nkm1), gf2::Subspace::full(nk));
    p.degree = k;
    return pres_.emplace(k, std::move(p)).first->second;
}

gf2::BitVec ClassicalOracle::sq(int k, int i, const gf2::BitVec& coords) const
{
    const Presentation& src = cohomology(k);
    const Presentation& tgt = cohomology(k + i);
    if (i < 0 || i > k)
        return gf2::BitVec(tgt.dim());
    Cochain z = zero_cochain(fs_, k);
    z.c = src.combine(coords);
    Cochain w = cup_i(z, z, k - i);
    auto out = tgt.express(w.c);
    if (!out)
        throw std::logic_error("classical sq: witness is not a cocycle");
    return *out;
}

Presentation relative_cohomology(const FaceSet& fs, const std::set<int>& sub, int k)
{
    if (!is_subcomplex(fs, sub))
        throw std::invalid_argument("relative_cohomology: set is not face-closed");
    auto rel_space = [&](int d) {
        std::vector<gf2::BitVec> vecs;
        const auto& cells = fs.cells_of_dim(d);
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (!sub.count(cells[j])) {
                gf2::BitVec v(cells.size());
                v.set(j);
                vecs.push_back(v);
            }
        return gf2::Subspace::from_vectors(cells.size(), vecs);
    };
    const std::size_t nk = fs.cells_of_dim(k).size();
    gf2::BitMatrix below = k > 0 ? classical_delta(fs, k - 1) : gf2::BitMatrix(nk, 0);
    gf2::BitMatrix here = classical_delta(fs, k);
    Presentation p = make_presentation(below, here, k > 0 ? rel_space(k - 1) : gf2::Subspace::zero(0),
                                       rel_space(k));
    p.degree = k;
    return p;
}

gf2::BitMatrix restriction_on_cohomology(const FaceSet& fs, const SubcomplexExtract& sub, int k,
                                         const Presentation& h_total, const Presentation& h_sub)
{
    std::vector<gf2::BitVec> cols;
    for (const auto& rep : h_total.reps) {
        gf2::BitVec restricted(sub.fs.cells_of_dim(k).size());
        const auto& cells = fs.cells_of_dim(k);
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (rep.get(j) && sub.to_sub[cells[j]] >= 0)
                restricted.set(sub.fs.pos_in_dim(sub.to_sub[cells[j]]));
        auto coords = h_sub.express(restricted);
        if (!coords)
            throw std::logic_error("restriction_on_cohomology: restricted rep is not a cocycle");
        cols.push_back(*coords);
    }
    return gf2::BitMatrix::from_columns(cols, h_sub.dim());
}

} // namespace icsq
