#include "icsq/isolated.hpp"

#include <stdexcept>

namespace icsq {

IsolatedModel::IsolatedModel(FaceSet w, std::set<int> boundary)
    : w_(std::move(w)), boundary_(std::move(boundary)),
      bextract_(extract_subcomplex(w_, boundary_))
{
}

std::size_t IsolatedModel::table_dim(long p, int k)
{
    ClassicalOracle total(w_);
    ClassicalOracle bdry(bextract_.fs);
    if (k <= p)
        return total.cohomology(k).dim();
    if (k == p + 1) {
        gf2::BitMatrix r = restriction_on_cohomology(w_, bextract_, k, total.cohomology(k),
                                                     bdry.cohomology(k));
        return gf2::rank_and_kernel(r).kernel.dim();
    }
    return relative_cohomology(w_, boundary_, k).dim();
}

gf2::Subspace IsolatedModel::member_space(long p, int k)
{
    // Degree-k part of the pullback complex, inside N^k(W):
    //   k >  p : the restriction to the boundary vanishes;
    //   k == p : the restriction is a boundary cocycle;
    //   k <  p : no condition.
    const auto& cells = w_.cells_of_dim(k);
    const std::size_t nk = cells.size();
    if (k < 0)
        return gf2::Subspace::zero(0);
    if (k < p)
        return gf2::Subspace::full(nk);

    std::vector<gf2::BitVec> rows;
    if (k > p) {
        for (std::size_t j = 0; j < nk; ++j)
            if (boundary_.count(cells[j])) {
                gf2::BitVec row(nk);
                row.set(j);
                rows.push_back(std::move(row));
            }
    } else {   // k == p: delta of the boundary restriction vanishes
        const auto& bcells = bextract_.fs.cells_of_dim(k + 1);
        for (int t : bcells) {
            gf2::BitVec row(nk);
            for (int f : bextract_.fs.cell(t).faces) {
                const int orig = bextract_.to_orig[f];
                row.flip(w_.pos_in_dim(orig));
            }
            rows.push_back(std::move(row));
        }
    }
    gf2::BitMatrix m = gf2::BitMatrix::from_rows(rows, nk);
    return gf2::rank_and_kernel(m).kernel;
}

const Presentation& IsolatedModel::cohomology(long p, int k)
{
    const auto key = std::make_pair(p, k);
    auto it = pres_.find(key);
    if (it != pres_.end())
        return it->second;
    const std::size_t nk = w_.cells_of_dim(k).size();
    gf2::BitMatrix below = k > 0 ? classical_delta(w_, k - 1) : gf2::BitMatrix(nk, 0);
    Presentation pr = make_presentation(below, classical_delta(w_, k),
                                        k > 0 ? member_space(p, k - 1) : gf2::Subspace::zero(0),
                                        member_space(p, k));
    pr.degree = k;
    return pres_.emplace(key, std::move(pr)).first->second;
}

gf2::BitMatrix IsolatedModel::sq_matrix(long p, int k, int i)
{
    const long lp = std::min(2 * p, p + i);
    const Presentation& src = cohomology(p, k);
    const Presentation& tgt = cohomology(lp, k + i);
    std::vector<gf2::BitVec> cols;
    for (const auto& rep : src.reps) {
        if (i < 0 || i > k) {
            cols.push_back(gf2::BitVec(tgt.dim()));
            continue;
        }
        Cochain z = zero_cochain(w_, k);
        z.c = rep;
        Cochain w = cup_i(z, z, k - i);
        auto coords = tgt.express(w.c);
        if (!coords)
            throw std::logic_error("isolated model: square witness leaves the pullback complex");
        cols.push_back(*coords);
    }
    return gf2::BitMatrix::from_columns(cols, tgt.dim());
}

} // namespace icsq
