#include "icsq/squares.hpp"

#include <stdexcept>

namespace icsq {

const Presentation& Engine::cohomology(const Perversity& p, int k)
{
    if (p.formal_dim() != bl_.formal_dim())
        throw std::invalid_argument("cohomology: perversity dimension mismatch");
    const auto key = std::make_pair(p.to_string(), k);
    auto it = pres_.find(key);
    if (it != pres_.end())
        return it->second;

    const gf2::Subspace& here = bl_.intersection_subcomplex(p, k);
    const gf2::Subspace below =
        k > 0 ? bl_.intersection_subcomplex(p, k - 1) : gf2::Subspace::zero(0);
    const gf2::BitMatrix delta_below =
        k > 0 ? bl_.delta(k - 1) : gf2::BitMatrix(bl_.coord_count(k), 0);
    Presentation pres = make_presentation(delta_below, bl_.delta(k), below, here);
    pres.degree = k;
    return pres_.emplace(key, std::move(pres)).first->second;
}

GlobalSection Engine::representative(const Perversity& p, int k, const gf2::BitVec& coords)
{
    const Presentation& pr = cohomology(p, k);
    return GlobalSection{k, pr.combine(coords)};
}

gf2::BitVec Engine::express(const Perversity& p, int k, const GlobalSection& cocycle)
{
    if (cocycle.degree != k)
        throw std::invalid_argument("express: degree mismatch");
    auto coords = cohomology(p, k).express(cocycle.v);
    if (!coords)
        throw std::logic_error("express: vector is not a cocycle of the p-intersection complex");
    return *coords;
}

gf2::BitMatrix Engine::induced_map(const Perversity& p, const Perversity& q, int k)
{
    if (!leq(p, q))
        throw std::invalid_argument("induced_map: source perversity is not <= target");
    const Presentation& src = cohomology(p, k);
    const Presentation& tgt = cohomology(q, k);
    std::vector<gf2::BitVec> cols;
    for (const auto& rep : src.reps) {
        auto coords = tgt.express(rep);
        if (!coords)
            throw std::logic_error("induced_map: representative fails to include");
        cols.push_back(*coords);
    }
    return gf2::BitMatrix::from_columns(cols, tgt.dim());
}

SquareResult Engine::steenrod_square(const Perversity& p, int k, const gf2::BitVec& cls, int i)
{
    SquareResult out;
    out.source_p = p;
    out.k = k;
    out.i = i;
    out.source_class = cls;
    out.target_p = gp_lift(p, i);
    const Perversity two_p = double_perversity(p);

    const Presentation& target = cohomology(out.target_p, k + i);
    const Presentation& target_2p = cohomology(two_p, k + i);

    out.witness = zero_section(bl_, k + i);
    out.witness_pdeg.assign(bl_.formal_dim(), PDEG_NEG_INF);
    out.target_coords = gf2::BitVec(target.dim());
    out.image_2p = gf2::BitVec(target_2p.dim());
    if (i < 0 || i > k || cls.is_zero())
        return out;

    GlobalSection z = representative(p, k, cls);
    GlobalSection w = cup_i_global(bl_, z, z, k - i);
    if (bl_.apply_delta(w.degree, w.v).any())
        throw std::logic_error("steenrod_square: witness is not a cocycle");
    out.witness = w;
    out.witness_pdeg = bl_.perverse_degree(w.degree, w.v);
    if (!pdeg_leq(out.witness_pdeg, out.target_p))
        throw std::logic_error("steenrod_square: witness violates the Goresky-Pardon bound");

    auto coords = target.express(w.v);
    if (!coords)
        throw std::logic_error("steenrod_square: witness not expressible in the target");
    out.target_coords = *coords;

    auto im = target_2p.express(w.v);
    if (!im)
        throw std::logic_error("steenrod_square: witness not expressible at doubled perversity");
    out.image_2p = *im;
    return out;
}

} // namespace icsq
