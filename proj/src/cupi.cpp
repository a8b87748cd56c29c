#include "icsq/cupi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace icsq {

std::vector<E2Generator> E2Generator::boundary() const
{
    if (index == 0)
        return {};
    return {{Kind::e, index - 1}, {Kind::tau, index - 1}};
}

std::vector<std::pair<E2Generator, E2Generator>> e2_diagonal(const E2Generator& g)
{
    std::vector<std::pair<E2Generator, E2Generator>> out;
    for (int j = 0; j <= g.index; ++j) {
        E2Generator left{E2Generator::Kind::e, j};
        E2Generator right{E2Generator::Kind::e, g.index - j};
        if (j % 2 == 1)
            right = right.tau_action();
        if (g.kind == E2Generator::Kind::tau) {
            left = left.tau_action();
            right = right.tau_action();
        }
        out.emplace_back(left, right);
    }
    return out;
}

const std::vector<CupPartition>& diagonal_partitions(int i, int m)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<CupPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({i, m});
    if (it != cache.end())
        return it->second;

    std::vector<CupPartition> out;
    CupPartition cur;
    cur.parts.assign(m, 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == m - 1) {
            cur.parts[k] = remaining;
            CupPartition p = cur;
            p.twists.assign(m, 0);
            int parity = 0;
            for (int f = 0; f < m; ++f) {
                p.twists[f] = static_cast<uint8_t>(parity & 1);
                parity += p.parts[f];
            }
            out.push_back(std::move(p));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur.parts[k] = v;
            rec(k + 1, remaining - v);
        }
    };
    if (m >= 1 && i >= 0)
        rec(0, i);
    return cache.emplace(std::make_pair(i, m), std::move(out)).first->second;
}

uint32_t factor_cup(int verts, uint32_t f, uint32_t g, int i)
{
    static std::mutex mu;
    static std::map<std::tuple<int, uint32_t, uint32_t, int>, uint32_t> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({verts, f, g, i});
        if (it != cache.end())
            return it->second;
    }

    const StandardSimplex& sx = standard_simplex(verts - 1);
    Cochain u = dual_cochain(*sx.fs, sx.cell_of_mask[f]);
    Cochain v = dual_cochain(*sx.fs, sx.cell_of_mask[g]);
    Cochain w = cup_i(u, v, i);

    uint32_t result = 0;
    for (int cell : sx.fs->cells_of_dim(w.degree))
        if (w.c.get(sx.fs->pos_in_dim(cell))) {
            if (result)
                throw std::logic_error("factor_cup: interval cuts hit two faces");
            result = sx.mask_of_cell[cell];
        }

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_tuple(verts, f, g, i), result);
    return result;
}

std::vector<TensorFace> cup_i_local(const Blowup& bl, int cell, const std::vector<TensorFace>& a,
                                    const std::vector<TensorFace>& b, int i, int pretwist)
{
    std::vector<TensorFace> acc;
    if (i < 0)
        return acc;
    const int m = bl.formal_dim() + 1;
    const auto& partitions = diagonal_partitions(i, m);
    TensorFace term(m, 0);
    for (const TensorFace& x : a)
        for (const TensorFace& y : b)
            for (const CupPartition& p : partitions) {
                bool zero = false;
                for (int f = 0; f < m && !zero; ++f) {
                    const bool swap = ((p.twists[f] + pretwist) & 1) != 0;
                    const uint32_t l = swap ? y[f] : x[f];
                    const uint32_t r = swap ? x[f] : y[f];
                    const uint32_t res = factor_cup(bl.factor_verts(cell, f), l, r, p.parts[f]);
                    if (!res)
                        zero = true;
                    else
                        term[f] = res;
                }
                if (!zero)
                    acc.push_back(term);
            }
    std::sort(acc.begin(), acc.end());
    std::vector<TensorFace> reduced;
    for (std::size_t j = 0; j < acc.size(); ++j) {
        if (j + 1 < acc.size() && acc[j] == acc[j + 1]) {
            ++j;
            continue;
        }
        reduced.push_back(acc[j]);
    }
    return reduced;
}

GlobalSection zero_section(const Blowup& bl, int degree)
{
    return GlobalSection{degree, gf2::BitVec(bl.coord_count(degree))};
}

GlobalSection section_coboundary(const Blowup& bl, const GlobalSection& c)
{
    return GlobalSection{c.degree + 1, bl.apply_delta(c.degree, c.v)};
}

GlobalSection cup_i_global(const Blowup& bl, const GlobalSection& a, const GlobalSection& b, int i,
                           int pretwist)
{
    const int dt = a.degree + b.degree - i;
    GlobalSection out = zero_section(bl, dt);
    if (i < 0 || dt < 0)
        return out;

    const auto& kp = bl.complex().k_plus();
    for (int cell : kp) {
        // collect the local supports of both sections on this simplex
        std::vector<TensorFace> la, lb;
        {
            const auto& basis_a = bl.local_basis(cell, a.degree);
            const std::size_t off = bl.cell_offset(a.degree, cell);
            for (std::size_t j = 0; j < basis_a.size(); ++j)
                if (a.v.get(off + j))
                    la.push_back(basis_a[j]);
        }
        if (la.empty())
            continue;
        {
            const auto& basis_b = bl.local_basis(cell, b.degree);
            const std::size_t off = bl.cell_offset(b.degree, cell);
            for (std::size_t j = 0; j < basis_b.size(); ++j)
                if (b.v.get(off + j))
                    lb.push_back(basis_b[j]);
        }
        if (lb.empty())
            continue;
        for (const TensorFace& t : cup_i_local(bl, cell, la, lb, i, pretwist))
            out.v.flip(bl.coord_index(dt, cell, t));
    }
    return out;
}

} // namespace icsq
