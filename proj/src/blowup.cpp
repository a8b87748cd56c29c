#include "icsq/blowup.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace icsq {

std::string pdeg_to_string(const PerverseDegree& d)
{
    std::string s = "(";
    for (std::size_t l = 0; l < d.size(); ++l) {
        if (l)
            s += ',';
        s += d[l] == PDEG_NEG_INF ? "-inf" : std::to_string(d[l]);
    }
    return s + ")";
}

bool pdeg_leq(const PerverseDegree& d, const Perversity& p)
{
    for (int l = 1; l <= p.formal_dim(); ++l) {
        if (d[l - 1] == PDEG_NEG_INF)
            continue;
        const long bound = p.at(l);
        if (bound == PERV_INF)
            continue;
        if (d[l - 1] > bound)
            return false;
    }
    return true;
}

Blowup::Blowup(FilteredFaceSet k) : k_(std::move(k)), n_(k_.formal_dim())
{
    kplus_pos_.assign(k_.size(), -1);
    for (std::size_t p = 0; p < k_.k_plus().size(); ++p)
        kplus_pos_[k_.k_plus()[p]] = static_cast<int>(p);
    is_maximal_.assign(k_.size(), 0);
    for (int c : k_.maximal())
        is_maximal_[c] = 1;
    max_deg_ = 0;
    for (int c : k_.k_plus())
        max_deg_ = std::max(max_deg_, k_.dim(c));
}

int Blowup::factor_verts(int cell, int m) const
{
    const int j = k_.cell(cell).blocks[m];
    if (m < n_)
        return j + 2;   // base vertices plus apex; j = -1 leaves the apex alone
    return j + 1;
}

namespace {

// Enumerates nonempty vertex subsets of a v-vertex factor by degree.
void masks_of_degree(int verts, int deg, std::vector<uint32_t>& out)
{
    out.clear();
    if (deg < 0 || deg >= verts)
        return;
    const uint32_t top = (1u << verts) - 1;
    for (uint32_t m = 1; m <= top; ++m)
        if (std::popcount(m) == deg + 1)
            out.push_back(m);
}

} // namespace

const std::vector<TensorFace>& Blowup::local_basis(int cell, int k) const
{
    if (!k_.regular(cell))
        throw std::invalid_argument("local_basis: simplex '" + k_.id(cell) + "' is not regular");
    DegreeData& dd = deg(k);
    auto it = dd.basis.find(cell);
    if (it != dd.basis.end())
        return it->second;

    std::vector<TensorFace> basis;
    TensorFace cur(n_ + 1, 0);
    std::vector<std::vector<uint32_t>> masks(n_ + 1);
    std::function<void(int, int)> rec = [&](int m, int remaining) {
        if (m == n_ + 1) {
            if (remaining == 0)
                basis.push_back(cur);
            return;
        }
        const int verts = factor_verts(cell, m);
        int tail_max = 0;
        for (int m2 = m + 1; m2 <= n_; ++m2)
            tail_max += factor_verts(cell, m2) - 1;
        for (int d = 0; d <= std::min(verts - 1, remaining); ++d) {
            if (remaining - d > tail_max)
                continue;
            masks_of_degree(verts, d, masks[m]);
            for (uint32_t mk : masks[m]) {
                cur[m] = mk;
                rec(m + 1, remaining - d);
            }
        }
        cur[m] = 0;
    };
    rec(0, k);
    // lexicographic in the factor-face encodings; coord_index bisects on this
    std::sort(basis.begin(), basis.end());
    return dd.basis.emplace(cell, std::move(basis)).first->second;
}

Blowup::DegreeData& Blowup::deg(int k) const
{
    return degrees_[k];
}

void Blowup::build_coords(int k) const
{
    DegreeData& dd = deg(k);
    if (dd.built)
        return;
    dd.offsets.assign(k_.k_plus().size() + 1, 0);
    for (std::size_t p = 0; p < k_.k_plus().size(); ++p) {
        const int c = k_.k_plus()[p];
        const auto& basis = local_basis(c, k);
        dd.offsets[p + 1] = dd.offsets[p] + basis.size();
        for (std::size_t j = 0; j < basis.size(); ++j)
            dd.coords.emplace_back(c, static_cast<int>(j));
    }
    dd.built = true;
}

std::size_t Blowup::coord_count(int k) const
{
    if (k < 0)
        return 0;
    build_coords(k);
    return deg(k).coords.size();
}

std::pair<int, int> Blowup::coord_cell(int k, std::size_t coord) const
{
    build_coords(k);
    return deg(k).coords[coord];
}

const TensorFace& Blowup::coord_face(int k, std::size_t coord) const
{
    build_coords(k);
    const auto& [cell, local] = deg(k).coords[coord];
    return local_basis(cell, k)[local];
}

std::size_t Blowup::cell_offset(int k, int cell) const
{
    build_coords(k);
    const int p = kplus_pos_[cell];
    if (p < 0)
        throw std::invalid_argument("cell_offset: simplex is not regular");
    return deg(k).offsets[p];
}

std::size_t Blowup::coord_index(int k, int cell, const TensorFace& t) const
{
    const auto& basis = local_basis(cell, k);
    auto it = std::lower_bound(basis.begin(), basis.end(), t);
    if (it == basis.end() || *it != t)
        throw std::logic_error("coord_index: tensor face not in basis");
    return cell_offset(k, cell) + static_cast<std::size_t>(it - basis.begin());
}

TensorFace Blowup::push_face(int cell, int pos, const TensorFace& t) const
{
    const auto [b, local] = k_.position_block(cell, pos);
    const int face = k_.cell(cell).faces[pos];
    TensorFace out = t;
    const int cell_verts = factor_verts(cell, b);
    const int face_verts = factor_verts(face, b);
    uint32_t m = t[b];
    uint32_t mapped = 0;
    for (int s = 0; s < face_verts; ++s) {
        if (!(m & (1u << s)))
            continue;
        bool is_apex = factor_has_apex(b) && s == face_verts - 1;
        if (is_apex)
            mapped |= 1u << (cell_verts - 1);
        else
            mapped |= 1u << (s < local ? s : s + 1);
    }
    out[b] = mapped;
    return out;
}

std::vector<TensorFace> Blowup::restrict_along_face(int cell, int pos,
                                                    const std::vector<TensorFace>& terms) const
{
    const auto [b, local] = k_.position_block(cell, pos);
    const int face = k_.cell(cell).faces[pos];
    const int cell_verts = factor_verts(cell, b);
    const int face_verts = factor_verts(face, b);

    std::vector<TensorFace> out;
    for (const TensorFace& t : terms) {
        uint32_t m = t[b];
        if (m & (1u << local))
            continue;   // removed vertex is in the face: pullback dies
        uint32_t pulled = 0;
        for (int s = 0; s < cell_verts; ++s) {
            if (!(m & (1u << s)))
                continue;
            const bool is_apex = factor_has_apex(b) && s == cell_verts - 1;
            if (is_apex)
                pulled |= 1u << (face_verts - 1);
            else
                pulled |= 1u << (s < local ? s : s - 1);
        }
        TensorFace r = t;
        r[b] = pulled;
        out.push_back(std::move(r));
    }
    // GF(2)-reduce
    std::sort(out.begin(), out.end());
    std::vector<TensorFace> reduced;
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (j + 1 < out.size() && out[j] == out[j + 1]) {
            ++j;
            continue;
        }
        reduced.push_back(out[j]);
    }
    return reduced;
}

const gf2::BitMatrix& Blowup::delta(int k) const
{
    DegreeData& dd = deg(k);
    if (dd.have_delta)
        return dd.delta;
    const std::size_t rows = coord_count(k + 1);
    const std::size_t cols = coord_count(k);
    gf2::BitMatrix m(rows, cols);
    for (std::size_t col = 0; col < cols; ++col) {
        const auto& [cell, local] = deg(k).coords[col];
        const TensorFace& t = local_basis(cell, k)[local];
        TensorFace coface = t;
        for (int f = 0; f <= n_; ++f) {
            const int verts = factor_verts(cell, f);
            for (int w = 0; w < verts; ++w) {
                if (t[f] & (1u << w))
                    continue;
                coface[f] = t[f] | (1u << w);
                m.flip(coord_index(k + 1, cell, coface), col);
            }
            coface[f] = t[f];
        }
    }
    dd.delta = std::move(m);
    dd.have_delta = true;
    return dd.delta;
}

gf2::BitVec Blowup::apply_delta(int k, const gf2::BitVec& v) const
{
    return delta(k).mul(v);
}

const gf2::BitMatrix& Blowup::constraints(int k) const
{
    DegreeData& dd = deg(k);
    if (dd.have_constraints)
        return dd.constraints;
    const std::size_t cols = coord_count(k);
    std::vector<gf2::BitVec> rows;
    for (int cell : k_.k_plus()) {
        const int verts = k_.total_vertices(cell);
        if (verts == 1)
            continue;
        for (int pos = 0; pos < verts; ++pos) {
            const int face = k_.cell(cell).faces[pos];
            if (!k_.regular(face))
                continue;
            for (const TensorFace& e : local_basis(face, k)) {
                gf2::BitVec row(cols);
                row.flip(coord_index(k, face, e));
                row.flip(coord_index(k, cell, push_face(cell, pos, e)));
                rows.push_back(std::move(row));
            }
        }
    }
    dd.constraints = gf2::BitMatrix::from_rows(rows, cols);
    dd.have_constraints = true;
    return dd.constraints;
}

const gf2::Subspace& Blowup::global_sections(int k) const
{
    DegreeData& dd = deg(k);
    if (dd.have_sections)
        return dd.sections;
    dd.sections = gf2::rank_and_kernel(constraints(k)).kernel;
    dd.have_sections = true;
    return dd.sections;
}

PerverseDegree Blowup::perverse_degree(int k, const gf2::BitVec& v, bool only_maximal) const
{
    PerverseDegree out(n_, PDEG_NEG_INF);
    build_coords(k);
    const auto& coords = deg(k).coords;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (!v.get(j))
            continue;
        const auto& [cell, local] = coords[j];
        if (only_maximal && !is_maximal_[cell])
            continue;
        const TensorFace& t = local_basis(cell, k)[local];
        for (int l = 1; l <= n_; ++l) {
            const int m = n_ - l;
            if (k_.cell(cell).blocks[m] < 0)
                continue;
            const uint32_t apex_bit = 1u << (factor_verts(cell, m) - 1);
            if (t[m] & apex_bit)
                continue;   // restriction to the base kills apex terms
            long tail = 0;
            for (int m2 = m + 1; m2 <= n_; ++m2)
                tail += std::popcount(t[m2]) - 1;
            out[l - 1] = std::max(out[l - 1], tail);
        }
    }
    return out;
}

bool Blowup::admissible(int k, const gf2::BitVec& v, const Perversity& p) const
{
    return pdeg_leq(perverse_degree(k, v), p);
}

std::vector<std::size_t> Blowup::forbidden_coords(const Perversity& p, int k) const
{
    std::vector<std::size_t> out;
    build_coords(k);
    const auto& coords = deg(k).coords;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const auto& [cell, local] = coords[j];
        const TensorFace& t = local_basis(cell, k)[local];
        bool bad = false;
        for (int l = 1; l <= n_ && !bad; ++l) {
            const long bound = p.at(l);
            if (bound == PERV_INF)
                continue;
            const int m = n_ - l;
            if (k_.cell(cell).blocks[m] < 0)
                continue;
            const uint32_t apex_bit = 1u << (factor_verts(cell, m) - 1);
            if (t[m] & apex_bit)
                continue;
            long tail = 0;
            for (int m2 = m + 1; m2 <= n_; ++m2)
                tail += std::popcount(t[m2]) - 1;
            bad = tail > bound;
        }
        if (bad)
            out.push_back(j);
    }
    return out;
}

const gf2::Subspace& Blowup::intersection_subcomplex(const Perversity& p, int k) const
{
    const auto key = std::make_pair(p.to_string(), k);
    auto it = intersection_.find(key);
    if (it != intersection_.end())
        return it->second;

    const std::size_t cols = coord_count(k);
    gf2::BitMatrix stacked = constraints(k);
    for (std::size_t j : forbidden_coords(p, k)) {
        gf2::BitVec row(cols);
        row.set(j);
        stacked.append_rows(gf2::BitMatrix::from_rows({row}, cols));
    }
    const gf2::BitMatrix& d = delta(k);
    for (std::size_t j : forbidden_coords(p, k + 1))
        stacked.append_rows(gf2::BitMatrix::from_rows({d.row(j)}, cols));
    return intersection_.emplace(key, gf2::rank_and_kernel(stacked).kernel).first->second;
}

} // namespace icsq
