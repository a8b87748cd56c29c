#include "icsq/face_set.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace icsq {

int FaceSet::find(const std::string& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& FaceSet::cells_of_dim(int d) const
{
    static const std::vector<int> empty;
    if (d < 0 || d > max_dim_)
        return empty;
    return by_dim_[d];
}

int FaceSet::subsimplex(int c, const std::vector<int>& keep) const
{
    const int d = cells_[c].dim;
    int cur = c;
    std::size_t ki = keep.size();
    for (int p = d; p >= 0; --p) {
        if (ki > 0 && keep[ki - 1] == p) {
            --ki;
            continue;
        }
        cur = cells_[cur].faces[p];
    }
    return cur;
}

void FaceSetBuilder::add(const std::string& id, int dim, const std::vector<std::string>& faces)
{
    if (id.empty())
        throw std::invalid_argument("face set: empty simplex id");
    auto [it, fresh] = staged_.emplace(id, std::make_pair(dim, faces));
    if (!fresh)
        throw std::invalid_argument("face set: duplicate simplex id '" + id + "'");
}

FaceSet FaceSetBuilder::freeze() const
{
    FaceSet fs;
    for (const auto& [id, entry] : staged_) {
        fs.index_[id] = static_cast<int>(fs.ids_.size());
        fs.ids_.push_back(id);
    }
    for (const auto& [id, entry] : staged_) {
        const auto& [dim, face_ids] = entry;
        if (dim < 0)
            throw std::invalid_argument("face set: negative dimension at '" + id + "'");
        FaceSet::Cell cell;
        cell.dim = dim;
        for (const std::string& f : face_ids) {
            auto it = fs.index_.find(f);
            if (it == fs.index_.end())
                throw std::invalid_argument("face set: unknown face id '" + f + "' at '" + id + "'");
            cell.faces.push_back(it->second);
        }
        fs.cells_.push_back(std::move(cell));
        fs.max_dim_ = std::max(fs.max_dim_, dim);
    }
    fs.by_dim_.assign(fs.max_dim_ + 1, {});
    fs.pos_in_dim_.assign(fs.cells_.size(), 0);
    for (std::size_t c = 0; c < fs.cells_.size(); ++c) {
        fs.pos_in_dim_[c] = static_cast<int>(fs.by_dim_[fs.cells_[c].dim].size());
        fs.by_dim_[fs.cells_[c].dim].push_back(static_cast<int>(c));
    }
    return fs;
}

std::vector<Violation> validate_face_set(const FaceSet& fs)
{
    std::vector<Violation> out;
    for (std::size_t c = 0; c < fs.size(); ++c) {
        const auto& cell = fs.cell(static_cast<int>(c));
        const std::size_t expected = cell.dim == 0 ? 0 : static_cast<std::size_t>(cell.dim) + 1;
        if (cell.faces.size() != expected) {
            out.push_back({fs.id(static_cast<int>(c)), "face count",
                           "expected " + std::to_string(expected) + " faces, got " +
                               std::to_string(cell.faces.size())});
            continue;
        }
        bool dims_ok = true;
        for (int f : cell.faces)
            if (fs.cell(f).dim != cell.dim - 1) {
                out.push_back({fs.id(static_cast<int>(c)), "face dimension",
                               "face '" + fs.id(f) + "' has wrong dimension"});
                dims_ok = false;
            }
        if (!dims_ok || cell.dim < 2)
            continue;
        for (int b = 1; b <= cell.dim; ++b)
            for (int a = 0; a < b; ++a) {
                const int left = fs.cell(cell.faces[b]).faces[a];
                const int right = fs.cell(cell.faces[a]).faces[b - 1];
                if (left != right)
                    out.push_back({fs.id(static_cast<int>(c)), "simplicial identity",
                                   "d_" + std::to_string(a) + " d_" + std::to_string(b) +
                                       " != d_" + std::to_string(b - 1) + " d_" + std::to_string(a)});
            }
    }
    return out;
}

Cochain zero_cochain(const FaceSet& fs, int degree)
{
    return Cochain{&fs, degree, gf2::BitVec(fs.cells_of_dim(degree).size())};
}

Cochain dual_cochain(const FaceSet& fs, int cell)
{
    Cochain u = zero_cochain(fs, fs.cell(cell).dim);
    u.c.set(fs.pos_in_dim(cell));
    return u;
}

Cochain add(const Cochain& a, const Cochain& b)
{
    if (a.fs != b.fs || a.degree != b.degree)
        throw std::invalid_argument("cochain add: carrier or degree mismatch");
    Cochain out = a;
    out.c ^= b.c;
    return out;
}

Cochain coboundary(const Cochain& u)
{
    const FaceSet& fs = *u.fs;
    Cochain out = zero_cochain(fs, u.degree + 1);
    for (int t : fs.cells_of_dim(u.degree + 1)) {
        bool acc = false;
        for (int f : fs.cell(t).faces)
            acc ^= u.c.get(fs.pos_in_dim(f));
        if (acc)
            out.c.set(fs.pos_in_dim(t));
    }
    return out;
}

namespace {

// Appends positions lo..hi; returns false when the merged list would
// repeat a vertex (same-parity intervals touching at an endpoint).
bool append_interval(std::vector<int>& list, int lo, int hi)
{
    if (!list.empty() && list.back() >= lo)
        return false;
    for (int p = lo; p <= hi; ++p)
        list.push_back(p);
    return true;
}

} // namespace

Cochain cup_i(const Cochain& u, const Cochain& v, int i)
{
    if (u.fs != v.fs)
        throw std::invalid_argument("cup_i: carrier mismatch");
    const FaceSet& fs = *u.fs;
    const int du = u.degree, dv = v.degree;
    const int dt = du + dv - i;
    Cochain out = zero_cochain(fs, dt);
    if (i < 0 || i > std::min(du, dv) || dt < 0)
        return out;

    std::vector<int> cuts(i + 1, 0);
    std::vector<int> evens, odds;
    for (int t : fs.cells_of_dim(dt)) {
        bool acc = false;
        // odometer over nondecreasing tuples 0 <= b_1 <= ... <= b_{i+1} <= dt
        std::fill(cuts.begin(), cuts.end(), 0);
        while (true) {
            evens.clear();
            odds.clear();
            bool ok = true;
            for (int seg = 0; seg <= i + 1 && ok; ++seg) {
                const int lo = seg == 0 ? 0 : cuts[seg - 1];
                const int hi = seg == i + 1 ? dt : cuts[seg];
                ok = append_interval(seg % 2 == 0 ? evens : odds, lo, hi);
            }
            if (ok && static_cast<int>(evens.size()) == du + 1 &&
                static_cast<int>(odds.size()) == dv + 1) {
                const int se = fs.subsimplex(t, evens);
                const int so = fs.subsimplex(t, odds);
                acc ^= u.c.get(fs.pos_in_dim(se)) && v.c.get(fs.pos_in_dim(so));
            }
            // advance odometer
            int k = i;
            while (k >= 0 && cuts[k] == dt)
                --k;
            if (k < 0)
                break;
            ++cuts[k];
            for (int j = k + 1; j <= i; ++j)
                cuts[j] = cuts[k];
        }
        if (acc)
            out.c.set(fs.pos_in_dim(t));
    }
    return out;
}

std::vector<Violation> validate_map(const FaceSetMap& g)
{
    std::vector<Violation> out;
    if (g.image.size() != g.dom->size()) {
        out.push_back({"", "map shape", "image size differs from domain size"});
        return out;
    }
    for (std::size_t c = 0; c < g.dom->size(); ++c) {
        const auto& cell = g.dom->cell(static_cast<int>(c));
        const auto& img = g.cod->cell(g.image[c]);
        if (img.dim != cell.dim) {
            out.push_back({g.dom->id(static_cast<int>(c)), "map dimension", "image has wrong dimension"});
            continue;
        }
        for (std::size_t p = 0; p < cell.faces.size(); ++p)
            if (g.image[cell.faces[p]] != img.faces[p])
                out.push_back({g.dom->id(static_cast<int>(c)), "map faces",
                               "does not commute with d_" + std::to_string(p)});
    }
    return out;
}

Cochain pullback(const FaceSetMap& g, const Cochain& u)
{
    if (u.fs != g.cod)
        throw std::invalid_argument("pullback: cochain not on the codomain");
    Cochain out = zero_cochain(*g.dom, u.degree);
    for (int c : g.dom->cells_of_dim(u.degree))
        if (u.c.get(g.cod->pos_in_dim(g.image[c])))
            out.c.set(g.dom->pos_in_dim(c));
    return out;
}

namespace {

std::string mask_id(uint32_t mask)
{
    std::string s;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) {
            if (!s.empty())
                s += '.';
            s += std::to_string(b);
        }
    return s;
}

} // namespace

const StandardSimplex& standard_simplex(int dim)
{
    static std::mutex mu;
    static std::vector<std::unique_ptr<StandardSimplex>> cache;
    static std::vector<std::unique_ptr<FaceSet>> complexes;
    std::lock_guard<std::mutex> lock(mu);
    if (dim < 0)
        throw std::invalid_argument("standard_simplex: negative dimension");
    if (static_cast<std::size_t>(dim) < cache.size() && cache[dim])
        return *cache[dim];
    if (static_cast<std::size_t>(dim) >= cache.size()) {
        cache.resize(dim + 1);
        complexes.resize(cache.size());
    }

    const uint32_t top = (1u << (dim + 1)) - 1;
    FaceSetBuilder b;
    for (uint32_t m = 1; m <= top; ++m) {
        std::vector<int> verts;
        for (int v = 0; v <= dim; ++v)
            if (m & (1u << v))
                verts.push_back(v);
        std::vector<std::string> faces;
        if (verts.size() > 1)
            for (int v : verts)
                faces.push_back(mask_id(m & ~(1u << v)));
        b.add(mask_id(m), static_cast<int>(verts.size()) - 1, faces);
    }
    auto sx = std::make_unique<StandardSimplex>();
    complexes[dim] = std::make_unique<FaceSet>(b.freeze());
    sx->fs = complexes[dim].get();
    sx->cell_of_mask.assign(top + 1, -1);
    sx->mask_of_cell.assign(sx->fs->size(), 0);
    for (uint32_t m = 1; m <= top; ++m) {
        int c = sx->fs->find(mask_id(m));
        sx->cell_of_mask[m] = c;
        sx->mask_of_cell[c] = m;
    }
    cache[dim] = std::move(sx);
    return *cache[dim];
}

namespace {

std::string vertex_list_id(const std::vector<int>& verts)
{
    std::string s;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        if (k)
            s += '.';
        s += std::to_string(verts[k]);
    }
    return s;
}

} // namespace

FaceSet complex_from_maximal(const std::vector<std::vector<int>>& maximal)
{
    std::set<std::vector<int>> closed;
    std::function<void(std::vector<int>)> close = [&](std::vector<int> verts) {
        if (verts.empty() || closed.count(verts))
            return;
        closed.insert(verts);
        if (verts.size() == 1)
            return;
        for (std::size_t p = 0; p < verts.size(); ++p) {
            std::vector<int> f = verts;
            f.erase(f.begin() + static_cast<long>(p));
            close(std::move(f));
        }
    };
    for (std::vector<int> m : maximal) {
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("complex_from_maximal: repeated vertex in a face");
        close(std::move(m));
    }
    FaceSetBuilder b;
    for (const auto& verts : closed) {
        std::vector<std::string> faces;
        if (verts.size() > 1)
            for (std::size_t p = 0; p < verts.size(); ++p) {
                std::vector<int> f = verts;
                f.erase(f.begin() + static_cast<long>(p));
                faces.push_back(vertex_list_id(f));
            }
        b.add(vertex_list_id(verts), static_cast<int>(verts.size()) - 1, faces);
    }
    return b.freeze();
}

namespace {

// Cells of K x I over a base e-simplex are encoded per vertex: '0' bottom
// copy, '1' top copy, '2' both (the staircase jump). Valid codes have the
// shape 0^a 2^{0|1} 1^c; the cell dimension is e plus one when a '2' occurs.
std::string prism_id(const std::string& base_id, const std::string& code)
{
    return base_id + "@" + code;
}

} // namespace

Prism prism(const FaceSet& base)
{
    FaceSetBuilder b;
    for (std::size_t c = 0; c < base.size(); ++c) {
        const auto& cell = base.cell(static_cast<int>(c));
        const int e = cell.dim;
        // enumerate all valid codes of length e+1
        std::vector<std::string> codes;
        for (int a = 0; a <= e + 1; ++a) {
            // without a '2': 0^a 1^{e+1-a}
            codes.push_back(std::string(a, '0') + std::string(e + 1 - a, '1'));
        }
        for (int a = 0; a <= e; ++a)
            codes.push_back(std::string(a, '0') + "2" + std::string(e - a, '1'));
        for (const std::string& code : codes) {
            // chain elements in total order: the bottom run, then the top run
            std::vector<std::pair<int, int>> elems;   // (vertex, eps)
            for (int i = 0; i <= e; ++i)
                if (code[i] == '0' || code[i] == '2')
                    elems.emplace_back(i, 0);
            for (int i = 0; i <= e; ++i)
                if (code[i] == '1' || code[i] == '2')
                    elems.emplace_back(i, 1);
            std::vector<std::string> faces;
            if (elems.size() > 1) {
                for (std::size_t p = 0; p < elems.size(); ++p) {
                    auto [vi, eps] = elems[p];
                    std::string fc = code;
                    if (code[vi] == '2') {
                        fc[vi] = eps == 0 ? '1' : '0';
                        faces.push_back(prism_id(base.id(static_cast<int>(c)), fc));
                    } else {
                        fc.erase(fc.begin() + vi);
                        const int fcell = cell.faces[vi];
                        faces.push_back(prism_id(base.id(fcell), fc));
                    }
                }
            }
            b.add(prism_id(base.id(static_cast<int>(c)), code),
                  static_cast<int>(elems.size()) - 1, faces);
        }
    }
    Prism out{b.freeze(), {}, {}};
    out.bottom.resize(base.size());
    out.top.resize(base.size());
    for (std::size_t c = 0; c < base.size(); ++c) {
        const int e = base.cell(static_cast<int>(c)).dim;
        out.bottom[c] = out.fs.find(prism_id(base.id(static_cast<int>(c)), std::string(e + 1, '0')));
        out.top[c] = out.fs.find(prism_id(base.id(static_cast<int>(c)), std::string(e + 1, '1')));
    }
    return out;
}

bool is_subcomplex(const FaceSet& fs, const std::set<int>& cells)
{
    for (int c : cells)
        for (int f : fs.cell(c).faces)
            if (!cells.count(f))
                return false;
    return true;
}

SubcomplexExtract extract_subcomplex(const FaceSet& fs, const std::set<int>& cells)
{
    if (!is_subcomplex(fs, cells))
        throw std::invalid_argument("extract_subcomplex: set is not face-closed");
    FaceSetBuilder b;
    for (int c : cells) {
        std::vector<std::string> faces;
        for (int f : fs.cell(c).faces)
            faces.push_back(fs.id(f));
        b.add(fs.id(c), fs.cell(c).dim, faces);
    }
    SubcomplexExtract out{b.freeze(), {}, {}};
    out.to_sub.assign(fs.size(), -1);
    out.to_orig.assign(out.fs.size(), -1);
    for (int c : cells) {
        const int s = out.fs.find(fs.id(c));
        out.to_sub[c] = s;
        out.to_orig[s] = c;
    }
    return out;
}

std::vector<std::set<int>> boundary_components(const FaceSet& fs)
{
    const int d = fs.max_dim();
    if (d <= 0)
        return {};
    std::vector<int> incidence(fs.size(), 0);
    for (int t : fs.cells_of_dim(d))
        for (int f : fs.cell(t).faces)
            ++incidence[f];

    std::set<int> boundary;
    std::function<void(int)> close = [&](int c) {
        if (boundary.count(c))
            return;
        boundary.insert(c);
        for (int f : fs.cell(c).faces)
            close(f);
    };
    for (int f : fs.cells_of_dim(d - 1))
        if (incidence[f] == 1)
            close(f);

    // split along shared faces
    std::map<int, int> parent;
    std::function<int(int)> root = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int c : boundary)
        parent[c] = c;
    for (int c : boundary)
        for (int f : fs.cell(c).faces)
            parent[root(c)] = root(f);
    std::map<int, std::set<int>> groups;
    for (int c : boundary)
        groups[root(c)].insert(c);
    std::vector<std::set<int>> out;
    for (auto& [r, g] : groups)
        out.push_back(std::move(g));
    return out;
}

} // namespace icsq
