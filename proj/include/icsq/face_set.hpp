#pragma once

#include "icsq/gf2.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace icsq {

struct Violation {
    std::string simplex;
    std::string kind;
    std::string detail;
};

/// A finite semi-simplicial set: each d-simplex lists its d+1 codimension-1
/// faces in vertex-position order (faces[v] removes vertex v). Degeneracies
/// are absent by construction, so normalized cochains are all cochains.
class FaceSet {
public:
    struct Cell {
        int dim = 0;
        std::vector<int> faces;   // size dim+1, empty when dim == 0
    };

    std::size_t size() const { return cells_.size(); }
    const Cell& cell(int c) const { return cells_[c]; }
    const std::string& id(int c) const { return ids_[c]; }
    int find(const std::string& id) const;   // -1 when absent
    int max_dim() const { return max_dim_; }

    const std::vector<int>& cells_of_dim(int d) const;
    int pos_in_dim(int c) const { return pos_in_dim_[c]; }

    /// Iterated face: keep exactly the vertex positions in `keep`
    /// (sorted ascending, nonempty).
    int subsimplex(int c, const std::vector<int>& keep) const;

private:
    friend class FaceSetBuilder;
    std::vector<Cell> cells_;
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<int> pos_in_dim_;
    int max_dim_ = -1;
};

/// Staging area; freeze() resolves ids (sorted lexicographically, so cell
/// order is canonical) and fails on structural problems.
class FaceSetBuilder {
public:
    void add(const std::string& id, int dim, const std::vector<std::string>& faces);
    bool has(const std::string& id) const { return staged_.count(id) != 0; }
    FaceSet freeze() const;

private:
    std::map<std::string, std::pair<int, std::vector<std::string>>> staged_;
};

/// Checks the face-count and semi-simplicial identity invariants.
std::vector<Violation> validate_face_set(const FaceSet& fs);

/// GF(2) cochain supported on the degree-d simplices of its carrier.
struct Cochain {
    const FaceSet* fs = nullptr;
    int degree = 0;
    gf2::BitVec c;
};

Cochain zero_cochain(const FaceSet& fs, int degree);
Cochain dual_cochain(const FaceSet& fs, int cell);
Cochain add(const Cochain& a, const Cochain& b);

/// (delta u)(s) = sum_k u(faces[k](s)) over GF(2).
Cochain coboundary(const Cochain& u);

/// Steenrod interval-cut cup_i product. A cut 0 <= b_1 <= ... <= b_{i+1} <= d
/// splits [0,d] into i+2 closed intervals overlapping in one point; even
/// intervals feed the first argument, odd the second, and terms whose merged
/// vertex list repeats a vertex are dropped. i < 0 or i > min(|u|,|v|) gives
/// the zero cochain.
Cochain cup_i(const Cochain& u, const Cochain& v, int i);

/// Map of semi-simplicial sets, one codomain cell per domain cell.
struct FaceSetMap {
    const FaceSet* dom = nullptr;
    const FaceSet* cod = nullptr;
    std::vector<int> image;
};

std::vector<Violation> validate_map(const FaceSetMap& g);
Cochain pullback(const FaceSetMap& g, const Cochain& u);

/// The full simplex on dim+1 ordered vertices, with faces addressed by
/// vertex-subset bitmask.
struct StandardSimplex {
    const FaceSet* fs = nullptr;
    std::vector<int> cell_of_mask;      // 1 << (dim+1) entries, -1 at mask 0
    std::vector<uint32_t> mask_of_cell;
};

const StandardSimplex& standard_simplex(int dim);

/// Simplicial complex from its maximal faces (integer vertex labels);
/// canonical ids are dot-joined sorted vertex lists.
FaceSet complex_from_maximal(const std::vector<std::vector<int>>& maximal);

/// Prism K x [0,1], triangulated cell by cell via monotone staircase chains;
/// bottom/top record the two end copies of K (cell indices in fs, indexed by
/// the cells of K).
struct Prism {
    FaceSet fs;
    std::vector<int> bottom;
    std::vector<int> top;
};

Prism prism(const FaceSet& base);

bool is_subcomplex(const FaceSet& fs, const std::set<int>& cells);

struct SubcomplexExtract {
    FaceSet fs;
    std::vector<int> to_sub;   // original cell -> extracted cell, -1 outside
    std::vector<int> to_orig;
};

SubcomplexExtract extract_subcomplex(const FaceSet& fs, const std::set<int>& cells);

/// Components of the free-face boundary of the top-dimensional cells:
/// codimension-1 cells incident to exactly one top cell, closed under faces,
/// split along shared-face connectivity.
std::vector<std::set<int>> boundary_components(const FaceSet& fs);

} // namespace icsq
