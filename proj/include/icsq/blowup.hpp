#pragma once

#include "icsq/cohomology.hpp"
#include "icsq/filtered.hpp"
#include "icsq/gf2.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace icsq {

inline constexpr long PDEG_NEG_INF = std::numeric_limits<long>::min();

/// Perverse degree vector (||c||_1, ..., ||c||_n); entries are integers or
/// -infinity (PDEG_NEG_INF).
using PerverseDegree = std::vector<long>;

std::string pdeg_to_string(const PerverseDegree& d);
bool pdeg_leq(const PerverseDegree& d, const Perversity& p);

/// One tensor basis element of a local blow-up complex: a face of every
/// factor, encoded as a vertex bitmask. Cone factor bits are base vertices
/// 0..j then the apex as the highest bit; the last factor has no apex.
using TensorFace = std::vector<uint32_t>;

/// The blow-up cochain complex of a filtered face set: per regular simplex
/// the tensor product of the factor simplex cochain complexes, glued by the
/// face-compatibility equalizer. Coordinates in degree k are pairs
/// (regular simplex, tensor basis element), simplex-major in id order,
/// basis elements in lexicographic order.
///
/// Results are deterministic. Accessors fill caches lazily, so one instance
/// must not be shared across threads without external locking; distinct
/// instances are independent.
class Blowup {
public:
    explicit Blowup(FilteredFaceSet k);

    const FilteredFaceSet& complex() const { return k_; }
    int formal_dim() const { return n_; }
    int max_degree() const { return max_deg_; }

    /// Vertex count of factor m of the blow-up prism of a regular simplex
    /// (cone factors include the apex).
    int factor_verts(int cell, int m) const;
    bool factor_has_apex(int m) const { return m < n_; }

    /// All degree-k tensor basis elements of a regular simplex.
    const std::vector<TensorFace>& local_basis(int cell, int k) const;

    std::size_t coord_count(int k) const;
    /// Coordinate layout: which (cell, local index) a coordinate refers to.
    std::pair<int, int> coord_cell(int k, std::size_t coord) const;
    const TensorFace& coord_face(int k, std::size_t coord) const;
    std::size_t coord_index(int k, int cell, const TensorFace& t) const;
    std::size_t cell_offset(int k, int cell) const;

    /// Pullback of a local cochain along the codimension-1 face at global
    /// position pos of `cell`; terms whose faces are not in the image die.
    std::vector<TensorFace> restrict_along_face(int cell, int pos,
                                                const std::vector<TensorFace>& terms) const;

    /// Image in `cell` of a tensor face of its codimension-1 face at pos.
    TensorFace push_face(int cell, int pos, const TensorFace& t) const;

    /// Local tensor coboundary of a degree-k coordinate vector.
    const gf2::BitMatrix& delta(int k) const;
    gf2::BitVec apply_delta(int k, const gf2::BitVec& v) const;

    /// Stacked equalizer constraints c_{face} = restriction(c_cell) over all
    /// codimension-1 face relations inside K_+.
    const gf2::BitMatrix& constraints(int k) const;

    /// Global sections of degree k as a subspace of the coordinate space.
    const gf2::Subspace& global_sections(int k) const;

    /// Perverse degree of a degree-k coordinate vector; with only_maximal
    /// the sup runs over maximal simplices only.
    PerverseDegree perverse_degree(int k, const gf2::BitVec& v, bool only_maximal = false) const;

    bool admissible(int k, const gf2::BitVec& v, const Perversity& p) const;

    /// Basis of the p-intersection subcomplex in degree k: global sections c
    /// with ||c|| <= p and ||delta c|| <= p.
    const gf2::Subspace& intersection_subcomplex(const Perversity& p, int k) const;

    /// Coordinates whose local term violates the admissibility bound at some
    /// stratum depth (base-surviving term with tail degree above p).
    std::vector<std::size_t> forbidden_coords(const Perversity& p, int k) const;

private:
    struct DegreeData {
        bool built = false;
        std::vector<std::size_t> offsets;            // per K_+ position
        std::vector<std::pair<int, int>> coords;     // (cell, local index)
        std::map<int, std::vector<TensorFace>> basis;   // per cell
        bool have_delta = false;
        gf2::BitMatrix delta;
        bool have_constraints = false;
        gf2::BitMatrix constraints;
        bool have_sections = false;
        gf2::Subspace sections;
    };

    DegreeData& deg(int k) const;
    void build_coords(int k) const;

    FilteredFaceSet k_;
    int n_ = 0;
    int max_deg_ = 0;
    std::vector<int> kplus_pos_;   // cell -> position in k_plus(), -1 otherwise
    std::vector<char> is_maximal_;
    mutable std::map<int, DegreeData> degrees_;
    mutable std::map<std::pair<std::string, int>, gf2::Subspace> intersection_;
};

} // namespace icsq
