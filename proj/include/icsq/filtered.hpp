#pragma once

#include "icsq/face_set.hpp"

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace icsq {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(std::vector<Violation> v);
    std::vector<Violation> violations;
};

/// A finite filtered face set of formal dimension n. Each simplex carries a
/// filtration vector (j_0,...,j_n), j_k >= -1, and one face per global
/// vertex position; vertices are ordered block 0 first. Removing the vertex
/// at position v decrements the containing block's entry.
class FilteredFaceSet {
public:
    struct Cell {
        std::vector<int> blocks;   // size n+1
        std::vector<int> faces;    // size = total vertices, empty in total dim 0
    };

    int formal_dim() const { return n_; }
    std::size_t size() const { return cells_.size(); }
    const Cell& cell(int c) const { return cells_[c]; }
    const std::string& id(int c) const { return ids_[c]; }
    int find(const std::string& id) const;

    int total_vertices(int c) const;
    int dim(int c) const { return total_vertices(c) - 1; }
    bool regular(int c) const { return cells_[c].blocks[n_] >= 0; }

    /// Block containing global position v, and the index within that block.
    std::pair<int, int> position_block(int c, int v) const;

    /// Indices of the regular simplices (the restriction K_+), in id order.
    const std::vector<int>& k_plus() const { return k_plus_; }

    /// Simplices that are not the face of any other simplex.
    const std::vector<int>& maximal() const { return maximal_; }

private:
    friend class FilteredBuilder;
    int n_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<int> k_plus_;
    std::vector<int> maximal_;
};

class FilteredBuilder {
public:
    explicit FilteredBuilder(int n) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("formal dimension must be >= 0");
    }

    void add(const std::string& id, std::vector<int> blocks, std::vector<std::string> faces);
    FilteredFaceSet freeze() const;   // structural checks only

private:
    int n_;
    std::map<std::string, std::pair<std::vector<int>, std::vector<std::string>>> staged_;
};

/// Filtration-decrement and semi-simplicial identity checks.
std::vector<Violation> validate(const FilteredFaceSet& k);

/// Parses the JSON file format and validates every invariant. Throws
/// ParseError for malformed input and ValidationError when the complex is
/// structurally readable but violates the invariants.
FilteredFaceSet parse_filtered(const std::string& json_text);

/// Canonical serialization: ids sorted lexicographically, two-space indent.
std::string serialize(const FilteredFaceSet& k);

inline constexpr long PERV_INF = std::numeric_limits<long>::max();
inline constexpr long PERV_CLAMP = 1000000;

/// Loose perversity on stratum depths 1..n; the value at 0 is implicitly 0.
/// Entries are clamped to [-10^6, 10^6] with +infinity as a distinguished
/// value absorbing sums and dominating comparisons.
class Perversity {
public:
    Perversity() = default;
    Perversity(int n, std::vector<long> values);

    static Perversity constant(int n, long v);
    static Perversity zero(int n) { return constant(n, 0); }
    static Perversity infinite(int n) { return constant(n, PERV_INF); }
    static Perversity top(int n);

    int formal_dim() const { return n_; }
    long at(int l) const;   // l in 1..n

    bool is_perversity() const;      // p(i) <= p(i+1) <= p(i)+1, p(0)=0
    bool is_gm() const;              // perversity with p(1)=p(2)=0

    std::string to_string() const;   // comma list, "inf" for infinity

    friend Perversity sum(const Perversity& p, const Perversity& q);
    friend bool leq(const Perversity& p, const Perversity& q);
    bool operator==(const Perversity&) const = default;

private:
    int n_ = 0;
    std::vector<long> v_;
};

Perversity sum(const Perversity& p, const Perversity& q);
Perversity double_perversity(const Perversity& p);
bool leq(const Perversity& p, const Perversity& q);

/// Goresky-Pardon target perversity: L(p,i)(l) = min(2 p(l), p(l) + i).
Perversity gp_lift(const Perversity& p, int i);

/// Parses a comma list with "inf" tokens; must have exactly n entries.
Perversity parse_perversity(const std::string& text, int n);

// ---- builders ----

/// Every simplex of f placed in block n: blocks (-1,...,-1,dim).
FilteredFaceSet trivial_filtration(const FaceSet& f, int n);

/// Cone on f with the apex in block 0 and f in block n; coned simplices have
/// blocks (0,-1,...,-1,dim). |cone(f)| = 2|f| + 1.
FilteredFaceSet cone(const FaceSet& f, int n);

/// Two cones on f glued along f, both apexes in block 0. |susp| = 3|f| + 2.
FilteredFaceSet suspension(const FaceSet& f, int n);

/// f trivially filtered plus one cone per boundary component (components
/// must be disjoint face-closed subcomplexes).
FilteredFaceSet cone_off_boundary(const FaceSet& f, const std::vector<std::set<int>>& components,
                                  int n);

/// Recovers the plain face set when every simplex lives in block n.
std::optional<FaceSet> as_plain(const FilteredFaceSet& k);

} // namespace icsq
