#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace icsq::gf2 {

/// Dense bit vector over GF(2). Addition is XOR; spare bits of the last
/// word are kept zero so equality and popcount work on whole words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true)
    {
        if (v)
            w_[i >> 6] |= uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b)
    {
        a ^= b;
        return a;
    }

    bool any() const
    {
        for (uint64_t w : w_)
            if (w)
                return true;
        return false;
    }

    bool is_zero() const { return !any(); }

    std::size_t count() const;

    /// Index of the lowest set bit, if any.
    std::optional<std::size_t> first_set() const;

    bool operator==(const BitVec&) const = default;

    /// "0"/"1" characters, index 0 first.
    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Row-major packed matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0)
    {
    }

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<BitVec>& rows, std::size_t cols);
    static BitMatrix from_columns(const std::vector<BitVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v = true)
    {
        if (v)
            w_[r * stride_ + (c >> 6)] |= uint64_t{1} << (c & 63);
        else
            w_[r * stride_ + (c >> 6)] &= ~(uint64_t{1} << (c & 63));
    }

    void flip(std::size_t r, std::size_t c) { w_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    /// Matrix-vector product m*x over GF(2); x must have size cols().
    BitVec mul(const BitVec& x) const;

    BitMatrix transposed() const;

    /// Stack other below this; column counts must match.
    void append_rows(const BitMatrix& other);

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> w_;
};

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in row order (strictly increasing).
std::vector<std::size_t> rref(BitMatrix& m);

/// A subspace of GF(2)^ambient presented by a reduced-echelon basis.
/// The presentation is canonical: two equal subspaces compare equal.
struct Subspace {
    std::size_t ambient = 0;
    std::vector<BitVec> basis;   // RREF rows, nonzero
    std::vector<std::size_t> pivots;

    static Subspace zero(std::size_t ambient) { return Subspace{ambient, {}, {}}; }
    static Subspace full(std::size_t ambient);
    static Subspace from_vectors(std::size_t ambient, const std::vector<BitVec>& vecs);

    std::size_t dim() const { return basis.size(); }

    /// Residual of v after eliminating along the basis pivots.
    BitVec reduce(BitVec v) const;

    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    /// Coefficients of v in the basis, or nullopt if v is not a member.
    std::optional<BitVec> coordinates(const BitVec& v) const;

    bool operator==(const Subspace&) const = default;
};

struct RankKernel {
    std::size_t rank = 0;
    Subspace kernel;
};

/// Rank of m together with a reduced-echelon basis of {x : m*x = 0}.
RankKernel rank_and_kernel(const BitMatrix& m);

/// Some x with m*x = b, or nullopt. Deterministic: the echelon-canonical
/// solution with all free variables set to zero.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

/// Coset representatives for amb/sub. Together with sub's basis the
/// returned vectors span amb; their count is dim(amb) - dim(sub).
/// Throws std::invalid_argument when sub is not contained in amb.
std::vector<BitVec> quotient_basis(const Subspace& sub, const Subspace& amb);

} // namespace icsq::gf2
