#include "icsq/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace icsq::gf2 {

std::size_t BitVec::count() const
{
    std::size_t c = 0;
    for (uint64_t w : w_)
        c += std::popcount(w);
    return c;
}

std::optional<std::size_t> BitVec::first_set() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return k * 64 + std::countr_zero(w_[k]);
    return std::nullopt;
}

std::string BitVec::to_string() const
{
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, std::size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVec>& cols, std::size_t rows)
{
    BitMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            if (cols[c].get(r))
                m.set(r, c);
    }
    return m;
}

BitVec BitMatrix::row(std::size_t r) const
{
    BitVec v(cols_);
    for (std::size_t k = 0; k < stride_; ++k)
        v.words()[k] = w_[r * stride_ + k];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("set_row: size mismatch");
    for (std::size_t k = 0; k < stride_; ++k)
        w_[r * stride_ + k] = v.words()[k];
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src)
{
    for (std::size_t k = 0; k < stride_; ++k)
        w_[dst * stride_ + k] ^= w_[src * stride_ + k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t k = 0; k < stride_; ++k)
        std::swap(w_[a * stride_ + k], w_[b * stride_ + k]);
}

BitVec BitMatrix::mul(const BitVec& x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("mul: size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (std::size_t k = 0; k < stride_; ++k)
            acc ^= w_[r * stride_ + k] & x.words()[k];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < stride_; ++k) {
            uint64_t w = w_[r * stride_ + k];
            while (w) {
                std::size_t c = k * 64 + std::countr_zero(w);
                m.set(c, r);
                w &= w - 1;
            }
        }
    return m;
}

void BitMatrix::append_rows(const BitMatrix& other)
{
    if (other.cols_ != cols_)
        throw std::invalid_argument("append_rows: column mismatch");
    w_.insert(w_.end(), other.w_.begin(), other.w_.end());
    rows_ += other.rows_;
}

std::vector<std::size_t> rref(BitMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c))
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(r, pr);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s;
    s.ambient = ambient;
    for (std::size_t i = 0; i < ambient; ++i) {
        BitVec v(ambient);
        v.set(i);
        s.basis.push_back(v);
        s.pivots.push_back(i);
    }
    return s;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<BitVec>& vecs)
{
    BitMatrix m = BitMatrix::from_rows(vecs, ambient);
    std::vector<std::size_t> piv = rref(m);
    Subspace s;
    s.ambient = ambient;
    s.pivots = piv;
    for (std::size_t r = 0; r < piv.size(); ++r)
        s.basis.push_back(m.row(r));
    return s;
}

BitVec Subspace::reduce(BitVec v) const
{
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (v.get(pivots[r]))
            v ^= basis[r];
    return v;
}

std::optional<BitVec> Subspace::coordinates(const BitVec& v) const
{
    BitVec coeff(basis.size());
    BitVec rest = v;
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (rest.get(pivots[r])) {
            rest ^= basis[r];
            coeff.set(r);
        }
    if (!rest.is_zero())
        return std::nullopt;
    return coeff;
}

RankKernel rank_and_kernel(const BitMatrix& m)
{
    BitMatrix red = m;
    std::vector<std::size_t> piv = rref(red);

    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : piv)
        is_pivot[c] = 1;

    std::vector<BitVec> kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < piv.size(); ++r)
            if (red.get(r, f))
                v.set(piv[r]);
        kernel.push_back(v);
    }
    return RankKernel{piv.size(), Subspace::from_vectors(m.cols(), kernel)};
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: rhs length must equal row count");
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c))
                aug.set(r, c);
        if (b.get(r))
            aug.set(r, m.cols());
    }
    std::vector<std::size_t> piv = rref(aug);
    for (std::size_t c : piv)
        if (c == m.cols())
            return std::nullopt;
    BitVec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        if (aug.get(r, m.cols()))
            x.set(piv[r]);
    return x;
}

std::vector<BitVec> quotient_basis(const Subspace& sub, const Subspace& amb)
{
    if (sub.ambient != amb.ambient)
        throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
    for (const BitVec& v : sub.basis)
        if (!amb.contains(v))
            throw std::invalid_argument("quotient_basis: sub is not contained in amb");

    // Incremental echelon workspace seeded with sub's basis.
    std::vector<std::pair<std::size_t, BitVec>> work;
    for (std::size_t r = 0; r < sub.basis.size(); ++r)
        work.emplace_back(sub.pivots[r], sub.basis[r]);

    std::vector<BitVec> raw;
    for (const BitVec& a : amb.basis) {
        BitVec v = a;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [p, w] : work)
                if (v.get(p)) {
                    v ^= w;
                    changed = true;
                }
        }
        if (!v.is_zero()) {
            raw.push_back(v);
            work.emplace_back(*v.first_set(), v);
        }
    }
    // Canonicalize; row operations among representatives stay transversal.
    return Subspace::from_vectors(amb.ambient, raw).basis;
}

} // namespace icsq::gf2
