#pragma once
// Exact linear algebra over Q(zeta_N): dense helpers and an incremental sparse
// echelon space with optional coordinate tracking.

#include "yh/fields/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yh {

using Matrix = std::vector<std::vector<Scalar>>;
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by index, no zeros

struct RowReduction {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

inline RowReduction row_reduce(Matrix m) {
    RowReduction out;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

inline Scalar determinant(Matrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

// Solve m x = b; nullopt when inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Matrix aug = m;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    RowReduction rr = row_reduce(aug);
    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
        if (rr.pivots[k] == cols) return std::nullopt;
        x[rr.pivots[k]] = rr.rref[k][cols];
    }
    return x;
}

// Incremental echelon form of a growing family of sparse vectors. Each stored
// row has its pivot as its smallest index with coefficient 1. When tracking is
// on, every row remembers its expression in the inserted generators, so
// coordinates of any vector in the span can be recovered.
class EchelonSpace {
public:
    explicit EchelonSpace(std::size_t dim, bool track = false) : dim_(dim), track_(track), pivot_row_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t generators() const { return gens_; }

    // Returns true when v enlarged the span.
    bool insert(const SparseVec& v) {
        std::vector<Scalar> work, tag;
        load(v, work);
        if (track_) {
            tag.assign(gens_ + 1, Scalar(0));
            tag[gens_] = Scalar(1);
        }
        ++gens_;
        std::optional<std::uint32_t> free_col = reduce(work, track_ ? &tag : nullptr, false);
        if (!free_col) return false;
        std::uint32_t c = *free_col;
        Scalar inv = work[c].inverse();
        Row row;
        for (std::uint32_t j = c; j < dim_; ++j)
            if (!work[j].is_zero()) row.vec.emplace_back(j, work[j] * inv);
        if (track_)
            for (std::uint32_t j = 0; j < tag.size(); ++j)
                if (!tag[j].is_zero()) row.tag.emplace_back(j, tag[j] * inv);
        pivot_row_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const SparseVec& v) const {
        std::vector<Scalar> work;
        load(v, work);
        return !reduce(work, nullptr, false).has_value();
    }

    // Coordinates of v in terms of the inserted generators (dependent
    // generators get coefficient zero). nullopt when v is outside the span.
    std::optional<SparseVec> coordinates(const SparseVec& v) const {
        if (!track_) throw std::logic_error("coordinate tracking disabled");
        std::vector<Scalar> work, tag(gens_, Scalar(0));
        load(v, work);
        if (reduce(work, &tag, true)) return std::nullopt;
        SparseVec out;
        for (std::uint32_t j = 0; j < gens_; ++j)
            if (!tag[j].is_zero()) out.emplace_back(j, -tag[j]);
        return out;
    }

private:
    struct Row {
        SparseVec vec;
        SparseVec tag;
    };
    std::size_t dim_;
    bool track_;
    std::size_t gens_ = 0;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;

    void load(const SparseVec& v, std::vector<Scalar>& work) const {
        work.assign(dim_, Scalar(0));
        for (const auto& [i, c] : v) {
            if (i >= dim_) throw std::out_of_range("vector index beyond space dimension");
            work[i] = c;
        }
    }

    // Eliminates pivots from work in increasing column order. Returns the first
    // column that cannot be eliminated, or nullopt if work reduces to zero.
    // Tags accumulate "tag -= f * row.tag" so that v = -tag . generators when
    // starting from a zero tag.
    std::optional<std::uint32_t> reduce(std::vector<Scalar>& work, std::vector<Scalar>* tag, bool) const {
        for (std::uint32_t c = 0; c < dim_; ++c) {
            if (work[c].is_zero()) continue;
            int ri = pivot_row_[c];
            if (ri < 0) return c;
            const Row& row = rows_[static_cast<std::size_t>(ri)];
            Scalar f = work[c];
            for (const auto& [j, x] : row.vec) work[j] -= f * x;
            if (tag)
                for (const auto& [j, x] : row.tag) (*tag)[j] -= f * x;
        }
        return std::nullopt;
    }
};

inline std::size_t sparse_rank(const std::vector<SparseVec>& vecs, std::size_t dim) {
    EchelonSpace space(dim);
    for (const auto& v : vecs) space.insert(v);
    return space.rank();
}

}  // namespace yh
