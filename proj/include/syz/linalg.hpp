#ifndef SYZ_LINALG_HPP
#define SYZ_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syz/errors.hpp"
#include "syz/field.hpp"

namespace syz {

struct Entry {
    std::uint32_t index;
    Elem value;
    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVec = std::vector<Entry>;
using DenseVec = std::vector<Elem>;

inline SparseVec to_sparse(const DenseVec& v)
{
    SparseVec out;
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.push_back({i, v[i]});
    return out;
}

inline DenseVec to_dense(const SparseVec& v, std::size_t n)
{
    DenseVec out(n, 0);
    for (const auto& e : v)
        out.at(e.index) = e.value;
    return out;
}

/// Sorts by index and merges duplicate indices, dropping zeros.
inline void canonicalize(const Field& f, SparseVec& v)
{
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
        std::uint32_t idx = v[r].index;
        Elem acc = 0;
        while (r < v.size() && v[r].index == idx)
            acc = f.add(acc, v[r++].value);
        if (acc != 0)
            v[w++] = {idx, acc};
    }
    v.resize(w);
}

inline SparseVec scaled(const Field& f, const SparseVec& v, Elem c)
{
    SparseVec out;
    if (c == 0)
        return out;
    out.reserve(v.size());
    for (const auto& e : v)
        out.push_back({e.index, f.mul(e.value, c)});
    return out;
}

/// a + c*b
inline SparseVec axpy(const Field& f, const SparseVec& a, Elem c, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            Elem v = f.mul(c, b[j].value);
            if (v != 0)
                out.push_back({b[j].index, v});
            ++j;
        } else {
            Elem v = f.add(a[i].value, f.mul(c, b[j].value));
            if (v != 0)
                out.push_back({a[i].index, v});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Row-major sparse matrix over a prime field.
///
/// Rows are stored sparsely; elimination routines work with a dense
/// accumulator row, which is the dense side of the representation.
class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), cols_(cols), data_(rows) {}

    static Matrix from_dense(Field f, const std::vector<std::vector<std::int64_t>>& rows)
    {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw InputError("ragged dense matrix");
            for (std::size_t c = 0; c < cols; ++c) {
                Elem v = f.from_int(rows[r][c]);
                if (v != 0)
                    m.data_[r].push_back({static_cast<std::uint32_t>(c), v});
            }
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<SparseVec>& columns)
    {
        Matrix m(f, rows, columns.size());
        for (std::uint32_t c = 0; c < columns.size(); ++c)
            for (const auto& e : columns[c]) {
                if (e.index >= rows)
                    throw InputError("column entry out of range");
                m.data_[e.index].push_back({c, e.value});
            }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVec& row(std::size_t r) const { return data_.at(r); }

    /// Replaces row r; entries are canonicalized.
    void set_row(std::size_t r, SparseVec v)
    {
        canonicalize(field_, v);
        if (!v.empty() && v.back().index >= cols_)
            throw InputError("row entry out of range");
        data_.at(r) = std::move(v);
    }

    /// Adds v to entry (r, c). Intended for assembly; keeps the row canonical.
    void add_to(std::size_t r, std::size_t c, Elem v)
    {
        if (c >= cols_)
            throw InputError("column index out of range");
        auto& row = data_.at(r);
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t idx) { return e.index < idx; });
        if (it != row.end() && it->index == c) {
            it->value = field_.add(it->value, v);
            if (it->value == 0)
                row.erase(it);
        } else if (v != 0) {
            row.insert(it, {static_cast<std::uint32_t>(c), v});
        }
    }

    Elem at(std::size_t r, std::size_t c) const
    {
        const auto& row = data_.at(r);
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, std::size_t idx) { return e.index < idx; });
        return (it != row.end() && it->index == c) ? it->value : 0;
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : data_)
            n += r.size();
        return n;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows());
        for (std::uint32_t r = 0; r < rows(); ++r)
            for (const auto& e : data_[r])
                t.data_[e.index].push_back({r, e.value});
        return t;
    }

    /// this * v, where v has length cols().
    SparseVec apply(const SparseVec& v) const
    {
        DenseVec dv = to_dense(v, cols_);
        SparseVec out;
        for (std::uint32_t r = 0; r < rows(); ++r) {
            Elem acc = 0;
            for (const auto& e : data_[r])
                acc = field_.add(acc, field_.mul(e.value, dv[e.index]));
            if (acc != 0)
                out.push_back({r, acc});
        }
        return out;
    }

    Matrix operator*(const Matrix& rhs) const
    {
        if (cols_ != rhs.rows())
            throw InputError("matrix product dimension mismatch");
        Matrix out(field_, rows(), rhs.cols());
        for (std::size_t r = 0; r < rows(); ++r) {
            DenseVec acc(rhs.cols(), 0);
            for (const auto& e : data_[r])
                for (const auto& g : rhs.data_[e.index])
                    acc[g.index] = field_.add(acc[g.index], field_.mul(e.value, g.value));
            out.data_[r] = to_sparse(acc);
        }
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
    }

private:
    Field field_;
    std::size_t cols_;
    std::vector<SparseVec> data_;
};

/// Incremental row echelon form of a subspace of F^n.
///
/// Pivot rows have leading coefficient 1. After `make_reduced()` every pivot
/// column is zero in all other pivot rows (reduced row echelon form).
class RowEchelon {
public:
    RowEchelon(Field f, std::size_t n) : field_(f), n_(n), pivot_row_(n, -1), scratch_(n, 0) {}

    std::size_t dimension() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return field_; }

    /// Reduces v against the current pivots. The result is zero at every pivot column.
    SparseVec reduce(const SparseVec& v) const
    {
        DenseVec acc(n_, 0);
        return reduce_into(v, acc);
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Adds v to the span; returns true if the rank grew.
    bool insert(const SparseVec& v)
    {
        SparseVec r = reduce_into(v, scratch_);
        if (r.empty())
            return false;
        Elem lead_inv = field_.inv(r.front().value);
        for (auto& e : r)
            e.value = field_.mul(e.value, lead_inv);
        pivot_row_[r.front().index] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(r));
        reduced_ = false;
        return true;
    }

    /// Back-substitution to reduced row echelon form.
    void make_reduced()
    {
        if (reduced_)
            return;
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows_[a].front().index > rows_[b].front().index;
        });
        // Processing from the rightmost pivot leftwards: each row is reduced
        // against pivot rows that are already fully reduced.
        // Reduced pivot rows vanish on all other pivot columns, so one pass of
        // substitution per row suffices.
        std::vector<std::uint32_t> touched;
        for (std::size_t i : order) {
            SparseVec& row = rows_[i];
            touched.clear();
            for (std::size_t k = 1; k < row.size(); ++k) {
                const Entry& e = row[k];
                std::int64_t pr = pivot_row_[e.index];
                if (pr < 0) {
                    if (scratch_[e.index] == 0)
                        touched.push_back(e.index);
                    scratch_[e.index] = field_.add(scratch_[e.index], e.value);
                    continue;
                }
                const SparseVec& prow = rows_[pr];
                for (std::size_t j = 1; j < prow.size(); ++j) {
                    if (scratch_[prow[j].index] == 0)
                        touched.push_back(prow[j].index);
                    scratch_[prow[j].index] =
                        field_.sub_mul(scratch_[prow[j].index], e.value, prow[j].value);
                }
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            SparseVec acc{row.front()};
            for (std::uint32_t c : touched) {
                if (scratch_[c] != 0)
                    acc.push_back({c, scratch_[c]});
                scratch_[c] = 0;
            }
            row = std::move(acc);
        }
        reduced_ = true;
    }

    /// Pivot rows sorted by pivot column.
    std::vector<SparseVec> basis() const
    {
        std::vector<SparseVec> out;
        out.reserve(rows_.size());
        for (std::size_t c = 0; c < n_; ++c)
            if (pivot_row_[c] >= 0)
                out.push_back(rows_[pivot_row_[c]]);
        return out;
    }

    std::vector<std::uint32_t> pivot_columns() const
    {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < n_; ++c)
            if (pivot_row_[c] >= 0)
                out.push_back(c);
        return out;
    }

    bool is_pivot(std::size_t c) const { return pivot_row_.at(c) >= 0; }
    const SparseVec& pivot_row(std::size_t c) const { return rows_.at(pivot_row_.at(c)); }

private:
    SparseVec reduce_into(const SparseVec& v, DenseVec& acc) const
    {
        if (v.empty())
            return {};
        if (v.back().index >= n_)
            throw InputError("vector longer than echelon dimension");
        for (const auto& e : v)
            acc[e.index] = e.value;
        SparseVec out;
        for (std::size_t c = v.front().index; c < n_; ++c) {
            Elem a = acc[c];
            if (a == 0)
                continue;
            acc[c] = 0;
            std::int64_t pr = pivot_row_[c];
            if (pr < 0) {
                out.push_back({static_cast<std::uint32_t>(c), a});
                continue;
            }
            const SparseVec& row = rows_[pr];
            for (std::size_t k = 1; k < row.size(); ++k)
                acc[row[k].index] = field_.sub_mul(acc[row[k].index], a, row[k].value);
        }
        return out;
    }

    Field field_;
    std::size_t n_;
    std::vector<SparseVec> rows_;
    std::vector<std::int64_t> pivot_row_;
    DenseVec scratch_;
    bool reduced_ = true;
};

inline RowEchelon row_echelon(const Matrix& m)
{
    RowEchelon e(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        e.insert(m.row(r));
    return e;
}

inline std::size_t rank(const Matrix& m)
{
    // eliminate along the shorter side
    if (m.rows() > m.cols() * 2) {
        Matrix t = m.transpose();
        return row_echelon(t).rank();
    }
    return row_echelon(m).rank();
}

/// Basis of the right kernel {w : m w = 0}.
///
/// One vector per non-pivot column j of the reduced row echelon form: the
/// vector has a 1 at j, zeros at all other non-pivot columns, and its pivot
/// coordinates are determined by the echelon rows. Vectors are returned in
/// increasing order of j, so the basis is reduced echelon with respect to the
/// reversed column order and is independent of row order in m.
inline std::vector<SparseVec> kernel_basis(const Matrix& m)
{
    RowEchelon e = row_echelon(m);
    e.make_reduced();
    const Field& f = m.field();
    std::vector<std::vector<Entry>> free_to_pivots(m.cols());
    for (std::uint32_t pc : e.pivot_columns())
        for (const auto& entry : e.pivot_row(pc))
            if (entry.index != pc)
                free_to_pivots[entry.index].push_back({pc, f.neg(entry.value)});
    std::vector<SparseVec> out;
    for (std::uint32_t c = 0; c < m.cols(); ++c) {
        if (e.is_pivot(c))
            continue;
        SparseVec v = free_to_pivots[c];
        v.push_back({c, 1});
        canonicalize(f, v);
        out.push_back(std::move(v));
    }
    return out;
}

/// Solution of m w = v when v lies in the column span of m.
///
/// The witness has zeros at the free columns of the reduced echelon form.
inline std::optional<SparseVec> in_span(const SparseVec& v, const Matrix& m)
{
    if (!v.empty() && v.back().index >= m.rows())
        throw InputError("in_span: vector length " + std::to_string(v.back().index + 1) +
                         " exceeds matrix rows " + std::to_string(m.rows()));
    if (v.empty())
        return SparseVec{};
    const Field& f = m.field();
    const std::uint32_t rhs = static_cast<std::uint32_t>(m.cols());
    DenseVec dv = to_dense(v, m.rows());
    RowEchelon e(f, m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVec row = m.row(r);
        if (dv[r] != 0)
            row.push_back({rhs, dv[r]});
        e.insert(row);
    }
    if (e.is_pivot(rhs))
        return std::nullopt;
    e.make_reduced();
    SparseVec w;
    for (std::uint32_t pc : e.pivot_columns()) {
        const SparseVec& row = e.pivot_row(pc);
        if (row.back().index == rhs)
            w.push_back({pc, row.back().value});
    }
    return w;
}

/// Convenience overload for dense input vectors of length m.rows().
inline std::optional<SparseVec> in_span(const DenseVec& v, const Matrix& m)
{
    if (v.size() != m.rows())
        throw InputError("in_span: vector length " + std::to_string(v.size()) +
                         " does not match matrix rows " + std::to_string(m.rows()));
    return in_span(to_sparse(v), m);
}

/// Determinant of a small square dense matrix (row-major), by elimination.
inline Elem determinant(const Field& f, std::vector<DenseVec> a)
{
    const std::size_t n = a.size();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c][c]);
        Elem inv = f.inv(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            Elem factor = f.mul(a[r][c], inv);
            for (std::size_t k = c; k < n; ++k)
                a[r][k] = f.sub_mul(a[r][k], factor, a[c][k]);
        }
    }
    return det;
}

/// Inverse of a square dense matrix, or nullopt if singular.
inline std::optional<std::vector<DenseVec>> inverse(const Field& f, const std::vector<DenseVec>& a)
{
    const std::size_t n = a.size();
    std::vector<DenseVec> aug(n, DenseVec(2 * n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n)
            throw InputError("inverse: matrix is not square");
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = a[r][c];
        aug[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && aug[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(aug[piv], aug[c]);
        Elem inv = f.inv(aug[c][c]);
        for (auto& x : aug[c])
            x = f.mul(x, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug[r][c] == 0)
                continue;
            Elem factor = aug[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                aug[r][k] = f.sub_mul(aug[r][k], factor, aug[c][k]);
        }
    }
    std::vector<DenseVec> out(n, DenseVec(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r][c] = aug[r][n + c];
    return out;
}

}  // namespace syz

#endif
