#include "qsteen/linalg.hpp"

#include <fmt/format.h>

#include <optional>

#include "qsteen/errors.hpp"

namespace qsteen {

LambdaMatrix LambdaMatrix::identity(int n) {
    LambdaMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = NovikovScalar::one();
    return out;
}

LambdaMatrix LambdaMatrix::operator*(const LambdaMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw DimensionMismatchError(
            fmt::format("matrix product {}x{} * {}x{}", rows_, cols_, rhs.rows_, rhs.cols_));
    LambdaMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < rhs.cols_; ++c) {
            NovikovScalar acc;
            for (int t = 0; t < cols_; ++t) acc += at(r, t) * rhs.at(t, c);
            out.at(r, c) = acc;
        }
    return out;
}

LambdaMatrix LambdaMatrix::pow(int e) const {
    if (rows_ != cols_)
        throw DimensionMismatchError(fmt::format("power of non-square {}x{}", rows_, cols_));
    if (e < 0) throw ExponentRangeError(fmt::format("matrix power {} < 0", e));
    LambdaMatrix acc = identity(rows_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

namespace {

struct Echelon {
    LambdaMatrix m;
    std::vector<int> pivot_col_of_row;  // -1 when the row carries no pivot
    std::vector<bool> col_has_pivot;
};

/* Reduced row-echelon form using only monomial pivots. Pivots are searched
 * globally (any unpivoted row, any unpivoted column), so an entry that only
 * becomes a monomial after earlier eliminations is still found. */
Echelon echelonize(LambdaMatrix m) {
    Echelon e{std::move(m), std::vector<int>(size_t(0)), std::vector<bool>(size_t(0))};
    e.pivot_col_of_row.assign(e.m.rows(), -1);
    e.col_has_pivot.assign(e.m.cols(), false);

    for (bool progress = true; progress;) {
        progress = false;
        for (int r = 0; r < e.m.rows() && !progress; ++r) {
            if (e.pivot_col_of_row[r] != -1) continue;
            for (int c = 0; c < e.m.cols() && !progress; ++c) {
                if (e.col_has_pivot[c] || !e.m.at(r, c).is_monomial()) continue;
                NovikovScalar inv = e.m.at(r, c).monomial_inverse();
                for (int j = 0; j < e.m.cols(); ++j) e.m.at(r, j) *= inv;
                for (int r2 = 0; r2 < e.m.rows(); ++r2) {
                    if (r2 == r || e.m.at(r2, c).is_zero()) continue;
                    NovikovScalar f = e.m.at(r2, c);
                    for (int j = 0; j < e.m.cols(); ++j)
                        e.m.at(r2, j) += f * e.m.at(r, j);
                }
                e.pivot_col_of_row[r] = c;
                e.col_has_pivot[c] = true;
                progress = true;
            }
        }
    }

    for (int r = 0; r < e.m.rows(); ++r) {
        if (e.pivot_col_of_row[r] != -1) continue;
        for (int c = 0; c < e.m.cols(); ++c)
            if (!e.m.at(r, c).is_zero())
                throw InconsistentSystemError(fmt::format(
                    "row {} has nonzero entries but no monomial pivot (entry '{}')", r,
                    e.m.at(r, c).str()));
    }
    return e;
}

}  // namespace

std::vector<LambdaVec> kernel_basis(LambdaMatrix m) {
    const int cols = m.cols();
    Echelon e = echelonize(std::move(m));
    std::vector<LambdaVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (e.col_has_pivot[free]) continue;
        LambdaVec v(cols);
        v[free] = NovikovScalar::one();
        // Row r reads v[pivot] + sum over free columns of entry * v[free]; in
        // characteristic 2 the pivot coordinate is just the free-column entry.
        for (int r = 0; r < e.m.rows(); ++r)
            if (e.pivot_col_of_row[r] != -1)
                v[e.pivot_col_of_row[r]] = e.m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(LambdaMatrix m) {
    Echelon e = echelonize(std::move(m));
    int rk = 0;
    for (int p : e.pivot_col_of_row) rk += p != -1;
    return rk;
}

namespace {

NovikovScalar det_rec(const LambdaMatrix& m, int row, unsigned used_cols,
                      std::vector<std::optional<NovikovScalar>>& memo) {
    const int n = m.rows();
    if (row == n) return NovikovScalar::one();
    if (memo[used_cols]) return *memo[used_cols];
    NovikovScalar acc;
    for (int c = 0; c < n; ++c) {
        if (used_cols & (1u << c) || m.at(row, c).is_zero()) continue;
        acc += m.at(row, c) * det_rec(m, row + 1, used_cols | (1u << c), memo);
    }
    memo[used_cols] = acc;
    return acc;
}

}  // namespace

NovikovScalar determinant(const LambdaMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatchError(
            fmt::format("determinant of non-square {}x{}", m.rows(), m.cols()));
    if (m.rows() > 20)
        throw DimensionMismatchError(
            fmt::format("determinant supported up to order 20, got {}", m.rows()));
    if (m.rows() == 0) return NovikovScalar::one();
    std::vector<std::optional<NovikovScalar>> memo(1u << m.rows());
    return det_rec(m, 0, 0, memo);
}

bool in_span(const std::vector<LambdaVec>& vectors, const LambdaVec& v) {
    if (vectors.empty()) {
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }
    const int cols = int(vectors[0].size());
    if (int(v.size()) != cols)
        throw DimensionMismatchError(
            fmt::format("span test: vector length {} vs {}", v.size(), cols));
    LambdaMatrix base(int(vectors.size()), cols);
    LambdaMatrix ext(int(vectors.size()) + 1, cols);
    for (int r = 0; r < int(vectors.size()); ++r) {
        if (int(vectors[r].size()) != cols)
            throw DimensionMismatchError("span test: ragged vector list");
        for (int c = 0; c < cols; ++c) {
            base.at(r, c) = vectors[r][c];
            ext.at(r, c) = vectors[r][c];
        }
    }
    for (int c = 0; c < cols; ++c) ext.at(int(vectors.size()), c) = v[c];
    return rank(std::move(base)) == rank(std::move(ext));
}

}  // namespace qsteen
