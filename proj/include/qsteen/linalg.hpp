#ifndef QSTEEN_LINALG_HPP
#define QSTEEN_LINALG_HPP

#include <vector>

#include "qsteen/novikov.hpp"

namespace qsteen {

using LambdaVec = std::vector<NovikovScalar>;

/* Dense matrix over the Laurent-polynomial scalars, for the small exact
 * computations the engine needs (operator powers, kernels, ranks). The
 * elimination routines only ever divide by single-term entries: a pivot is
 * accepted when it is a T-monomial, which keeps everything exact. Matrices
 * here are tiny (order m+1), so clarity wins over asymptotics. */
class LambdaMatrix {
public:
    LambdaMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static LambdaMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    NovikovScalar& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const NovikovScalar& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    LambdaMatrix operator*(const LambdaMatrix& rhs) const;
    LambdaMatrix pow(int e) const;  // square matrices, e >= 0

    bool operator==(const LambdaMatrix&) const = default;

private:
    int rows_, cols_;
    std::vector<NovikovScalar> data_;
};

/* Basis of the right kernel {v : Mv = 0}, via row reduction restricted to
 * monomial pivots. Throws InconsistentSystemError if a nonzero row admits no
 * monomial pivot (cannot happen for the graded matrices used here, but the
 * failure is loud rather than silent). */
std::vector<LambdaVec> kernel_basis(LambdaMatrix m);

int rank(LambdaMatrix m);

// Determinant by cofactor expansion over column subsets (division-free;
// signs are trivial in characteristic 2). Square matrices up to order ~20.
NovikovScalar determinant(const LambdaMatrix& m);

// Is v in the row span of the given vectors? Decided by rank comparison.
bool in_span(const std::vector<LambdaVec>& vectors, const LambdaVec& v);

}  // namespace qsteen

#endif
