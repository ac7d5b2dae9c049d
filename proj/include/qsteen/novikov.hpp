#ifndef QSTEEN_NOVIKOV_HPP
#define QSTEEN_NOVIKOV_HPP

#include <string>
#include <vector>

namespace qsteen {

/* Scalar of the engine: a Laurent polynomial in the formal variable T with
 * GF(2) coefficients, stored as the strictly increasing list of exponents
 * that carry coefficient 1. Values are immutable once built; every operation
 * returns a new canonical value, so scalars are safe to share across threads.
 *
 * General power series never appear at this level: the only inverse provided
 * is for single-term values (monomial_inverse), which keeps all arithmetic
 * exact. T-exponents are guarded by a configurable window (default +/- 2^16)
 * so runaway recursions surface as ExponentOverflowError instead of silently
 * producing astronomical exponents. */
class NovikovScalar {
public:
    NovikovScalar() = default;  // zero

    static NovikovScalar zero() { return NovikovScalar{}; }
    static NovikovScalar one() { return monomial(0); }
    static NovikovScalar monomial(int exp);  // T^exp
    // Build from an exponent list; repeated exponents cancel in pairs.
    static NovikovScalar from_exponents(std::vector<int> exps);

    bool is_zero() const { return exps_.empty(); }
    bool is_one() const { return exps_.size() == 1 && exps_[0] == 0; }
    bool is_monomial() const { return exps_.size() == 1; }
    int monomial_exponent() const;  // NotMonomialError unless exactly one term
    size_t term_count() const { return exps_.size(); }
    const std::vector<int>& exponents() const { return exps_; }
    // Coefficient of T^exp, as a bit.
    bool has_exponent(int exp) const;

    NovikovScalar operator+(const NovikovScalar& rhs) const;
    NovikovScalar operator*(const NovikovScalar& rhs) const;
    NovikovScalar& operator+=(const NovikovScalar& rhs);
    NovikovScalar& operator*=(const NovikovScalar& rhs);

    // The GF(2) Frobenius T -> T^2 applied termwise (a ring endomorphism).
    NovikovScalar frobenius() const;
    // Inverse of a single-term value; throws NotMonomialError otherwise.
    NovikovScalar monomial_inverse() const;

    bool operator==(const NovikovScalar& rhs) const = default;

    // Human-readable form: "0", "1", "T", "T^-1", "1 + T^2", ...
    std::string str() const;

    /* Guard window for T-exponents. Process-wide configuration, written once
     * at startup; checked whenever a new exponent is produced. */
    static int exponent_guard();
    static void set_exponent_guard(int bound);

private:
    explicit NovikovScalar(std::vector<int> sorted) : exps_(std::move(sorted)) {}
    static void check_exponent(int exp);

    std::vector<int> exps_;  // strictly increasing T-exponents
};

inline NovikovScalar operator*(const NovikovScalar& a, int bit) {
    return bit % 2 ? a : NovikovScalar::zero();
}

}  // namespace qsteen

#endif
