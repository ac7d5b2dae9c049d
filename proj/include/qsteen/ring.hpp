#ifndef QSTEEN_RING_HPP
#define QSTEEN_RING_HPP

#include <map>
#include <optional>
#include <string>

#include "qsteen/novikov.hpp"

namespace qsteen {

/* Parameters of the ring Lambda[x] / (x^{m+1} + T x^k): the total space of
 * the line bundle of twist -k over complex projective m-space. k = 0 is the
 * degenerate closed case x^{m+1} = T, useful for cross-checks; the quantum
 * operations downstream are implemented for k = 1.
 *
 * Gradings: |x| = 2 and |T| = 2(m + 1 - k), so the defining relation is
 * homogeneous of degree 2(m + 1). */
struct RingDescriptor {
    int m = 1;
    int k = 1;

    RingDescriptor() = default;
    RingDescriptor(int m_, int k_);

    int x_degree() const { return 2; }
    int t_degree() const { return 2 * (m + 1 - k); }

    bool operator==(const RingDescriptor&) const = default;
    std::string str() const;
};

/* Element of the ring above: Novikov-scalar coefficients on the monomial
 * basis 1, x, ..., x^m. Stored fully reduced (all x-exponents in [0, m], no
 * zero coefficients), so equality is map equality. Immutable in practice:
 * operations return new values. */
class QHElement {
public:
    explicit QHElement(RingDescriptor ring) : ring_(ring) {}

    static QHElement zero(RingDescriptor ring) { return QHElement(ring); }
    static QHElement one(RingDescriptor ring) { return monomial(ring, 0); }
    // x^a * T^b; a may exceed m, the relation is applied.
    static QHElement monomial(RingDescriptor ring, int x_exp,
                              NovikovScalar coeff = NovikovScalar::one());
    // Build from arbitrary exponent/coefficient pairs, reducing x-powers.
    static QHElement from_terms(RingDescriptor ring,
                                const std::map<int, NovikovScalar>& raw);

    const RingDescriptor& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, NovikovScalar>& coeffs() const { return coeffs_; }
    // Coefficient of x^a (zero scalar if absent).
    NovikovScalar coeff(int x_exp) const;

    QHElement operator+(const QHElement& rhs) const;
    QHElement operator*(const QHElement& rhs) const;
    QHElement& operator+=(const QHElement& rhs);
    QHElement scaled(const NovikovScalar& s) const;

    // Termwise T -> T^2 (semilinear ingredient; does not touch x).
    QHElement frobenius_coeffs() const;

    /* Cohomological degree: the common degree 2a + t_degree * b of all
     * monomials x^a T^b present, or nullopt when the element is zero or
     * mixes degrees (inhomogeneous). */
    std::optional<int> degree() const;
    bool is_homogeneous_of(int d) const;  // vacuously true for zero

    bool operator==(const QHElement& rhs) const = default;

    // "x^2 + x T" style rendering; terms by ascending x, then T exponent.
    std::string str() const;

private:
    RingDescriptor ring_;
    std::map<int, NovikovScalar> coeffs_;  // x-exponent -> scalar
};

// The degree-2 continuation map: multiplication by x.
QHElement seidel_r(const QHElement& a);

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b);

}  // namespace qsteen

#endif
