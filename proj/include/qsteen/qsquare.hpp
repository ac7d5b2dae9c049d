#ifndef QSTEEN_QSQUARE_HPP
#define QSTEEN_QSQUARE_HPP

#include <map>
#include <optional>
#include <string>

#include "qsteen/ring.hpp"
#include "qsteen/steenrod.hpp"

namespace qsteen {

/* Element of the equivariant theory: a series in the degree-1 variable h
 * with ring-element coefficients. A value either is exact (order nullopt,
 * finitely many terms, nothing hidden) or carries a truncation order N,
 * meaning coefficients are known for h^0..h^N and unknown beyond. Binary
 * operations propagate the tighter bound; terms beyond the bound are
 * silently dropped, terms at negative h-exponents are an error. */
class EqElement {
public:
    explicit EqElement(RingDescriptor ring, std::optional<int> order = std::nullopt)
        : ring_(ring), order_(order) {}

    static EqElement zero(RingDescriptor ring) { return EqElement(ring); }
    static EqElement unit(RingDescriptor ring);  // ring unit at h^0
    static EqElement term(RingDescriptor ring, int h_exp, QHElement c);

    const RingDescriptor& ring() const { return ring_; }
    const std::optional<int>& order() const { return order_; }
    const std::map<int, QHElement>& coeffs() const { return coeffs_; }
    QHElement coeff(int h_exp) const;
    bool is_zero() const { return coeffs_.empty(); }

    // Add c at h^h_exp in place (the one mutating entry point).
    void add_term(int h_exp, const QHElement& c);

    EqElement operator+(const EqElement& rhs) const;
    EqElement operator*(const EqElement& rhs) const;
    EqElement& operator+=(const EqElement& rhs);
    EqElement scaled(const NovikovScalar& s) const;
    EqElement scaled(const QHElement& c) const;  // coefficientwise product
    EqElement shifted_h(int j) const;            // multiply by h^j, j >= 0
    EqElement truncated(std::optional<int> order) const;

    /* Geometric-series inverse through the given order; the h^0 coefficient
     * must be a T-monomial multiple of the unit class, otherwise
     * NotInvertibleError. */
    EqElement inverted(int order) const;

    // Degree bookkeeping with |h| = 1 on top of the ring grading.
    std::optional<int> degree() const;
    bool is_homogeneous_of(int d) const;

    // Strict equality: ring, coefficients and truncation order all agree.
    bool operator==(const EqElement& rhs) const = default;

    // Flat rendering, terms by ascending h, then x, then T exponent; a
    // bounded value ends with its "+ O(h^{N+1})" marker.
    std::string str() const;

private:
    RingDescriptor ring_;
    std::map<int, QHElement> coeffs_;  // h-exponent -> nonzero coefficient
    std::optional<int> order_;
};

// Agreement of coefficients for all h-exponents <= order.
bool equal_through(const EqElement& a, const EqElement& b, int order);

/* Quantum square of x^i for the twist-1 ring, 0 <= i <= m+1, computed by
 * the multiplicative recursion
 *     QS(x^{i+1}) = QS(x^i) * QS(x) + correction(i)
 * from the base cases QS(1) = 1 and QS(x) = x^2 + x h^2. Values are exact
 * (unbounded) and memoized per (m, i); the memo is guarded for concurrent
 * callers. */
EqElement qs_power(const RingDescriptor& ring, int i);

/* The correction term entering the recursion at step i (1 <= i <= m):
 * C(i, m-i) x T h^{2+4i-2m}, plus x T^2 h^2 at the top step i = m. The digit
 * criterion forces the h-exponent nonnegative whenever the binomial is odd;
 * a negative exponent with odd binomial would be a contradiction and throws. */
EqElement qs_correction(const RingDescriptor& ring, int i);

/* Semilinear extension to a whole ring element: monomials x^a T^b map to
 * qs_power(a) * T^{2b}, additively. */
EqElement qs_element(const QHElement& f);

// Closed form for the square of x^m: x^m h^{2m} + T * sum x^i h^{2m-2i}.
EqElement closed_form_qsxm(const RingDescriptor& ring);

// T^0 part of an equivariant series, as a classical h-series.
HSeriesClassical classical_part(const EqElement& a);

}  // namespace qsteen

#endif
