#ifndef QSTEEN_STEENROD_HPP
#define QSTEEN_STEENROD_HPP

#include <map>
#include <string>

#include "qsteen/ring.hpp"

namespace qsteen {

// Binomial coefficient mod 2 by the digit criterion: C(n, j) is odd exactly
// when every binary digit of j is <= the matching digit of n.
int binom_mod2(long long n, long long j);

/* Finite h-series with T-free ring coefficients: the value of a classical
 * total square, graded so the h^r coefficient of the square of a class a is
 * the (|a| - r)-th square of a. No truncation bookkeeping: these series are
 * finite and exact. */
struct HSeriesClassical {
    RingDescriptor ring;
    std::map<int, QHElement> coeffs;  // h-exponent -> T-free element

    explicit HSeriesClassical(RingDescriptor r) : ring(r) {}

    bool is_zero() const { return coeffs.empty(); }
    void add_term(int h_exp, const QHElement& c);
    bool operator==(const HSeriesClassical&) const = default;
    std::string str() const;
};

/* Total square of x^i in the truncated polynomial ring GF(2)[x]/(x^{m+1}):
 * sum over j of C(i, j) x^{i+j} h^{2(i-j)}, terms with i + j > m discarded
 * by the truncation. Requires 0 <= i <= m. */
HSeriesClassical total_sq_projective(int i, const RingDescriptor& ring);

/* Classes of the n-sphere: GF(2) combination of the unit and the top class
 * x_n. Small enough that a pair of bits is the honest representation. */
struct SphereClass {
    int n = 1;
    bool unit = false;  // coefficient of 1
    bool top = false;   // coefficient of x_n

    bool is_zero() const { return !unit && !top; }
    bool operator==(const SphereClass&) const = default;
    std::string str() const;
};

struct SphereSeries {
    int n = 1;
    std::map<int, SphereClass> coeffs;  // h-exponent -> class

    bool operator==(const SphereSeries&) const = default;
    std::string str() const;
};

// Total square of the top class: the single term x_n h^n. Requires n >= 1.
SphereSeries sphere_sq(int n);

// Total square of an arbitrary sphere class: unit -> unit at h^0, top class
// -> x_n h^n, extended additively.
SphereSeries sphere_sq_class(const SphereClass& a);

}  // namespace qsteen

#endif
