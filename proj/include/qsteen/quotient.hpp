#ifndef QSTEEN_QUOTIENT_HPP
#define QSTEEN_QUOTIENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsteen/qsquare.hpp"

namespace qsteen {

/* Result of reducing a series against the quotient generator g: the normal
 * form (all coefficients confined to the span of 1..x^{m-1}) together with
 * the multiplier of h^j g used at each step, so that
 *     input = normal_form + (sum_j multipliers[j] h^j) * g
 * holds exactly through the truncation order. */
struct ReduceResult {
    EqElement normal_form;
    std::map<int, NovikovScalar> multipliers;
};

/* Outcome of a membership test against the ideal generated by g: either the
 * normal form vanished through the truncation order (with the multiplier
 * sequence as the certificate), or the first h-degree where it did not. */
struct MembershipVerdict {
    bool zero_through_order = false;
    int order = 0;
    int witness_h_degree = -1;  // set when the verdict is negative
    std::map<int, NovikovScalar> multipliers;

    std::string str() const;
};

/* The quotient of the equivariant theory of the twist-1 ring by the ideal
 * h-series multiples of g = QS(x^m + T). g has h^0 coefficient T (x^m + T)
 * and is homogeneous of degree 4m; both facts are checked when the quotient
 * is built. Only the module structure of the quotient is provided: a ring
 * structure is not defined here, and reduce(x * g) is exposed by the report
 * layer as the diagnostic showing why a naive one would not descend.
 *
 * Reduction works h-degree by h-degree: the h^j coefficient splits uniquely
 * as a + lambda (x^m + T) with a in span{1..x^{m-1}}, and lambda T^{-1} h^j g
 * is subtracted. Only the monomial T is ever inverted. */
class EqQuotient {
public:
    explicit EqQuotient(RingDescriptor ring, int truncation_order = 32);

    const RingDescriptor& ring() const { return ring_; }
    int truncation_order() const { return order_; }
    const EqElement& generator() const { return g_; }

    ReduceResult reduce(const EqElement& f) const;
    MembershipVerdict member(const EqElement& f) const;

    /* The square induced on the quotient: lift a basis-span element 1..x^{m-1}
     * canonically, apply the quantum square, reduce. NotInBasisError when the
     * input touches x^m. */
    EqElement ps(const QHElement& s) const;

private:
    RingDescriptor ring_;
    int order_;
    EqElement g_;
};

/* One matrix entry of the unknown h^{2l}-component maps r_l in the expansion
 * of the equivariant continuation map. The grading pins each allowed entry
 * (from x^a to x^b) to a single T-power; entries whose degree equation has
 * no solution with T-exponent >= 0 are forced to zero outright. Level 0 is
 * the known part (multiplication by x^2) and is reported as determined. */
struct SolverEntry {
    int level;       // l in r_l
    int from;        // source basis exponent a
    int to;          // target basis exponent b
    int t_exponent;  // the pinned T-power (when not forced to zero)
    enum class Status { ForcedZero, Determined, Undetermined } status;
    NovikovScalar value;  // meaningful when Determined

    bool operator==(const SolverEntry&) const = default;
    std::string str() const;
};

struct SolverReport {
    RingDescriptor ring;
    int max_level = 0;
    std::vector<SolverEntry> entries;  // ordered by (level, from, to)
    int determined = 0;                // counts exclude level 0 and forced zeros
    int undetermined = 0;

    bool operator==(const SolverReport&) const = default;
    const SolverEntry* find(int level, int from, int to) const;
    /* Full image r_level(x^from) when every entry of that column is pinned
     * down; nullopt as soon as one entry is undetermined. */
    std::optional<QHElement> image(int level, int from) const;
};

/* Set up and solve the constraints on the r_l: compatibility with the
 * quantum square on powers of x and annihilation of the quotient generator,
 * expanded h-degree by h-degree into an exact linear system over the
 * scalars. Elimination only divides by T-monomial pivots; rows that offer no
 * monomial pivot are kept aside and their variables stay undetermined. */
SolverReport solve_req(const RingDescriptor& ring);

}  // namespace qsteen

#endif
