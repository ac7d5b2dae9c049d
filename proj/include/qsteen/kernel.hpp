#ifndef QSTEEN_KERNEL_HPP
#define QSTEEN_KERNEL_HPP

#include <map>
#include <vector>

#include "qsteen/linalg.hpp"
#include "qsteen/ring.hpp"

namespace qsteen {

// Matrix of multiplication by x on the monomial basis 1, x, ..., x^m
// (column a holds the coordinates of x * x^a).
LambdaMatrix seidel_matrix(const RingDescriptor& ring);

/* The ascending chain ker r <= ker r^2 <= ... for r = multiplication by x,
 * computed exactly. stable_exponent is the least j >= 0 with
 * ker r^j = ker r^{j+1}; once two consecutive kernels agree the chain is
 * constant, so this is the whole story. The distinguished generator
 * x^{m-k+1} + T is returned alongside (zero in the degenerate case k = 0,
 * where multiplication by x is invertible). */
struct KernelChain {
    QHElement generator;
    int stable_exponent = 0;
    std::vector<int> dims;          // dim ker r^j for j = 0..stable_exponent+1
    std::vector<QHElement> basis;   // Lambda-basis of ker r^{stable_exponent}
};

KernelChain ker_r_power(const RingDescriptor& ring);

/* Quotient of the ring by the span of the stable kernel, presented through
 * rewrite rules derived from a reduced echelon form of the kernel basis
 * (pivot = highest x-exponent, always with a monomial coefficient here).
 * project() is Lambda-linear, fixes the residual basis monomials, and sends
 * exactly the kernel span to zero. For k = 1 the basis is 1, ..., x^{m-1}
 * and the single rule is x^m -> T. */
class ShQuotient {
public:
    explicit ShQuotient(RingDescriptor ring);

    const RingDescriptor& ring() const { return ring_; }
    const KernelChain& kernel() const { return chain_; }
    const std::vector<int>& basis() const { return basis_; }
    const std::map<int, QHElement>& rules() const { return rules_; }

    QHElement project(const QHElement& a) const;

private:
    RingDescriptor ring_;
    KernelChain chain_;
    std::vector<int> basis_;          // residual x-exponents, ascending
    std::map<int, QHElement> rules_;  // pivot x-exponent -> replacement
};

}  // namespace qsteen

#endif
