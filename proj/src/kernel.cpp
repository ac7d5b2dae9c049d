#include "qsteen/kernel.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

LambdaMatrix seidel_matrix(const RingDescriptor& ring) {
    const int n = ring.m + 1;
    LambdaMatrix out(n, n);
    for (int a = 0; a < n; ++a) {
        QHElement img = seidel_r(QHElement::monomial(ring, a));
        for (const auto& [e, c] : img.coeffs()) out.at(e, a) = c;
    }
    return out;
}

namespace {

QHElement vec_to_element(const RingDescriptor& ring, const LambdaVec& v) {
    std::map<int, NovikovScalar> terms;
    for (int e = 0; e < int(v.size()); ++e)
        if (!v[e].is_zero()) terms.emplace(e, v[e]);
    return QHElement::from_terms(ring, terms);
}

}  // namespace

KernelChain ker_r_power(const RingDescriptor& ring) {
    KernelChain out{QHElement::zero(ring), 0, {}, {}};
    const LambdaMatrix r = seidel_matrix(ring);
    const int n = ring.m + 1;

    // Walk dim ker r^j upward until it repeats; the chain is nested, so equal
    // consecutive dimensions mean equal kernels from there on.
    LambdaMatrix power = LambdaMatrix::identity(n);
    out.dims.push_back(n - rank(power));  // j = 0
    for (int j = 0;; ++j) {
        power = power * r;
        out.dims.push_back(n - rank(power));
        if (out.dims[j] == out.dims[j + 1]) {
            out.stable_exponent = j;
            break;
        }
        if (j > n)
            throw InconsistentSystemError("kernel chain failed to stabilize");
    }

    for (const auto& v : kernel_basis(r.pow(out.stable_exponent)))
        out.basis.push_back(vec_to_element(ring, v));

    if (ring.k >= 1) {
        auto gen = QHElement::monomial(ring, ring.m - ring.k + 1) +
                   QHElement::monomial(ring, 0, NovikovScalar::monomial(1));
        out.generator = gen;
    }
    return out;
}

ShQuotient::ShQuotient(RingDescriptor ring) : ring_(ring), chain_(ker_r_power(ring)) {
    // Echelonize the kernel basis with pivots at the highest x-exponent,
    // producing rewrite rules x^pivot -> lower-order replacement.
    std::vector<QHElement> pending = chain_.basis;
    while (true) {
        // Substitute the rules gathered so far into every pending vector.
        for (auto& v : pending) v = project(v);
        std::erase_if(pending, [](const QHElement& v) { return v.is_zero(); });
        if (pending.empty()) break;

        auto best = pending.end();
        int best_exp = -1;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            int top = it->coeffs().rbegin()->first;
            if (top > best_exp && it->coeffs().rbegin()->second.is_monomial()) {
                best_exp = top;
                best = it;
            }
        }
        if (best == pending.end())
            throw InconsistentSystemError(
                "kernel echelonization: no monomial leading coefficient");

        NovikovScalar lead = best->coeffs().rbegin()->second;
        QHElement rest = *best + QHElement::monomial(ring_, best_exp, lead);
        QHElement replacement = rest.scaled(lead.monomial_inverse());
        pending.erase(best);
        // Keep earlier replacements free of the new pivot.
        for (auto& [p, r] : rules_) {
            NovikovScalar c = r.coeff(best_exp);
            if (!c.is_zero())
                r += QHElement::monomial(ring_, best_exp, c) + replacement.scaled(c);
        }
        rules_.emplace(best_exp, std::move(replacement));
    }

    for (int e = 0; e <= ring_.m; ++e)
        if (!rules_.count(e)) basis_.push_back(e);
}

QHElement ShQuotient::project(const QHElement& a) const {
    require_same_ring(ring_, a.ring());
    QHElement out = QHElement::zero(ring_);
    for (const auto& [e, c] : a.coeffs()) {
        auto rule = rules_.find(e);
        if (rule == rules_.end())
            out += QHElement::monomial(ring_, e, c);
        else
            out += rule->second.scaled(c);
    }
    return out;
}

}  // namespace qsteen
