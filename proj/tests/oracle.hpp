#ifndef QSTEEN_TESTS_ORACLE_HPP
#define QSTEEN_TESTS_ORACLE_HPP

#include <vector>

#include "qsteen/quotient.hpp"

/* Second, independently coded normal-form computation used to cross-check
 * EqQuotient::reduce. The h-truncated slice is flattened into one dense
 * vector of scalars indexed by (h-degree, x-exponent); the columns spanning
 * the ideal (the h-shifts of the generator) are swept in ascending h-order
 * by plain Gaussian elimination, dividing only by the T-monomial pivot each
 * column carries at its (shift, x^m) slot. Nothing is shared with the
 * engine's reduction routine beyond scalar arithmetic. */
namespace qsteen_tests {

inline qsteen::EqElement oracle_normal_form(const qsteen::EqElement& f,
                                            const qsteen::EqQuotient& q) {
    const int m = q.ring().m;
    const int order = q.truncation_order();
    const int width = m + 1;
    auto flatten = [&](const qsteen::EqElement& e) {
        std::vector<qsteen::NovikovScalar> v(size_t(order + 1) * width);
        for (const auto& [h, c] : e.coeffs()) {
            if (h > order) continue;
            for (const auto& [xe, s] : c.coeffs()) v[size_t(h) * width + xe] = s;
        }
        return v;
    };

    std::vector<qsteen::NovikovScalar> vec = flatten(f);
    std::vector<std::vector<qsteen::NovikovScalar>> columns;
    for (int j = 0; j <= order; ++j) columns.push_back(flatten(q.generator().shifted_h(j)));

    for (int j = 0; j <= order; ++j) {
        const auto& col = columns[j];
        const qsteen::NovikovScalar& pivot = col[size_t(j) * width + m];
        const qsteen::NovikovScalar& target = vec[size_t(j) * width + m];
        if (target.is_zero()) continue;
        qsteen::NovikovScalar factor = target * pivot.monomial_inverse();
        for (size_t idx = 0; idx < vec.size(); ++idx)
            vec[idx] = vec[idx] + factor * col[idx];
    }

    qsteen::EqElement out(q.ring(), order);
    for (int h = 0; h <= order; ++h)
        for (int xe = 0; xe <= m; ++xe) {
            const auto& s = vec[size_t(h) * width + xe];
            if (!s.is_zero())
                out.add_term(h, qsteen::QHElement::monomial(q.ring(), xe, s));
        }
    return out;
}

}  // namespace qsteen_tests

#endif
