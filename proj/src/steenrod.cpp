#include "qsteen/steenrod.hpp"

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

int binom_mod2(long long n, long long j) {
    if (n < 0 || j < 0)
        throw ExponentRangeError(fmt::format("binomial C({}, {}) needs n, j >= 0", n, j));
    return (j & n) == j ? 1 : 0;
}

void HSeriesClassical::add_term(int h_exp, const QHElement& c) {
    if (h_exp < 0)
        throw NegativeHExponentError(fmt::format("classical series term at h^{}", h_exp));
    require_same_ring(ring, c.ring());
    auto it = coeffs.find(h_exp);
    if (it == coeffs.end()) {
        if (!c.is_zero()) coeffs.emplace(h_exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

std::string HSeriesClassical::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [h, c] : coeffs) {
        if (!out.empty()) out += " + ";
        std::string part = c.coeffs().size() > 1 ? fmt::format("({})", c.str()) : c.str();
        if (h == 0)
            out += part;
        else
            out += fmt::format("{} h^{}", part, h);
    }
    return out;
}

HSeriesClassical total_sq_projective(int i, const RingDescriptor& ring) {
    if (i < 0 || i > ring.m)
        throw ExponentRangeError(
            fmt::format("total square of x^{} needs 0 <= power <= m = {}", i, ring.m));
    HSeriesClassical out(ring);
    for (int j = 0; j <= i; ++j) {
        if (i + j > ring.m) continue;  // killed by the truncation x^{m+1} = 0
        if (binom_mod2(i, j))
            out.add_term(2 * (i - j), QHElement::monomial(ring, i + j));
    }
    return out;
}

std::string SphereClass::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (unit) out = "1";
    if (top) out += (out.empty() ? "" : " + ") + fmt::format("x_{}", n);
    return out;
}

std::string SphereSeries::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [h, c] : coeffs) {
        if (!out.empty()) out += " + ";
        std::string part = c.unit && c.top ? fmt::format("({})", c.str()) : c.str();
        if (h == 0)
            out += part;
        else
            out += fmt::format("{} h^{}", part, h);
    }
    return out;
}

SphereSeries sphere_sq(int n) {
    if (n < 1) throw DimensionMismatchError(fmt::format("sphere dimension {} < 1", n));
    SphereSeries out{n, {}};
    out.coeffs.emplace(n, SphereClass{n, false, true});
    return out;
}

SphereSeries sphere_sq_class(const SphereClass& a) {
    if (a.n < 1) throw DimensionMismatchError(fmt::format("sphere dimension {} < 1", a.n));
    SphereSeries out{a.n, {}};
    if (a.unit) out.coeffs.emplace(0, SphereClass{a.n, true, false});
    if (a.top) out.coeffs.emplace(a.n, SphereClass{a.n, false, true});  // n >= 1: own slot
    return out;
}

}  // namespace qsteen
