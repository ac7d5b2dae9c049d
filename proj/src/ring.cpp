#include "qsteen/ring.hpp"

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

RingDescriptor::RingDescriptor(int m_, int k_) : m(m_), k(k_) {
    if (m < 1) throw ConfigError(fmt::format("ring requires m >= 1, got m = {}", m));
    if (k < 0 || k > m)
        throw ConfigError(fmt::format("ring requires 0 <= k <= m, got k = {} (m = {})", k, m));
}

std::string RingDescriptor::str() const { return fmt::format("(m = {}, k = {})", m, k); }

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (!(a == b))
        throw RingMismatchError(
            fmt::format("ring mismatch: {} vs {}", a.str(), b.str()));
}

QHElement QHElement::monomial(RingDescriptor ring, int x_exp, NovikovScalar coeff) {
    return from_terms(ring, {{x_exp, std::move(coeff)}});
}

QHElement QHElement::from_terms(RingDescriptor ring,
                                const std::map<int, NovikovScalar>& raw) {
    QHElement out(ring);
    const int step = ring.m + 1 - ring.k;  // x-exponent drop per substitution
    for (const auto& [e, c] : raw) {
        if (e < 0)
            throw ExponentRangeError(fmt::format("negative x-exponent {}", e));
        if (c.is_zero()) continue;
        // Apply x^{m+1} = T x^k until the exponent is in range.
        int exp = e;
        NovikovScalar scalar = c;
        while (exp > ring.m) {
            exp -= step;
            scalar *= NovikovScalar::monomial(1);
        }
        auto it = out.coeffs_.find(exp);
        if (it == out.coeffs_.end()) {
            out.coeffs_.emplace(exp, std::move(scalar));
        } else {
            it->second += scalar;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

NovikovScalar QHElement::coeff(int x_exp) const {
    auto it = coeffs_.find(x_exp);
    return it == coeffs_.end() ? NovikovScalar::zero() : it->second;
}

QHElement QHElement::operator+(const QHElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    QHElement out = *this;
    for (const auto& [e, c] : rhs.coeffs_) {
        auto it = out.coeffs_.find(e);
        if (it == out.coeffs_.end()) {
            out.coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

QHElement& QHElement::operator+=(const QHElement& rhs) {
    *this = *this + rhs;
    return *this;
}

QHElement QHElement::operator*(const QHElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    std::map<int, NovikovScalar> raw;
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) {
            NovikovScalar prod = ca * cb;
            auto it = raw.find(ea + eb);
            if (it == raw.end())
                raw.emplace(ea + eb, std::move(prod));
            else
                it->second += prod;
        }
    return from_terms(ring_, raw);
}

QHElement QHElement::scaled(const NovikovScalar& s) const {
    QHElement out(ring_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : coeffs_) {
        NovikovScalar prod = c * s;
        if (!prod.is_zero()) out.coeffs_.emplace(e, std::move(prod));
    }
    return out;
}

QHElement QHElement::frobenius_coeffs() const {
    QHElement out(ring_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, c.frobenius());
    return out;
}

std::optional<int> QHElement::degree() const {
    std::optional<int> deg;
    for (const auto& [e, c] : coeffs_)
        for (int t : c.exponents()) {
            int d = ring_.x_degree() * e + ring_.t_degree() * t;
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;  // inhomogeneous
        }
    return deg;  // nullopt for zero as well: no common degree to report
}

bool QHElement::is_homogeneous_of(int d) const {
    for (const auto& [e, c] : coeffs_)
        for (int t : c.exponents())
            if (ring_.x_degree() * e + ring_.t_degree() * t != d) return false;
    return true;
}

std::string QHElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_)
        for (int t : c.exponents()) {
            if (!out.empty()) out += " + ";
            std::string mono;
            if (e == 1)
                mono = "x";
            else if (e > 1)
                mono = fmt::format("x^{}", e);
            if (t != 0) {
                if (!mono.empty()) mono += " ";
                mono += t == 1 ? "T" : fmt::format("T^{}", t);
            }
            out += mono.empty() ? "1" : mono;
        }
    return out;
}

QHElement seidel_r(const QHElement& a) {
    return QHElement::monomial(a.ring(), 1) * a;
}

}  // namespace qsteen
