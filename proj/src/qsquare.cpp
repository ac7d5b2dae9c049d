#include "qsteen/qsquare.hpp"

#include <mutex>

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace {

std::optional<int> combined_order(const std::optional<int>& a, const std::optional<int>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void require_twist_one(const RingDescriptor& ring, const char* what) {
    if (ring.k != 1)
        throw UnsupportedTwistError(
            fmt::format("{} implemented for twist k = 1 only, ring is {}", what, ring.str()));
}

}  // namespace

EqElement EqElement::unit(RingDescriptor ring) {
    return term(ring, 0, QHElement::one(ring));
}

EqElement EqElement::term(RingDescriptor ring, int h_exp, QHElement c) {
    EqElement out(ring);
    out.add_term(h_exp, c);
    return out;
}

QHElement EqElement::coeff(int h_exp) const {
    auto it = coeffs_.find(h_exp);
    return it == coeffs_.end() ? QHElement::zero(ring_) : it->second;
}

void EqElement::add_term(int h_exp, const QHElement& c) {
    if (h_exp < 0)
        throw NegativeHExponentError(
            fmt::format("term '{}' at negative h-exponent {}", c.str(), h_exp));
    require_same_ring(ring_, c.ring());
    if (c.is_zero()) return;
    if (order_ && h_exp > *order_) return;  // beyond the known window
    auto it = coeffs_.find(h_exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(h_exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

EqElement EqElement::operator+(const EqElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    EqElement out(ring_, combined_order(order_, rhs.order_));
    for (const auto& [h, c] : coeffs_) out.add_term(h, c);
    for (const auto& [h, c] : rhs.coeffs_) out.add_term(h, c);
    return out;
}

EqElement& EqElement::operator+=(const EqElement& rhs) {
    *this = *this + rhs;
    return *this;
}

EqElement EqElement::operator*(const EqElement& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    EqElement out(ring_, combined_order(order_, rhs.order_));
    for (const auto& [ha, ca] : coeffs_) {
        if (out.order_ && ha > *out.order_) break;
        for (const auto& [hb, cb] : rhs.coeffs_) {
            if (out.order_ && ha + hb > *out.order_) break;
            out.add_term(ha + hb, ca * cb);
        }
    }
    return out;
}

EqElement EqElement::scaled(const NovikovScalar& s) const {
    EqElement out(ring_, order_);
    for (const auto& [h, c] : coeffs_) out.add_term(h, c.scaled(s));
    return out;
}

EqElement EqElement::scaled(const QHElement& c) const {
    EqElement out(ring_, order_);
    for (const auto& [h, a] : coeffs_) out.add_term(h, a * c);
    return out;
}

EqElement EqElement::shifted_h(int j) const {
    if (j < 0) throw NegativeHExponentError(fmt::format("h-shift by {}", j));
    EqElement out(ring_, order_);
    for (const auto& [h, c] : coeffs_) out.add_term(h + j, c);
    return out;
}

EqElement EqElement::truncated(std::optional<int> order) const {
    EqElement out(ring_, combined_order(order_, order));
    for (const auto& [h, c] : coeffs_) out.add_term(h, c);
    return out;
}

EqElement EqElement::inverted(int order) const {
    if (order < 0) throw NegativeHExponentError(fmt::format("inversion order {}", order));
    QHElement c0 = coeff(0);
    bool unit_monomial = c0.coeffs().size() == 1 && c0.coeffs().begin()->first == 0 &&
                         c0.coeffs().begin()->second.is_monomial();
    if (!unit_monomial)
        throw NotInvertibleError(fmt::format(
            "h^0 coefficient '{}' is not a T-monomial multiple of the unit", c0.str()));

    NovikovScalar lead_inv = c0.coeffs().begin()->second.monomial_inverse();
    std::optional<int> out_order = combined_order(order_, order);
    // a = lead * (1 + s) with s of positive h-valuation, so
    // a^{-1} = lead^{-1} * sum s^l, and s^l dies past the order.
    EqElement s = scaled(lead_inv).truncated(out_order) + EqElement::unit(ring_).truncated(out_order);
    EqElement acc = EqElement::unit(ring_).truncated(out_order);
    EqElement power = acc;
    while (true) {
        power = power * s;
        if (power.is_zero()) break;
        acc += power;
    }
    return acc.scaled(lead_inv);
}

std::optional<int> EqElement::degree() const {
    std::optional<int> deg;
    for (const auto& [h, c] : coeffs_)
        for (const auto& [e, s] : c.coeffs())
            for (int t : s.exponents()) {
                int d = ring_.x_degree() * e + ring_.t_degree() * t + h;
                if (!deg)
                    deg = d;
                else if (*deg != d)
                    return std::nullopt;
            }
    return deg;
}

bool EqElement::is_homogeneous_of(int d) const {
    for (const auto& [h, c] : coeffs_)
        if (!c.is_homogeneous_of(d - h)) return false;
    return true;
}

std::string EqElement::str() const {
    std::string out;
    for (const auto& [h, c] : coeffs_)
        for (const auto& [e, s] : c.coeffs())
            for (int t : s.exponents()) {
                if (!out.empty()) out += " + ";
                std::string mono;
                if (e == 1)
                    mono = "x";
                else if (e > 1)
                    mono = fmt::format("x^{}", e);
                if (t != 0)
                    mono += std::string(mono.empty() ? "" : " ") +
                            (t == 1 ? "T" : fmt::format("T^{}", t));
                if (h != 0)
                    mono += std::string(mono.empty() ? "" : " ") +
                            (h == 1 ? "h" : fmt::format("h^{}", h));
                out += mono.empty() ? "1" : mono;
            }
    if (out.empty()) out = "0";
    if (order_) out += fmt::format(" + O(h^{})", *order_ + 1);
    return out;
}

bool equal_through(const EqElement& a, const EqElement& b, int order) {
    if (!(a.ring() == b.ring())) return false;
    for (int h = 0; h <= order; ++h)
        if (!(a.coeff(h) == b.coeff(h))) return false;
    return true;
}

EqElement qs_correction(const RingDescriptor& ring, int i) {
    require_twist_one(ring, "qs_correction");
    if (i < 1 || i > ring.m)
        throw ExponentRangeError(
            fmt::format("qs_correction step {} outside 1..m = {}", i, ring.m));
    EqElement out(ring);
    if (binom_mod2(i, ring.m - i)) {
        int h = 2 + 4 * i - 2 * ring.m;
        // C(i, m-i) odd forces m-i <= i by the digit criterion, hence h >= 2.
        if (h < 0)
            throw NegativeHExponentError(
                fmt::format("correction at step {} produced h-exponent {}", i, h));
        out.add_term(h, QHElement::monomial(ring, 1, NovikovScalar::monomial(1)));
    }
    if (i == ring.m)
        out.add_term(2, QHElement::monomial(ring, 1, NovikovScalar::monomial(2)));
    return out;
}

EqElement qs_power(const RingDescriptor& ring, int i) {
    require_twist_one(ring, "qs_power");
    if (i < 0 || i > ring.m + 1)
        throw ExponentRangeError(
            fmt::format("qs_power of x^{} outside 0..m+1 = {}", i, ring.m + 1));

    static std::mutex memo_mutex;
    static std::map<std::pair<int, int>, EqElement> memo;
    {
        std::scoped_lock lock(memo_mutex);
        auto it = memo.find({ring.m, i});
        if (it != memo.end()) return it->second;
    }

    EqElement out(ring);
    if (i == 0) {
        out = EqElement::unit(ring);
    } else if (i == 1) {
        QHElement x = QHElement::monomial(ring, 1);
        out = EqElement::term(ring, 0, x * x) + EqElement::term(ring, 2, x);
    } else {
        out = qs_power(ring, i - 1) * qs_power(ring, 1) + qs_correction(ring, i - 1);
    }

    std::scoped_lock lock(memo_mutex);
    memo.emplace(std::pair{ring.m, i}, out);
    return out;
}

EqElement qs_element(const QHElement& f) {
    require_twist_one(f.ring(), "qs_element");
    EqElement out(f.ring());
    for (const auto& [a, s] : f.coeffs())
        out += qs_power(f.ring(), a).scaled(s.frobenius());
    return out;
}

EqElement closed_form_qsxm(const RingDescriptor& ring) {
    require_twist_one(ring, "closed_form_qsxm");
    EqElement out(ring);
    out.add_term(2 * ring.m, QHElement::monomial(ring, ring.m));
    for (int i = 1; i <= ring.m; ++i)
        out.add_term(2 * ring.m - 2 * i,
                     QHElement::monomial(ring, i, NovikovScalar::monomial(1)));
    return out;
}

HSeriesClassical classical_part(const EqElement& a) {
    HSeriesClassical out(a.ring());
    for (const auto& [h, c] : a.coeffs()) {
        QHElement t0(a.ring());
        for (const auto& [e, s] : c.coeffs())
            if (s.has_exponent(0)) t0 += QHElement::monomial(a.ring(), e);
        out.add_term(h, t0);
    }
    return out;
}

}  // namespace qsteen
