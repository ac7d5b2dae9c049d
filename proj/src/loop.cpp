#include "qsteen/loop.hpp"

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace {

void require_sphere(int n) {
    if (n < 2)
        throw DimensionMismatchError(
            fmt::format("sphere dimension n = {} unsupported, need n >= 2", n));
}

}  // namespace

LoopRingElement::LoopRingElement(int n) : n_(n) { require_sphere(n); }

LoopRingElement LoopRingElement::monomial(int n, int x_exp, int y_exp) {
    LoopRingElement out(n);
    if (x_exp < 0 || y_exp < 0)
        throw ExponentRangeError(
            fmt::format("loop monomial x^{} y^{} has a negative exponent", x_exp, y_exp));
    if (x_exp >= 2) return out;  // x^2 = 0
    out.terms_.insert({x_exp, y_exp});
    return out;
}

LoopRingElement LoopRingElement::operator+(const LoopRingElement& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionMismatchError(
            fmt::format("loop ring sum across spheres n = {} and n = {}", n_, rhs.n_));
    LoopRingElement out(n_);
    for (const auto& t : terms_) out.terms_.insert(t);
    for (const auto& t : rhs.terms_) {
        auto [it, inserted] = out.terms_.insert(t);
        if (!inserted) out.terms_.erase(it);
    }
    return out;
}

LoopRingElement LoopRingElement::operator*(const LoopRingElement& rhs) const {
    if (n_ != rhs.n_)
        throw DimensionMismatchError(
            fmt::format("loop ring product across spheres n = {} and n = {}", n_, rhs.n_));
    LoopRingElement out(n_);
    for (const auto& [xa, ya] : terms_)
        for (const auto& [xb, yb] : rhs.terms_) {
            if (xa + xb >= 2) continue;  // killed by x^2 = 0
            auto [it, inserted] = out.terms_.insert({xa + xb, ya + yb});
            if (!inserted) out.terms_.erase(it);
        }
    return out;
}

std::optional<int> LoopRingElement::degree() const {
    std::optional<int> deg;
    for (const auto& [xe, ye] : terms_) {
        int d = n_ * xe + (1 - n_) * ye;
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

bool LoopRingElement::is_homogeneous_of(int d) const {
    for (const auto& [xe, ye] : terms_)
        if (n_ * xe + (1 - n_) * ye != d) return false;
    return true;
}

std::string LoopRingElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [xe, ye] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (xe == 1) mono = "x";
        if (ye == 1)
            mono += std::string(mono.empty() ? "" : " ") + "y";
        else if (ye > 1)
            mono += std::string(mono.empty() ? "" : " ") + fmt::format("y^{}", ye);
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

std::optional<LoopRingElement> KnownPrefix::entry(int r, int n) const {
    auto it = known.find(r);
    if (it != known.end()) return it->second;
    if (r >= bound && tail == Tail::Zero) return LoopRingElement::zero(n);
    return std::nullopt;
}

std::string KnownPrefix::str() const {
    std::string out;
    for (const auto& [r, v] : known) {
        if (!out.empty()) out += ", ";
        out += v.is_zero() ? "0" : fmt::format("{} @ h^{}", v.str(), r);
    }
    if (out.empty()) out = "(nothing known)";
    out += tail == Tail::Zero ? "; tail zero" : fmt::format("; unknown from h^{}", bound);
    return out;
}

GeneratorClass GeneratorClass::y_power(int i) {
    if (i < 0) throw ExponentRangeError(fmt::format("y-power {} < 0", i));
    return {Kind::YPower, i};
}

GeneratorClass GeneratorClass::xy_power(int i) {
    if (i < 0) throw ExponentRangeError(fmt::format("y-power {} < 0", i));
    return {Kind::XYPower, i};
}

LoopRingElement GeneratorClass::element(int n) const {
    switch (kind) {
        case Kind::YPower:
            return LoopRingElement::monomial(n, 0, i);
        case Kind::XYPower:
            return LoopRingElement::monomial(n, 1, i);
        case Kind::Zero:
            return LoopRingElement::zero(n);
    }
    throw UnsupportedClassError("unreachable generator kind");
}

std::string GeneratorClass::str() const {
    switch (kind) {
        case Kind::YPower:
            return i == 0 ? "1" : (i == 1 ? "y" : fmt::format("y^{}", i));
        case Kind::XYPower:
            return i == 0 ? "x" : (i == 1 ? "x y" : fmt::format("x y^{}", i));
        case Kind::Zero:
            return "0";
    }
    return "";
}

KnownPrefix cartan_combine(const LoopRingElement& a, const KnownPrefix& inner) {
    KnownPrefix out;
    if (inner.tail == KnownPrefix::Tail::Zero) {
        bool all_zero = true;
        for (const auto& [r, v] : inner.known) all_zero = all_zero && v.is_zero();
        if (all_zero) {
            // Every component annihilates 0, at every level: the result is 0.
            out.tail = KnownPrefix::Tail::Zero;
            return out;
        }
    }
    LoopRingElement a_sq = a * a;
    for (int r = 0;; ++r) {
        LoopRingElement acc = LoopRingElement::zero(a.n());
        bool blocked = false;
        for (int k = 0; k <= r; ++k) {
            auto b = inner.entry(k, a.n());
            if (!b) {
                blocked = true;  // inner value itself not known here
                break;
            }
            if (b->is_zero()) continue;  // every component annihilates 0
            if (r - k == 0) {
                acc = acc + a_sq * *b;
            } else {
                blocked = true;  // j > 0 component on nonzero input: no formula
                break;
            }
        }
        if (blocked) {
            out.bound = r;
            return out;
        }
        out.known.emplace(r, acc);
        out.bound = r + 1;
    }
}

KnownPrefix ps_prefix(const GeneratorClass& a, int n) {
    require_sphere(n);
    switch (a.kind) {
        case GeneratorClass::Kind::Zero: {
            KnownPrefix out;
            out.tail = KnownPrefix::Tail::Zero;
            return out;
        }
        case GeneratorClass::Kind::YPower: {
            // Only the leading chain-level entry, the literal square.
            KnownPrefix out;
            out.known.emplace(0, LoopRingElement::monomial(n, 0, 2 * a.i));
            out.bound = 1;
            return out;
        }
        case GeneratorClass::Kind::XYPower: {
            /* Prefix of x itself: the classical square of the sphere's top
             * class transported to chain level pins entries through h^n
             * (zeros below, x at h^n); corrections may start right after. */
            KnownPrefix x_prefix;
            for (int r = 0; r < n; ++r) x_prefix.known.emplace(r, LoopRingElement::zero(n));
            x_prefix.known.emplace(n, LoopRingElement::monomial(n, 1, 0));
            x_prefix.bound = n + 1;
            return cartan_combine(LoopRingElement::monomial(n, 0, a.i), x_prefix);
        }
    }
    throw UnsupportedClassError("unreachable generator kind");
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::NonzeroCertified:
            return "NonzeroCertified";
        case Verdict::Unknown:
            return "Unknown";
        case Verdict::Zero:
            return "Zero";
    }
    return "";
}

Verdict nonvanishing(const GeneratorClass& a, int n) {
    require_sphere(n);
    if (a.kind == GeneratorClass::Kind::Zero) return Verdict::Zero;
    KnownPrefix p = ps_prefix(a, n);
    auto h0 = p.entry(0, n);
    if (h0 && !h0->is_zero()) return Verdict::NonzeroCertified;
    return Verdict::Unknown;
}

}  // namespace qsteen
