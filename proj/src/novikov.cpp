#include "qsteen/novikov.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace {
std::atomic<int> g_exponent_guard{1 << 16};
}

int NovikovScalar::exponent_guard() { return g_exponent_guard.load(); }

void NovikovScalar::set_exponent_guard(int bound) {
    if (bound <= 0)
        throw ConfigError(fmt::format("exponent guard must be positive, got {}", bound));
    g_exponent_guard.store(bound);
}

void NovikovScalar::check_exponent(int exp) {
    int guard = exponent_guard();
    if (exp > guard || exp < -guard)
        throw ExponentOverflowError(
            fmt::format("T-exponent {} outside guard window [{}, {}]", exp, -guard, guard));
}

NovikovScalar NovikovScalar::monomial(int exp) {
    check_exponent(exp);
    return NovikovScalar{{exp}};
}

NovikovScalar NovikovScalar::from_exponents(std::vector<int> exps) {
    std::set<int> present;
    for (int e : exps) {
        check_exponent(e);
        // GF(2): a second occurrence cancels the first.
        auto [it, inserted] = present.insert(e);
        if (!inserted) present.erase(it);
    }
    return NovikovScalar{{present.begin(), present.end()}};
}

int NovikovScalar::monomial_exponent() const {
    if (!is_monomial())
        throw NotMonomialError(fmt::format("'{}' is not a T-monomial", str()));
    return exps_[0];
}

bool NovikovScalar::has_exponent(int exp) const {
    return std::binary_search(exps_.begin(), exps_.end(), exp);
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& rhs) const {
    // GF(2) addition of sorted exponent lists = symmetric difference.
    std::vector<int> out;
    out.reserve(exps_.size() + rhs.exps_.size());
    std::set_symmetric_difference(exps_.begin(), exps_.end(), rhs.exps_.begin(),
                                  rhs.exps_.end(), std::back_inserter(out));
    return NovikovScalar{std::move(out)};
}

NovikovScalar NovikovScalar::operator*(const NovikovScalar& rhs) const {
    std::set<int> acc;
    for (int a : exps_)
        for (int b : rhs.exps_) {
            int e = a + b;
            check_exponent(e);
            auto [it, inserted] = acc.insert(e);
            if (!inserted) acc.erase(it);
        }
    return NovikovScalar{{acc.begin(), acc.end()}};
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& rhs) {
    *this = *this + rhs;
    return *this;
}

NovikovScalar& NovikovScalar::operator*=(const NovikovScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

NovikovScalar NovikovScalar::frobenius() const {
    std::vector<int> out;
    out.reserve(exps_.size());
    for (int e : exps_) {
        check_exponent(2 * e);
        out.push_back(2 * e);  // doubling preserves strict ordering
    }
    return NovikovScalar{std::move(out)};
}

NovikovScalar NovikovScalar::monomial_inverse() const {
    return monomial(-monomial_exponent());
}

std::string NovikovScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e : exps_) {
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "T";
        else
            out += fmt::format("T^{}", e);
    }
    return out;
}

}  // namespace qsteen
