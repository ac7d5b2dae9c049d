#include "qsteen/quotient.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

std::string MembershipVerdict::str() const {
    if (zero_through_order) return fmt::format("ZeroThroughOrder({})", order);
    return fmt::format("NonMember(witness h^{})", witness_h_degree);
}

EqQuotient::EqQuotient(RingDescriptor ring, int truncation_order)
    : ring_(ring), order_(truncation_order), g_(EqElement::zero(ring)) {
    if (ring.k != 1)
        throw UnsupportedTwistError(
            fmt::format("quotient implemented for twist k = 1 only, ring is {}", ring.str()));
    if (truncation_order < 0)
        throw ConfigError(fmt::format("truncation order {} < 0", truncation_order));

    g_ = qs_element(QHElement::monomial(ring_, ring_.m) +
                    QHElement::monomial(ring_, 0, NovikovScalar::monomial(1)));

    // Construction-time sanity: the two structural facts reduction relies on.
    QHElement expected_c0 =
        (QHElement::monomial(ring_, ring_.m) +
         QHElement::monomial(ring_, 0, NovikovScalar::monomial(1)))
            .scaled(NovikovScalar::monomial(1));
    if (!(g_.coeff(0) == expected_c0))
        throw InconsistentSystemError(
            fmt::format("quotient generator has h^0 coefficient '{}'", g_.coeff(0).str()));
    if (!g_.is_homogeneous_of(4 * ring_.m))
        throw InconsistentSystemError("quotient generator is not homogeneous of degree 4m");
}

ReduceResult EqQuotient::reduce(const EqElement& f) const {
    require_same_ring(ring_, f.ring());
    ReduceResult out{f.truncated(order_), {}};
    const NovikovScalar t_inv = NovikovScalar::monomial(-1);
    for (int j = 0; j <= order_; ++j) {
        // Split the h^j coefficient as a + lambda (x^m + T); lambda is just
        // the x^m component, and subtracting lambda T^{-1} h^j g clears it
        // without touching lower h-degrees (g starts at h^0).
        NovikovScalar lambda = out.normal_form.coeff(j).coeff(ring_.m);
        if (lambda.is_zero()) continue;
        NovikovScalar mu = lambda * t_inv;
        out.normal_form += g_.shifted_h(j).scaled(mu).truncated(order_);
        out.multipliers.emplace(j, std::move(mu));
    }
    return out;
}

MembershipVerdict EqQuotient::member(const EqElement& f) const {
    ReduceResult r = reduce(f);
    MembershipVerdict out;
    out.order = order_;
    out.multipliers = std::move(r.multipliers);
    if (r.normal_form.is_zero()) {
        out.zero_through_order = true;
    } else {
        out.witness_h_degree = r.normal_form.coeffs().begin()->first;
    }
    return out;
}

EqElement EqQuotient::ps(const QHElement& s) const {
    require_same_ring(ring_, s.ring());
    for (const auto& [e, c] : s.coeffs())
        if (e > ring_.m - 1)
            throw NotInBasisError(fmt::format(
                "'{}' lies outside the quotient basis span 1..x^{}", s.str(), ring_.m - 1));
    return reduce(qs_element(s)).normal_form;
}

std::string SolverEntry::str() const {
    switch (status) {
        case Status::ForcedZero:
            return "0 (grading)";
        case Status::Undetermined:
            return fmt::format("? * T^{}", t_exponent);
        case Status::Determined:
            return value.is_zero() ? "0" : value.str();
    }
    return "";
}

const SolverEntry* SolverReport::find(int level, int from, int to) const {
    for (const auto& e : entries)
        if (e.level == level && e.from == from && e.to == to) return &e;
    return nullptr;
}

std::optional<QHElement> SolverReport::image(int level, int from) const {
    QHElement img = QHElement::zero(ring);
    for (const auto& e : entries) {
        if (e.level != level || e.from != from) continue;
        if (e.status == SolverEntry::Status::Undetermined) return std::nullopt;
        if (e.status == SolverEntry::Status::Determined)
            img += QHElement::monomial(ring, e.to, e.value);
    }
    return img;
}

namespace {

/* Sparse linear equation over the scalars: sum coeffs[var] * value[var] = rhs.
 * Variables are the GF(2) bits behind the allowed solver entries; by the
 * grading every coefficient in one row is the same T-monomial, but the
 * elimination below does not rely on that. */
struct Row {
    std::map<int, NovikovScalar> coeffs;
    NovikovScalar rhs;

    bool empty() const { return coeffs.empty(); }
    void add(const Row& other, const NovikovScalar& factor) {
        for (const auto& [v, c] : other.coeffs) {
            auto it = coeffs.find(v);
            if (it == coeffs.end()) {
                NovikovScalar prod = c * factor;
                if (!prod.is_zero()) coeffs.emplace(v, std::move(prod));
            } else {
                it->second += c * factor;
                if (it->second.is_zero()) coeffs.erase(it);
            }
        }
        rhs += other.rhs * factor;
    }
    void scale(const NovikovScalar& factor) {
        for (auto& [v, c] : coeffs) c *= factor;
        rhs *= factor;
        std::erase_if(coeffs, [](const auto& p) { return p.second.is_zero(); });
    }
};

class RowSolver {
public:
    void add_row(Row r) { pending_.push_back(std::move(r)); }

    /* Reduced elimination with T-monomial pivots only. Rows that never offer
     * a monomial pivot stay pending and leave their variables undetermined;
     * an empty row with a nonzero right side is a contradiction. */
    void eliminate() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = pending_.begin(); it != pending_.end();) {
                Row& r = *it;
                for (const auto& [v, solved_row] : pivots_) {
                    auto hit = r.coeffs.find(v);
                    if (hit != r.coeffs.end()) {
                        // Stored pivot rows have the pivot itself stripped, so
                        // drop it here and fold in the equivalent combination.
                        NovikovScalar f = hit->second;
                        r.coeffs.erase(hit);
                        r.add(solved_row, f);
                    }
                }
                if (r.empty()) {
                    if (!r.rhs.is_zero())
                        throw InconsistentSystemError(
                            fmt::format("contradictory constraint 0 = {}", r.rhs.str()));
                    it = pending_.erase(it);
                    progress = true;
                    continue;
                }
                auto pivot = std::find_if(r.coeffs.begin(), r.coeffs.end(),
                                          [](const auto& p) { return p.second.is_monomial(); });
                if (pivot == r.coeffs.end()) {
                    ++it;  // no exact division possible; retry after more pivots land
                    continue;
                }
                int var = pivot->first;
                r.scale(pivot->second.monomial_inverse());
                r.coeffs.erase(var);
                for (auto& [v, solved_row] : pivots_) {
                    auto hit = solved_row.coeffs.find(var);
                    if (hit != solved_row.coeffs.end()) {
                        NovikovScalar f = hit->second;
                        solved_row.coeffs.erase(hit);
                        // var = rhs + sum(others): substitute into the solved row.
                        Row subst = r;
                        subst.scale(f);
                        solved_row.add(subst, NovikovScalar::one());
                    }
                }
                pivots_.emplace(var, std::move(r));
                it = pending_.erase(it);
                progress = true;
            }
        }
    }

    // Solved value of a variable, when pinned to a constant.
    std::optional<NovikovScalar> value(int var) const {
        auto it = pivots_.find(var);
        if (it == pivots_.end() || !it->second.coeffs.empty()) return std::nullopt;
        return it->second.rhs;
    }

private:
    std::vector<Row> pending_;
    std::map<int, Row> pivots_;  // var -> row with that pivot removed
};

}  // namespace

SolverReport solve_req(const RingDescriptor& ring) {
    if (ring.k != 1)
        throw UnsupportedTwistError(
            fmt::format("constraint solver implemented for twist k = 1, ring is {}", ring.str()));
    const int m = ring.m;
    const int max_level = m + 3;
    const int t_deg = ring.t_degree();

    SolverReport report{ring, max_level, {}, 0, 0};

    // The pinned T-power of entry (l, a -> b), if the grading allows one.
    auto allowed_exponent = [&](int level, int from, int to) -> std::optional<int> {
        int num = 2 * from + 4 - 2 * level - 2 * to;
        if (num < 0 || num % t_deg != 0) return std::nullopt;
        return num / t_deg;
    };

    std::map<std::tuple<int, int, int>, int> var_of;
    for (int level = 1; level <= max_level; ++level)
        for (int from = 0; from <= m; ++from)
            for (int to = 0; to <= m; ++to)
                if (allowed_exponent(level, from, to))
                    var_of.emplace(std::tuple{level, from, to}, int(var_of.size()));

    RowSolver solver;
    const QHElement x_sq = QHElement::monomial(ring, 2);

    auto add_constraint = [&](const EqElement& source, const EqElement& target) {
        int max_h = source.coeffs().empty() ? 0 : source.coeffs().rbegin()->first;
        if (!target.coeffs().empty())
            max_h = std::max(max_h, target.coeffs().rbegin()->first);
        for (int d = 0; d <= max_h + 2 * max_level; ++d) {
            // Known level-0 part moved to the right side.
            QHElement rhs = target.coeff(d) + x_sq * source.coeff(d);
            for (int to = 0; to <= m; ++to) {
                Row row;
                row.rhs = rhs.coeff(to);
                for (int level = 1; level <= max_level; ++level) {
                    int j = d - 2 * level;
                    if (j < 0) break;
                    const QHElement src_j = source.coeff(j);
                    for (const auto& [from, gamma] : src_j.coeffs()) {
                        auto t_exp = allowed_exponent(level, from, to);
                        if (!t_exp) continue;
                        auto it = row.coeffs.find(var_of.at({level, from, to}));
                        NovikovScalar c = gamma * NovikovScalar::monomial(*t_exp);
                        if (it == row.coeffs.end())
                            row.coeffs.emplace(var_of.at({level, from, to}), c);
                        else {
                            it->second += c;
                            if (it->second.is_zero()) row.coeffs.erase(it);
                        }
                    }
                }
                if (!row.empty() || !row.rhs.is_zero()) solver.add_row(std::move(row));
            }
        }
    };

    for (int i = 0; i <= m; ++i)
        add_constraint(qs_power(ring, i), qs_power(ring, i + 1));
    EqElement g = qs_element(QHElement::monomial(ring, m) +
                             QHElement::monomial(ring, 0, NovikovScalar::monomial(1)));
    add_constraint(g, EqElement::zero(ring));

    solver.eliminate();

    // Level 0 is multiplication by x^2, reported as already determined.
    for (int from = 0; from <= m; ++from) {
        QHElement img = x_sq * QHElement::monomial(ring, from);
        for (int to = 0; to <= m; ++to) {
            NovikovScalar v = img.coeff(to);
            report.entries.push_back(
                {0, from, to, v.is_zero() ? 0 : v.exponents()[0],
                 SolverEntry::Status::Determined, v});
        }
    }
    for (int level = 1; level <= max_level; ++level)
        for (int from = 0; from <= m; ++from)
            for (int to = 0; to <= m; ++to) {
                auto t_exp = allowed_exponent(level, from, to);
                if (!t_exp) {
                    report.entries.push_back({level, from, to, 0,
                                              SolverEntry::Status::ForcedZero,
                                              NovikovScalar::zero()});
                    continue;
                }
                auto bit = solver.value(var_of.at({level, from, to}));
                if (!bit) {
                    report.entries.push_back({level, from, to, *t_exp,
                                              SolverEntry::Status::Undetermined,
                                              NovikovScalar::zero()});
                    ++report.undetermined;
                    continue;
                }
                if (!bit->is_zero() && !bit->is_one())
                    throw InconsistentSystemError(fmt::format(
                        "entry r_{}(x^{}) -> x^{} solved to non-bit '{}'", level, from, to,
                        bit->str()));
                NovikovScalar value = bit->is_zero()
                                          ? NovikovScalar::zero()
                                          : NovikovScalar::monomial(*t_exp);
                report.entries.push_back(
                    {level, from, to, *t_exp, SolverEntry::Status::Determined, value});
                ++report.determined;
            }
    return report;
}

}  // namespace qsteen
