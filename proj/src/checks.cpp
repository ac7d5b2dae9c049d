#include "qsteen/checks.hpp"

#include <functional>
#include <random>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qsteen/cache.hpp"
#include "qsteen/errors.hpp"
#include "qsteen/kernel.hpp"
#include "qsteen/loop.hpp"
#include "qsteen/qsquare.hpp"
#include "qsteen/quotient.hpp"
#include "qsteen/report.hpp"

namespace qsteen {

namespace {

NovikovScalar random_scalar(std::mt19937& gen, int max_terms = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-4, 6);
    std::vector<int> exps;
    for (int i = count(gen); i > 0; --i) exps.push_back(exp(gen));
    return NovikovScalar::from_exponents(std::move(exps));
}

QHElement random_element(std::mt19937& gen, const RingDescriptor& ring) {
    QHElement out = QHElement::zero(ring);
    for (int e = 0; e <= ring.m; ++e)
        out += QHElement::monomial(ring, e, random_scalar(gen, 2));
    return out;
}

EqElement random_eq(std::mt19937& gen, const RingDescriptor& ring, int order) {
    EqElement out(ring, order);
    std::uniform_int_distribution<int> h(0, order);
    for (int t = 0; t < 6; ++t) out.add_term(h(gen), random_element(gen, ring));
    return out;
}

bool check_scalar_laws() {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        NovikovScalar a = random_scalar(gen), b = random_scalar(gen), c = random_scalar(gen);
        if (!(a + b == b + a)) return false;
        if (!((a + b) + c == a + (b + c))) return false;
        if (!(a * b == b * a)) return false;
        if (!((a * b) * c == a * (b * c))) return false;
        if (!(a * (b + c) == a * b + a * c)) return false;
        if (!((a + a).is_zero())) return false;
        if (!(a.frobenius() * b.frobenius() == (a * b).frobenius())) return false;
        if (!(a.frobenius() + b.frobenius() == (a + b).frobenius())) return false;
    }
    if (!(NovikovScalar::monomial(3) * NovikovScalar::monomial(3).monomial_inverse() ==
          NovikovScalar::one()))
        return false;
    try {
        NovikovScalar::from_exponents({0, 1}).monomial_inverse();
        return false;
    } catch (const NotMonomialError&) {
    }
    return true;
}

bool check_ring_laws() {
    std::mt19937 gen(12);
    for (auto [m, k] : std::vector<std::pair<int, int>>{{1, 1}, {4, 1}, {5, 3}, {3, 0}}) {
        RingDescriptor ring(m, k);
        // The defining relation itself.
        if (!(QHElement::monomial(ring, m + 1) ==
              QHElement::monomial(ring, k, NovikovScalar::monomial(1))))
            return false;
        for (int trial = 0; trial < 30; ++trial) {
            QHElement a = random_element(gen, ring), b = random_element(gen, ring),
                      c = random_element(gen, ring);
            if (!(a * b == b * a)) return false;
            if (!((a * b) * c == a * (b * c))) return false;
            if (!(a * (b + c) == a * b + a * c)) return false;
            if (!(a * QHElement::one(ring) == a)) return false;
        }
    }
    return true;
}

bool check_graded_mul() {
    std::mt19937 gen(13);
    RingDescriptor ring(4, 1);
    std::uniform_int_distribution<int> xe(0, 4), te(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        QHElement a = QHElement::monomial(ring, xe(gen), NovikovScalar::monomial(te(gen)));
        QHElement b = QHElement::monomial(ring, xe(gen), NovikovScalar::monomial(te(gen)));
        auto da = a.degree(), db = b.degree(), dab = (a * b).degree();
        if (!da || !db) return false;
        if (dab && *dab != *da + *db) return false;  // zero product has no degree
    }
    return true;
}

bool check_classical_squares() {
    // Digit criterion against the additive triangle recurrence.
    std::vector<std::vector<int>> pascal(17, std::vector<int>(17, 0));
    for (int n = 0; n <= 16; ++n) {
        pascal[n][0] = 1;
        for (int j = 1; j <= n; ++j)
            pascal[n][j] = (pascal[n - 1][j - 1] + (j <= n - 1 ? pascal[n - 1][j] : 0)) % 2;
    }
    for (int n = 0; n <= 16; ++n)
        for (int j = 0; j <= n; ++j)
            if (binom_mod2(n, j) != pascal[n][j]) return false;

    RingDescriptor r4(4, 1);
    HSeriesClassical sq1(r4);  // x^2 + x h^2
    sq1.add_term(0, QHElement::monomial(r4, 2));
    sq1.add_term(2, QHElement::monomial(r4, 1));
    if (!(total_sq_projective(1, r4) == sq1)) return false;

    RingDescriptor r2(2, 1);
    HSeriesClassical sq2(r2);  // truncation kills x^4
    sq2.add_term(4, QHElement::monomial(r2, 2));
    if (!(total_sq_projective(2, r2) == sq2)) return false;

    if (!(sphere_sq(3).coeffs.at(3) == SphereClass{3, false, true})) return false;
    return true;
}

bool check_square_closed_form() {
    for (int m = 1; m <= 8; ++m) {
        RingDescriptor ring(m, 1);
        if (!(qs_power(ring, m) == closed_form_qsxm(ring))) return false;
    }
    return true;
}

bool check_square_semilinearity() {
    for (int m = 1; m <= 8; ++m) {
        RingDescriptor ring(m, 1);
        QHElement xt = QHElement::monomial(ring, 1, NovikovScalar::monomial(1));
        if (!(qs_power(ring, m + 1) == qs_element(xt))) return false;
    }
    return true;
}

bool check_square_homogeneity() {
    for (int m = 1; m <= 8; ++m) {
        RingDescriptor ring(m, 1);
        for (int i = 0; i <= m + 1; ++i)
            if (!qs_power(ring, i).is_homogeneous_of(4 * i)) return false;
    }
    return true;
}

bool check_classical_limit() {
    for (int m = 1; m <= 8; ++m) {
        RingDescriptor ring(m, 1);
        for (int i = 0; 2 * i <= m; ++i)
            if (!(classical_part(qs_power(ring, i)) == total_sq_projective(i, ring)))
                return false;
    }
    return true;
}

bool check_square_table_m4() {
    RingDescriptor ring(4, 1);
    EqElement expected(ring);  // x^2 T + x^4 h^4 + x^3 h^6
    expected.add_term(0, QHElement::monomial(ring, 2, NovikovScalar::monomial(1)));
    expected.add_term(4, QHElement::monomial(ring, 4));
    expected.add_term(6, QHElement::monomial(ring, 3));
    return qs_power(ring, 3) == expected;
}

bool check_kernel_chain() {
    for (int m = 1; m <= 5; ++m) {
        RingDescriptor ring(m, 1);
        KernelChain chain = ker_r_power(ring);
        if (chain.stable_exponent != 1) return false;
        if (chain.basis.size() != 1) return false;
        if (!seidel_r(chain.generator).is_zero()) return false;

        ShQuotient q(ring);
        for (const auto& v : chain.basis)
            if (!q.project(v).is_zero()) return false;
        if (int(q.basis().size()) != m) return false;

        // Multiplication by x descends invertibly: T-monomial determinant.
        LambdaMatrix mat(m, m);
        for (int c = 0; c < m; ++c) {
            QHElement img = q.project(seidel_r(QHElement::monomial(ring, q.basis()[c])));
            for (int r = 0; r < m; ++r) mat.at(r, c) = img.coeff(q.basis()[r]);
        }
        if (!determinant(mat).is_monomial()) return false;
    }
    RingDescriptor r53(5, 3);
    KernelChain chain = ker_r_power(r53);
    if (chain.stable_exponent != 3 || chain.basis.size() != 3) return false;
    return true;
}

bool check_generator_square_identity() {
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; 2 * k <= m + 1; k += 2) {
            RingDescriptor ring(m, k);
            QHElement gen = QHElement::monomial(ring, m - k + 1) +
                            QHElement::monomial(ring, 0, NovikovScalar::monomial(1));
            if (!(gen * gen == gen.scaled(NovikovScalar::monomial(1)))) return false;
        }
    return true;
}

bool check_kernel_law() {
    std::mt19937 gen(14);
    for (int m = 1; m <= 4; ++m) {
        RingDescriptor ring(m, 1);
        EqQuotient q(ring, 32);
        QHElement kernel_gen = QHElement::monomial(ring, m) +
                               QHElement::monomial(ring, 0, NovikovScalar::monomial(1));
        for (int trial = 0; trial < 10; ++trial) {
            NovikovScalar lambda = random_scalar(gen);
            if (!q.member(qs_element(kernel_gen.scaled(lambda))).zero_through_order)
                return false;
        }
    }
    return true;
}

bool check_reduce_laws() {
    std::mt19937 gen(15);
    RingDescriptor ring(4, 1);
    EqQuotient q(ring, 32);
    for (int trial = 0; trial < 100; ++trial) {
        EqElement f = random_eq(gen, ring, 32), f2 = random_eq(gen, ring, 32);
        ReduceResult r = q.reduce(f);
        if (!(q.reduce(r.normal_form).normal_form == r.normal_form)) return false;
        if (!(q.reduce(f + f2).normal_form == r.normal_form + q.reduce(f2).normal_form))
            return false;
        for (const auto& [h, c] : r.normal_form.coeffs())
            if (!c.coeff(ring.m).is_zero()) return false;
        EqElement rebuilt = r.normal_form;
        for (const auto& [j, mu] : r.multipliers)
            rebuilt += q.generator().shifted_h(j).scaled(mu).truncated(32);
        if (!(rebuilt == f.truncated(32))) return false;
    }
    return true;
}

bool check_series_inverse() {
    std::mt19937 gen(16);
    RingDescriptor ring(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        EqElement a = random_eq(gen, ring, 16);
        // Force an invertible constant term.
        a += EqElement::term(ring, 0, QHElement::monomial(ring, 0, NovikovScalar::monomial(-2)) +
                                          a.coeff(0));
        EqElement prod = a * a.inverted(16);
        if (!equal_through(prod, EqElement::unit(ring), 16)) return false;
    }
    return true;
}

bool check_solver_conclusions() {
    for (int m = 2; m <= 4; ++m) {
        RingDescriptor ring(m, 1);
        SolverReport report = solve_req(ring);
        auto zero = QHElement::zero(ring);
        if (!(report.image(2, 0) == zero)) return false;
        for (int i = 1; i <= m; ++i)
            if (!(report.image(i + 2, i) == zero)) return false;
        if (!(report.image(2, m) == zero)) return false;
        if (!(report.image(1, m - 1) == QHElement::monomial(ring, m))) return false;
    }
    return true;
}

bool check_loop_prefixes() {
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i <= 5; ++i) {
            KnownPrefix py = ps_prefix(GeneratorClass::y_power(i), n);
            if (py.bound != 1) return false;
            if (!(py.known.at(0) == LoopRingElement::monomial(n, 0, 2 * i))) return false;
            LoopRingElement yi = LoopRingElement::monomial(n, 0, i);
            if (!(py.known.at(0) == yi * yi)) return false;  // h^0 law

            KnownPrefix pxy = ps_prefix(GeneratorClass::xy_power(i), n);
            if (pxy.bound != n + 1) return false;
            for (int r = 0; r < n; ++r)
                if (!pxy.known.at(r).is_zero()) return false;
            if (!(pxy.known.at(n) == LoopRingElement::monomial(n, 1, 2 * i))) return false;

            // Degree discipline of every known entry.
            GeneratorClass cls[] = {GeneratorClass::y_power(i), GeneratorClass::xy_power(i)};
            for (const auto& c : cls) {
                auto d = c.element(n).degree();
                if (!d) return false;
                for (const auto& [r, v] : ps_prefix(c, n).known)
                    if (!v.is_homogeneous_of(2 * *d - r)) return false;
            }

            if (nonvanishing(GeneratorClass::y_power(i), n) != Verdict::NonzeroCertified)
                return false;
            if (nonvanishing(GeneratorClass::xy_power(i), n) != Verdict::Unknown) return false;
        }
        if (nonvanishing(GeneratorClass::zero(), n) != Verdict::Zero) return false;

        // Zero-annihilation: a prefix of zeros propagates to zeros.
        KnownPrefix zeros;
        for (int r = 0; r < n; ++r) zeros.known.emplace(r, LoopRingElement::zero(n));
        zeros.bound = n;
        KnownPrefix combined = cartan_combine(LoopRingElement::monomial(n, 0, 2), zeros);
        if (combined.bound != n) return false;
        for (const auto& [r, v] : combined.known)
            if (!v.is_zero()) return false;
    }
    // Graded products.
    LoopRingElement a = LoopRingElement::monomial(3, 1, 2);
    LoopRingElement b = LoopRingElement::monomial(3, 0, 3);
    if ((a * b).degree() != a.degree().value() + b.degree().value()) return false;
    if (!(a * a).is_zero()) return false;
    return true;
}

bool check_serialization() {
    JobConfig oline;
    oline.space = Space::OLine;
    oline.m = 2;
    oline.k = 1;
    Report r1 = run_job(oline);
    if (!(parse_report(export_bytes(r1, OutputFormat::Json)) == r1)) return false;

    JobConfig tstar;
    tstar.space = Space::TStarSphere;
    tstar.n = 3;
    Report r2 = run_job(tstar);
    if (!(parse_report(export_bytes(r2, OutputFormat::Json)) == r2)) return false;

    if (!(export_bytes(Report{}, OutputFormat::Json) == "{}\n")) return false;
    return true;
}

bool check_membership_diagnostics() {
    RingDescriptor ring(4, 1);
    EqQuotient q(ring, 32);
    if (!q.member(q.generator()).zero_through_order) return false;
    MembershipVerdict xg = q.member(q.generator().scaled(QHElement::monomial(ring, 1)));
    return !xg.zero_through_order && xg.witness_h_degree == 2;
}

}  // namespace

int run_self_checks(std::ostream& out) {
    struct Check {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Check> checks = {
        {"scalar arithmetic laws", check_scalar_laws},
        {"ring relation and laws", check_ring_laws},
        {"graded multiplication", check_graded_mul},
        {"classical squares and digit criterion", check_classical_squares},
        {"square recursion matches closed form", check_square_closed_form},
        {"square semilinearity over T", check_square_semilinearity},
        {"square degree-doubling homogeneity", check_square_homogeneity},
        {"classical limit of squares", check_classical_limit},
        {"square table spot check (m = 4)", check_square_table_m4},
        {"kernel chain and quotient presentation", check_kernel_chain},
        {"kernel generator square identity", check_generator_square_identity},
        {"kernel law for scalar multiples", check_kernel_law},
        {"reduction laws and witnesses", check_reduce_laws},
        {"series inversion", check_series_inverse},
        {"solver conclusions", check_solver_conclusions},
        {"loop prefixes and verdicts", check_loop_prefixes},
        {"serialization round-trips", check_serialization},
        {"membership diagnostics", check_membership_diagnostics},
    };

    int failures = 0;
    for (const auto& check : checks) {
        bool ok = false;
        std::string note;
        try {
            ok = check.fn();
        } catch (const std::exception& e) {
            note = fmt::format(" ({})", e.what());
        }
        fmt::print(out, "{} {}{}\n", ok ? "ok  " : "FAIL", check.name, note);
        failures += !ok;
    }
    fmt::print(out, "{} of {} checks passed\n", int(checks.size()) - failures, checks.size());
    return failures;
}

}  // namespace qsteen
