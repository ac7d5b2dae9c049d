#ifndef QSTEEN_LOOP_HPP
#define QSTEEN_LOOP_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace qsteen {

/* Element of the ring GF(2)[x]/(x^2) (x) GF(2)[y] attached to the n-sphere
 * (n >= 2), graded by |x| = n, |y| = 1 - n. Terms are (x-exponent, y-exponent)
 * pairs with GF(2) coefficients; the relation x^2 = 0 is enforced on
 * construction, so x-exponents stay in {0, 1}. */
class LoopRingElement {
public:
    explicit LoopRingElement(int n);

    static LoopRingElement zero(int n) { return LoopRingElement(n); }
    static LoopRingElement one(int n) { return monomial(n, 0, 0); }
    static LoopRingElement monomial(int n, int x_exp, int y_exp);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::set<std::pair<int, int>>& terms() const { return terms_; }

    LoopRingElement operator+(const LoopRingElement& rhs) const;
    LoopRingElement operator*(const LoopRingElement& rhs) const;

    // Common degree n * x_exp + (1 - n) * y_exp, nullopt when mixed or zero.
    std::optional<int> degree() const;
    bool is_homogeneous_of(int d) const;

    bool operator==(const LoopRingElement&) const = default;

    std::string str() const;  // "x y^4", "1 + y^2", ...

private:
    int n_;
    std::set<std::pair<int, int>> terms_;  // (x-exp, y-exp), x-exp in {0,1}
};

/* Leading entries of an h-series established at chain level: entries for
 * 0 <= r < bound are asserted; beyond the bound nothing is claimed, unless
 * tail says the whole remainder vanishes. */
struct KnownPrefix {
    enum class Tail { Unknown, Zero };

    std::map<int, LoopRingElement> known;  // every r in [0, bound) present
    int bound = 0;
    Tail tail = Tail::Unknown;

    // Entry at r: a known value, zero past a Zero tail, nullopt otherwise.
    std::optional<LoopRingElement> entry(int r, int n) const;
    bool operator==(const KnownPrefix&) const = default;
    std::string str() const;
};

/* The square is only controlled for the monomial classes y^i and x y^i
 * (x itself being x y^0) plus the zero class; sums are out of scope because
 * the cross terms of the square are not pinned down at prefix level. */
struct GeneratorClass {
    enum class Kind { YPower, XYPower, Zero };

    Kind kind = Kind::Zero;
    int i = 0;  // y-exponent for the two monomial kinds

    static GeneratorClass y_power(int i);
    static GeneratorClass x() { return xy_power(0); }
    static GeneratorClass xy_power(int i);
    static GeneratorClass zero() { return {}; }

    LoopRingElement element(int n) const;
    std::string str() const;
};

/* Prefix of the square of a generator class:
 *   - y^i: the h^0 entry is the literal square y^{2i}; nothing further.
 *   - x y^i (including x): entries assembled from the prefix of x through
 *     the Cartan combination; zeros below h^n, x y^{2i} at h^n, and the
 *     first uncontrolled correction term right after.
 * Requires n >= 2. */
KnownPrefix ps_prefix(const GeneratorClass& a, int n);

/* The Cartan combination: entry r of the square of (second-slot class a)
 * times the class behind `inner` is sum over k <= r of the j = r - k
 * component applied to (a; inner entry k). Components with j > 0 on nonzero
 * input are uncontrolled and end the prefix; zero input annihilates every
 * component; the j = 0 component is a^2 * input. */
KnownPrefix cartan_combine(const LoopRingElement& a, const KnownPrefix& inner);

enum class Verdict { NonzeroCertified, Unknown, Zero };

std::string verdict_str(Verdict v);

/* NonzeroCertified exactly when the h^0 entry of the prefix is nonzero (a
 * nonzero h^0 part survives to the equivariant theory); Unknown when every
 * known entry sits at positive h-degree and could in principle be corrected
 * away; Zero for the zero class. */
Verdict nonvanishing(const GeneratorClass& a, int n);

}  // namespace qsteen

#endif
