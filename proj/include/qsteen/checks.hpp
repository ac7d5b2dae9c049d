#ifndef QSTEEN_CHECKS_HPP
#define QSTEEN_CHECKS_HPP

#include <ostream>

namespace qsteen {

/* The built-in invariant suite behind `qsteen check`: algebraic laws of
 * every layer, the closed-form and semilinearity identities, kernel and
 * reduction laws on seeded pseudo-random inputs, solver conclusions, loop
 * prefixes, and serialization round-trips. Prints one line per check and
 * returns the number of failures (0 = all green). Deterministic: fixed
 * seeds, no time or environment dependence. */
int run_self_checks(std::ostream& out);

}  // namespace qsteen

#endif
