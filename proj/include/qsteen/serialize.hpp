#ifndef QSTEEN_SERIALIZE_HPP
#define QSTEEN_SERIALIZE_HPP

#include <json.hpp>

#include "qsteen/loop.hpp"
#include "qsteen/qsquare.hpp"
#include "qsteen/quotient.hpp"
#include "qsteen/ring.hpp"

namespace qsteen {

/* Canonical JSON forms. Scalars are {"T": [[exponent, 1], ...]} with
 * exponents ascending (the 1 is the GF(2) coefficient; an omitted or empty
 * list is zero). Ring elements are {"ring": {"m":..,"k":..},
 * "terms": [{"x":a,"T":b}, ...]}, equivariant elements add an "h" key per
 * term and an optional "truncation_order". Term lists are emitted in the
 * fixed (h, x, T) ascending order so identical values always produce
 * identical bytes. Parsers accept any term list (duplicates cancel) and
 * throw FormatError on schema violations. */

using Json = nlohmann::ordered_json;

Json scalar_to_json(const NovikovScalar& s);
NovikovScalar scalar_from_json(const Json& j);

Json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const Json& j);

Json qh_to_json(const QHElement& a);
QHElement qh_from_json(const Json& j);

Json eq_to_json(const EqElement& a);
EqElement eq_from_json(const Json& j);

Json solver_to_json(const SolverReport& r);
SolverReport solver_from_json(const Json& j);

Json loop_element_to_json(const LoopRingElement& a);
LoopRingElement loop_element_from_json(const Json& j, int n);

Json prefix_to_json(const KnownPrefix& p);
KnownPrefix prefix_from_json(const Json& j, int n);

}  // namespace qsteen

#endif
