#include "qsteen/serialize.hpp"

#include <fmt/format.h>

#include "qsteen/errors.hpp"

namespace qsteen {

namespace {

const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(fmt::format("missing key '{}' in {}", key, j.dump()));
    return j.at(key);
}

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw FormatError(fmt::format("{} must be an integer, got {}", what, j.dump()));
    return j.get<int>();
}

}  // namespace

Json scalar_to_json(const NovikovScalar& s) {
    Json terms = Json::array();
    for (int e : s.exponents()) terms.push_back(Json::array({e, 1}));
    Json out = Json::object();
    out["T"] = std::move(terms);
    return out;
}

NovikovScalar scalar_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError(fmt::format("scalar must be an object, got {}", j.dump()));
    if (!j.contains("T")) return NovikovScalar::zero();
    const Json& terms = j.at("T");
    if (!terms.is_array()) throw FormatError("scalar key 'T' must hold an array");
    std::vector<int> exps;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2)
            throw FormatError(fmt::format("scalar term must be [exponent, 1], got {}", t.dump()));
        int coeff = require_int(t.at(1), "scalar term coefficient");
        if (coeff == 0) continue;
        if (coeff != 1)
            throw FormatError(fmt::format("GF(2) coefficient must be 0 or 1, got {}", coeff));
        exps.push_back(require_int(t.at(0), "scalar term exponent"));
    }
    return NovikovScalar::from_exponents(std::move(exps));
}

Json ring_to_json(const RingDescriptor& ring) {
    Json out = Json::object();
    out["m"] = ring.m;
    out["k"] = ring.k;
    return out;
}

RingDescriptor ring_from_json(const Json& j) {
    return RingDescriptor(require_int(require_key(j, "m"), "ring field m"),
                          require_int(require_key(j, "k"), "ring field k"));
}

Json qh_to_json(const QHElement& a) {
    Json out = Json::object();
    out["ring"] = ring_to_json(a.ring());
    Json terms = Json::array();
    for (const auto& [e, c] : a.coeffs())
        for (int t : c.exponents()) {
            Json term = Json::object();
            term["x"] = e;
            term["T"] = t;
            terms.push_back(std::move(term));
        }
    out["terms"] = std::move(terms);
    return out;
}

QHElement qh_from_json(const Json& j) {
    RingDescriptor ring = ring_from_json(require_key(j, "ring"));
    const Json& terms = require_key(j, "terms");
    if (!terms.is_array()) throw FormatError("element key 'terms' must hold an array");
    QHElement out = QHElement::zero(ring);
    for (const Json& t : terms) {
        int x = require_int(require_key(t, "x"), "term key x");
        int texp = require_int(require_key(t, "T"), "term key T");
        out += QHElement::monomial(ring, x, NovikovScalar::monomial(texp));
    }
    return out;
}

Json eq_to_json(const EqElement& a) {
    Json out = Json::object();
    out["ring"] = ring_to_json(a.ring());
    Json terms = Json::array();
    for (const auto& [h, c] : a.coeffs())
        for (const auto& [e, s] : c.coeffs())
            for (int t : s.exponents()) {
                Json term = Json::object();
                term["x"] = e;
                term["T"] = t;
                term["h"] = h;
                terms.push_back(std::move(term));
            }
    out["terms"] = std::move(terms);
    if (a.order()) out["truncation_order"] = *a.order();
    return out;
}

EqElement eq_from_json(const Json& j) {
    RingDescriptor ring = ring_from_json(require_key(j, "ring"));
    std::optional<int> order;
    if (j.contains("truncation_order"))
        order = require_int(j.at("truncation_order"), "truncation_order");
    const Json& terms = require_key(j, "terms");
    if (!terms.is_array()) throw FormatError("element key 'terms' must hold an array");
    EqElement out(ring, order);
    for (const Json& t : terms) {
        int x = require_int(require_key(t, "x"), "term key x");
        int texp = require_int(require_key(t, "T"), "term key T");
        int h = require_int(require_key(t, "h"), "term key h");
        out.add_term(h, QHElement::monomial(ring, x, NovikovScalar::monomial(texp)));
    }
    return out;
}

namespace {

std::string status_str(SolverEntry::Status s) {
    switch (s) {
        case SolverEntry::Status::ForcedZero:
            return "forced_zero";
        case SolverEntry::Status::Determined:
            return "determined";
        case SolverEntry::Status::Undetermined:
            return "undetermined";
    }
    return "";
}

SolverEntry::Status status_from_str(const std::string& s) {
    if (s == "forced_zero") return SolverEntry::Status::ForcedZero;
    if (s == "determined") return SolverEntry::Status::Determined;
    if (s == "undetermined") return SolverEntry::Status::Undetermined;
    throw FormatError(fmt::format("unknown solver entry status '{}'", s));
}

}  // namespace

Json solver_to_json(const SolverReport& r) {
    Json out = Json::object();
    out["ring"] = ring_to_json(r.ring);
    out["max_level"] = r.max_level;
    out["determined"] = r.determined;
    out["undetermined"] = r.undetermined;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je = Json::object();
        je["level"] = e.level;
        je["from"] = e.from;
        je["to"] = e.to;
        je["t_exponent"] = e.t_exponent;
        je["status"] = status_str(e.status);
        je["value"] = scalar_to_json(e.value);
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    return out;
}

SolverReport solver_from_json(const Json& j) {
    SolverReport out{ring_from_json(require_key(j, "ring")),
                     require_int(require_key(j, "max_level"), "max_level"),
                     {},
                     require_int(require_key(j, "determined"), "determined"),
                     require_int(require_key(j, "undetermined"), "undetermined")};
    for (const Json& je : require_key(j, "entries")) {
        SolverEntry e{require_int(require_key(je, "level"), "entry level"),
                      require_int(require_key(je, "from"), "entry from"),
                      require_int(require_key(je, "to"), "entry to"),
                      require_int(require_key(je, "t_exponent"), "entry t_exponent"),
                      status_from_str(require_key(je, "status").get<std::string>()),
                      scalar_from_json(require_key(je, "value"))};
        out.entries.push_back(std::move(e));
    }
    return out;
}

Json loop_element_to_json(const LoopRingElement& a) {
    Json terms = Json::array();
    for (const auto& [xe, ye] : a.terms()) terms.push_back(Json::array({xe, ye}));
    return terms;
}

LoopRingElement loop_element_from_json(const Json& j, int n) {
    if (!j.is_array()) throw FormatError("loop element must be an array of [x, y] pairs");
    LoopRingElement out = LoopRingElement::zero(n);
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw FormatError(fmt::format("loop term must be [x, y], got {}", t.dump()));
        out = out + LoopRingElement::monomial(n, require_int(t.at(0), "loop term x"),
                                              require_int(t.at(1), "loop term y"));
    }
    return out;
}

Json prefix_to_json(const KnownPrefix& p) {
    Json out = Json::object();
    Json known = Json::array();
    for (const auto& [r, v] : p.known) {
        Json entry = Json::object();
        entry["h"] = r;
        entry["terms"] = loop_element_to_json(v);
        known.push_back(std::move(entry));
    }
    out["known"] = std::move(known);
    out["bound"] = p.bound;
    out["tail"] = p.tail == KnownPrefix::Tail::Zero ? "zero" : "unknown";
    return out;
}

KnownPrefix prefix_from_json(const Json& j, int n) {
    KnownPrefix out;
    for (const Json& entry : require_key(j, "known"))
        out.known.emplace(require_int(require_key(entry, "h"), "prefix entry h"),
                          loop_element_from_json(require_key(entry, "terms"), n));
    out.bound = require_int(require_key(j, "bound"), "prefix bound");
    std::string tail = require_key(j, "tail").get<std::string>();
    if (tail == "zero")
        out.tail = KnownPrefix::Tail::Zero;
    else if (tail == "unknown")
        out.tail = KnownPrefix::Tail::Unknown;
    else
        throw FormatError(fmt::format("unknown prefix tail '{}'", tail));
    return out;
}

}  // namespace qsteen
