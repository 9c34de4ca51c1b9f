#include "polycss/css.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "polycss/polycyclic.hpp"

namespace polycss {

std::string default_label(int q_base) { return std::to_string(q_base) + "^2"; }

QuantumParams QuantumParams::make(int q_base, int n, int k, int d, bool d_exact) {
    if (!is_supported_field_order(q_base))
        throw Error(ErrorKind::InvalidParams, "unsupported field order " + std::to_string(q_base));
    if (n < 1 || k < 0 || k > n || d < 1)
        throw Error(ErrorKind::InvalidParams, "parameters [[" + std::to_string(n) + "," + std::to_string(k) +
                                                  "," + std::to_string(d) + "]] out of range");
    QuantumParams p;
    p.q_base = q_base;
    p.label = default_label(q_base);
    p.n = n;
    p.k = k;
    p.d = d;
    p.d_exact = d_exact;
    (void)singleton_defect(p);
    return p;
}

std::string QuantumParams::brackets() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]_" +
           (label.empty() ? default_label(q_base) : label);
}

int singleton_defect(const QuantumParams& p) {
    const int defect = p.n - p.k - 2 * (p.d - 1);
    if (defect < 0)
        throw Error(ErrorKind::InvalidParams,
                    "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) +
                        "]] violates the quantum Singleton bound k <= n - 2(d-1)");
    return defect;
}

bool is_mds(const QuantumParams& p) { return singleton_defect(p) == 0; }

QuantumParams css_construct(const LinearCode& c1, const LinearCode& c2perp, const EnumOptions& opts) {
    if (!contains(c1, c2perp))
        throw Error(ErrorKind::Precondition, "CSS precondition failed: C2perp is not contained in C1");
    const int q = c1.field().q();
    const int n = c1.length();
    const int k = c1.dimension() - c2perp.dimension();
    if (k == 0) throw Error(ErrorKind::InvalidParams, "degenerate CSS code: C1 = C2perp gives k = 0");

    try {
        const WeightEnumerator a1 = exact_weight_enumerator(c1, opts);
        const WeightEnumerator a2perp = exact_weight_enumerator(c2perp, opts);
        const WeightEnumerator a2 = macwilliams(a2perp, q, n, c2perp.dimension());
        const WeightEnumerator a1perp = macwilliams(a1, q, n, c1.dimension());
        const int d = std::min(relative_min_weight(a1, a2perp), relative_min_weight(a2, a1perp));
        return QuantumParams::make(q, n, k, d, true);
    } catch (const BudgetExceeded&) {
        const int d = std::min(min_distance(c1, opts).d, min_distance(dual(c2perp), opts).d);
        return QuantumParams::make(q, n, k, std::max(d, 1), false);
    }
}

namespace {

void require_same_alphabet(const QuantumParams& a, const QuantumParams& b) {
    if (a.q_base != b.q_base)
        throw Error(ErrorKind::FieldMismatch, "codes over different alphabets: " + a.brackets() +
                                                  " and " + b.brackets());
}

QuantumParams derived(const QuantumParams& from, int n, int k, int d, const std::string& rule,
                      const std::string& sources) {
    QuantumParams p = QuantumParams::make(from.q_base, n, k, d, false);
    p.label = from.label;
    p.witness = {{"rule", rule}, {"from", sources}};
    return p;
}

}  // namespace

QuantumParams combine_theorem2(const QuantumParams& p1, const QuantumParams& p2) {
    require_same_alphabet(p1, p2);
    if (p2.k > p1.n)
        throw Error(ErrorKind::Precondition, "combination needs k2 <= n1");
    const int d = std::max(1, std::min(p1.d, p1.d + p2.d - p2.k));
    return derived(p1, p1.n + p2.n - p2.k, p1.k, d, "Thm2", p1.brackets() + " + " + p2.brackets());
}

QuantumParams propagate_extend(const QuantumParams& p, int steps) {
    if (steps < 1) throw Error(ErrorKind::Precondition, "extension needs at least one step");
    return derived(p, p.n + steps, p.k, p.d, "E", p.brackets());
}

QuantumParams propagate_puncture(const QuantumParams& p) {
    if (p.n < 2 || p.d < 2) throw Error(ErrorKind::Precondition, "puncturing needs n >= 2 and d >= 2");
    return derived(p, p.n - 1, p.k, p.d - 1, "P", p.brackets());
}

QuantumParams propagate_subcode(const QuantumParams& p) {
    if (p.k < 1) throw Error(ErrorKind::Precondition, "subcode needs k >= 1");
    return derived(p, p.n, p.k - 1, p.d, "subcode", p.brackets());
}

QuantumParams propagate_shorten(const QuantumParams& p, bool enable_subcode_alias) {
    if (!enable_subcode_alias)
        throw Error(ErrorKind::Precondition,
                    "no parameter rule is given for shortening; enable the subcode alias explicitly");
    QuantumParams out = propagate_subcode(p);
    out.witness["rule"] = "S(subcode)";
    return out;
}

QuantumParams direct_sum_quantum(const QuantumParams& a, const QuantumParams& b) {
    require_same_alphabet(a, b);
    return derived(a, a.n + b.n, a.k + b.k, std::min(a.d, b.d), "DS", a.brackets() + " + " + b.brackets());
}

const char* to_string(Convention c) {
    switch (c) {
        case Convention::SecondGeneratesC2: return "C2";
        case Convention::SecondGeneratesC2perp: return "C2perp";
    }
    return "?";
}

std::optional<Convention> parse_convention(std::string_view text) {
    for (Convention c : {Convention::SecondGeneratesC2, Convention::SecondGeneratesC2perp})
        if (text == to_string(c)) return c;
    return std::nullopt;
}

namespace {

bool looks_algebraic(std::string_view s) { return s.find_first_of("xX+-^") != std::string_view::npos; }

std::vector<PolyReading> readings(const std::string& text, Field field) {
    if (looks_algebraic(text)) {
        Poly p = parse_expression(text, field);
        return {{format_expression(p), std::move(p)}};
    }
    return poly_parse_variants(text, field);
}

std::string describe_claim(const RowReport& r) {
    auto part = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); };
    return "[[" + part(r.claimed_n) + "," + part(r.claimed_k) + "," + part(r.claimed_d) + "]]";
}

std::string attempt_status(const RowAttempt& a) {
    if (a.matches) return a.params && !a.params->d_exact ? "bound" : "match";
    if (a.params) return "mismatch";
    return a.contained ? "incomplete" : "not-nested";
}

}  // namespace

RowReport verify_table_row(const RowInput& in) {
    const Field field = field_of_order(in.q);
    RowReport report;
    report.q = in.q;
    report.claimed_n = in.n;
    report.claimed_k = in.k;
    report.claimed_d = in.d;

    const Poly raw_modulus = parse_poly_any(in.modulus, field);
    if (raw_modulus.degree() < 1) throw Error(ErrorKind::Parse, "modulus must have positive degree");
    const AmbientRing ring = AmbientRing::from_modulus(raw_modulus);
    report.modulus = format_expression(ring.modulus());
    report.modulus_degree = ring.length();
    if (!raw_modulus.is_monic()) report.flags.push_back("modulus scaled to be monic");

    const int n = in.n.value_or(ring.length());
    const bool in_ring = n == ring.length();
    if (!in_ring)
        report.flags.push_back("claimed n = " + std::to_string(n) + " differs from modulus degree " +
                               std::to_string(ring.length()) + "; codes built as shift spans at length " +
                               std::to_string(n));

    const auto g1_readings = readings(in.g1, field);
    const auto second_readings = readings(in.second, field);
    std::vector<Convention> conventions;
    if (in.convention)
        conventions = {*in.convention};
    else
        conventions = {Convention::SecondGeneratesC2, Convention::SecondGeneratesC2perp};

    {
        const Poly& g1 = g1_readings.front().poly;
        const Poly& second = second_readings.front().poly;
        if (!divides(g1, ring.modulus())) report.flags.push_back("g1 as printed does not divide the modulus");
        if (!divides(second, ring.modulus())) report.flags.push_back("second as printed does not divide the modulus");
        if (!second.is_zero() && !g1.is_zero() && divides(g1, second))
            report.flags.push_back("g1 divides second as printed");
    }

    bool matched = false;
    for (Convention conv : conventions) {
        for (const PolyReading& g1r : g1_readings) {
            for (const PolyReading& sr : second_readings) {
                RowAttempt a;
                a.convention = conv;
                a.g1_tokens = g1r.tokens;
                a.second_tokens = sr.tokens;
                a.n = n;
                const Poly& g1 = g1r.poly;
                const Poly& second = sr.poly;
                if (g1.is_zero() || second.is_zero() || g1.degree() >= n) {
                    a.note = "polynomial does not fit length " + std::to_string(n);
                    report.attempts.push_back(std::move(a));
                    continue;
                }
                const bool g1_divides = in_ring && divides(g1, ring.modulus());
                const LinearCode c1 = g1_divides ? ideal_code(g1, ring) : span_code(g1, n);

                std::optional<LinearCode> c2perp;
                switch (conv) {
                    case Convention::SecondGeneratesC2:
                        if (in_ring && divides(second, ring.modulus())) {
                            c2perp = ideal_code(ring.modulus() / second.monic(), ring);
                        } else if (second.degree() < n) {
                            c2perp = dual(span_code(second, n));
                            a.note = "C2perp is the Euclidean dual of the span";
                        }
                        break;
                    case Convention::SecondGeneratesC2perp:
                        if (second.degree() < n) c2perp = span_code(second, n);
                        break;
                }
                if (!c2perp) {
                    if (a.note.empty()) a.note = "second polynomial does not fit length " + std::to_string(n);
                    report.attempts.push_back(std::move(a));
                    continue;
                }
                a.dim_c1 = c1.dimension();
                a.dim_c2perp = c2perp->dimension();
                a.k = a.dim_c1 - a.dim_c2perp;
                a.contained = contains(c1, *c2perp);
                const bool worth_distance = a.contained && a.k >= 1 && !matched &&
                                            (!in.k || *in.k == a.k);
                if (worth_distance) {
                    QuantumParams p = css_construct(c1, *c2perp, in.enumeration);
                    p.witness = {{"modulus", report.modulus},
                                 {"g1", g1r.tokens},
                                 {"second", sr.tokens},
                                 {"convention", to_string(conv)}};
                    if (!in_ring) p.witness["length"] = std::to_string(n);
                    const bool nk = (!in.n || *in.n == p.n) && (!in.k || *in.k == p.k);
                    const bool d_ok = !in.d || (p.d_exact ? *in.d == p.d : p.d <= *in.d);
                    a.matches = nk && d_ok;
                    if (!p.d_exact) a.note = "distance is a lower bound (enumeration over budget)";
                    a.params = std::move(p);
                    matched = matched || a.matches;
                } else if (a.contained && a.k == 0) {
                    a.note = "k = 0";
                }
                report.attempts.push_back(std::move(a));
            }
        }
    }

    auto pick = [&](auto pred) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < report.attempts.size(); ++i)
            if (pred(report.attempts[i])) return i;
        return std::nullopt;
    };
    report.best = pick([](const RowAttempt& a) { return a.matches; });
    if (!report.best) report.best = pick([](const RowAttempt& a) { return a.params.has_value(); });
    if (!report.best) report.best = pick([](const RowAttempt& a) { return a.contained; });
    if (!report.best && !report.attempts.empty()) report.best = 0;
    return report;
}

std::string RowReport::to_text() const {
    std::ostringstream out;
    out << "row " << describe_claim(*this) << " over GF(" << q << "), modulus " << modulus << " (degree "
        << modulus_degree << ")\n";
    for (const auto& f : flags) out << "flag: " << f << "\n";
    for (const RowAttempt& a : attempts) {
        out << "attempt " << to_string(a.convention) << " g1=" << a.g1_tokens << " second=" << a.second_tokens
            << ": n=" << a.n << " dim C1=" << a.dim_c1 << " dim C2perp=" << a.dim_c2perp
            << " contained=" << (a.contained ? "yes" : "no") << " k=" << a.k;
        if (a.params) out << " d=" << a.params->d << (a.params->d_exact ? " (exact)" : " (lower bound)");
        out << " " << attempt_status(a);
        if (!a.note.empty()) out << " [" << a.note << "]";
        out << "\n";
    }
    if (const RowAttempt* b = best_attempt(); b && b->params)
        out << "status: " << attempt_status(*b) << " " << b->params->brackets() << " under "
            << to_string(b->convention) << "\n";
    else
        out << "status: mismatch (no nested pair with positive k)\n";
    return out.str();
}

std::string RowReport::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["q"] = q;
    j["modulus"] = modulus;
    j["modulus_degree"] = modulus_degree;
    j["claimed"] = {{"n", claimed_n ? ordered_json(*claimed_n) : ordered_json(nullptr)},
                    {"k", claimed_k ? ordered_json(*claimed_k) : ordered_json(nullptr)},
                    {"d", claimed_d ? ordered_json(*claimed_d) : ordered_json(nullptr)}};
    j["flags"] = flags;
    ordered_json arr = ordered_json::array();
    for (const RowAttempt& a : attempts) {
        ordered_json o;
        o["convention"] = to_string(a.convention);
        o["g1"] = a.g1_tokens;
        o["second"] = a.second_tokens;
        o["n"] = a.n;
        o["dim_c1"] = a.dim_c1;
        o["dim_c2perp"] = a.dim_c2perp;
        o["contained"] = a.contained;
        o["k"] = a.k;
        if (a.params) {
            o["d"] = a.params->d;
            o["d_exact"] = a.params->d_exact;
        } else {
            o["d"] = nullptr;
            o["d_exact"] = nullptr;
        }
        o["status"] = attempt_status(a);
        o["note"] = a.note;
        arr.push_back(std::move(o));
    }
    j["attempts"] = std::move(arr);
    if (const RowAttempt* b = best_attempt(); b && b->params) {
        const QuantumParams& p = *b->params;
        j["status"] = attempt_status(*b);
        j["record"] = {{"q", p.q_base}, {"label", p.label}, {"n", p.n},          {"k", p.k},
                       {"d", p.d},      {"mds", is_mds(p)},  {"ref", p.reference}, {"witness", p.witness}};
    } else {
        j["status"] = "mismatch";
        j["record"] = nullptr;
    }
    return j.dump();
}

}  // namespace polycss
