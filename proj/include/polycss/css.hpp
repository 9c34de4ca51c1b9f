#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polycss/linear_code.hpp"
#include "polycss/poly.hpp"

namespace polycss {

// How a construction was obtained: ordered key/value strings such as {"modulus": "x^11 + 12x + 10",
// "g1": "8A0C31", "second": "352721", "convention": "C2"} or {"rule": "DS", "from": "..."}.
using Witness = std::map<std::string, std::string>;

// Parameters of a q-ary quantum code [[n, k, d]]. Internal arithmetic is over GF(q_base); `label`
// carries the alphabet tag as the tables print it ("13^2").
struct QuantumParams {
    int q_base = 0;
    std::string label;
    int n = 0;
    int k = 0;
    int d = 1;
    bool d_exact = false;
    Witness witness;
    std::string reference;

    // Validates ranges and the quantum Singleton bound k <= n - 2(d - 1); throws
    // Error(InvalidParams) on violation.
    static QuantumParams make(int q_base, int n, int k, int d, bool d_exact = false);

    std::string brackets() const;  // "[[11,1,5]]_13^2"
};

std::string default_label(int q_base);

// n - k - 2(d - 1). Throws Error(InvalidParams) if negative.
int singleton_defect(const QuantumParams& p);
bool is_mds(const QuantumParams& p);

// CSS code from C2perp ⊆ C1. Exact when the enumerators of C1 and C2perp fit the budget (the
// enumerators of C2 and C1perp follow by MacWilliams); otherwise d is the smaller of the
// minimum-distance lower bounds of C1 and C2, with d_exact = false.
// Errors: Precondition when C2perp is not contained in C1, InvalidParams when k = 0.
QuantumParams css_construct(const LinearCode& c1, const LinearCode& c2perp,
                            const EnumOptions& opts = {});

// [[n1 + n2 - k2, k1, min(d1, d1 + d2 - k2)]], distance stored as a lower bound (clamped at 1).
QuantumParams combine_theorem2(const QuantumParams& p1, const QuantumParams& p2);

QuantumParams propagate_extend(const QuantumParams& p, int steps = 1);  // [[n+m, k, d]]
QuantumParams propagate_puncture(const QuantumParams& p);               // [[n-1, k, d-1]]
QuantumParams propagate_subcode(const QuantumParams& p);                // [[n, k-1, d]]
QuantumParams direct_sum_quantum(const QuantumParams& a, const QuantumParams& b);
// The tables cite shortening without stating its parameter rule. This alias applies the subcode
// rule only when explicitly enabled and throws Error(Precondition) otherwise.
QuantumParams propagate_shorten(const QuantumParams& p, bool enable_subcode_alias = false);

// Which classical code the second table polynomial generates. Under SecondGeneratesC2 with
// second | modulus, C2 = <second> is an ideal and C2perp is its annihilator <modulus / second>;
// otherwise C2perp is the Euclidean dual of the span of the shifts of second.
enum class Convention {
    SecondGeneratesC2,
    SecondGeneratesC2perp,
};
const char* to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view text);

struct RowInput {
    int q = 0;
    std::string modulus;  // algebraic ("x^11-x-3") or table notation
    std::string g1;
    std::string second;
    std::optional<int> n, k, d;  // claimed parameters, if any
    std::optional<Convention> convention;  // unset: try every convention
    EnumOptions enumeration;
};

// One reconstruction under a convention and a tokenization of the table strings.
struct RowAttempt {
    Convention convention{};
    std::string g1_tokens;
    std::string second_tokens;
    int n = 0;
    int dim_c1 = 0;
    int dim_c2perp = 0;
    int k = 0;  // dim C1 - dim C2perp (reported even when containment fails)
    bool contained = false;
    std::optional<QuantumParams> params;  // when the CSS code was built and its distance computed
    std::string note;
    bool matches = false;
};

struct RowReport {
    int q = 0;
    std::string modulus;
    std::optional<int> claimed_n, claimed_k, claimed_d;
    int modulus_degree = 0;
    std::vector<std::string> flags;  // input discrepancies (length/modulus mismatch, non-divisors)
    std::vector<RowAttempt> attempts;
    std::optional<std::size_t> best;  // index of the matching (or most complete) attempt

    bool matched() const { return best && attempts[*best].matches; }
    const RowAttempt* best_attempt() const { return best ? &attempts[*best] : nullptr; }
    std::string to_text() const;
    std::string to_json() const;
};

// Rebuilds the CSS code of a table row. The code length is the claimed n when given (rows whose
// modulus degree differs are built from unreduced shift spans at that length and flagged),
// otherwise the modulus degree. Mismatches are report content, not errors; unparseable input
// still throws Error(Parse).
RowReport verify_table_row(const RowInput& input);

}  // namespace polycss
