#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polycss/catalog.hpp"
#include "polycss/css.hpp"

namespace polycss {

struct SearchConfig {
    int q = 0;
    int n_min = 0, n_max = 0;
    int i_min = 1, i_max = -1;       // trinomial middle exponent; -1 means n - 1
    std::vector<int> a_values;       // empty: every nonzero element
    std::vector<int> b_values;       // empty: every nonzero element
    int g_degree_min = 1, g_degree_max = -1;  // divisor-degree window for g; -1 means n - 1
    std::vector<std::string> moduli;  // explicit moduli searched instead of generated trinomials
    int trials = 8;                   // random draws per (modulus, g) or per length
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::optional<int> time_limit_ms;  // per candidate
};

enum class HitVerdict { NewParameters, ImprovedDistance };
const char* to_string(HitVerdict v);

struct SearchHit {
    QuantumParams params;
    std::string modulus;   // algebraic notation
    std::string g1;        // table notation
    std::string second;    // table notation
    Convention convention = Convention::SecondGeneratesC2perp;
    HitVerdict verdict = HitVerdict::NewParameters;
    std::optional<int> previous_d;

    std::string to_json() const;   // one NDJSON line, without the newline
    std::string to_row() const;    // "[[n,k,d]]_q^2  t  g1  second"
};

struct SearchStats {
    std::size_t moduli = 0;
    std::size_t candidates = 0;
    std::size_t evaluated = 0;
    std::size_t hits = 0;
    std::vector<std::string> log;  // per-candidate failures and infeasible settings, in order
};

using HitSink = std::function<void(const SearchHit&)>;

// Divisor lattice of each trinomial x^n - a x^i - b, ordered by (n, i, a, b): C1 = <g> for g in
// the degree window and C2perp = <g f> for every divisor f of t / g with deg(g f) < n. Hits are
// re-verified from their witness strings and must beat both the catalog snapshot and every earlier
// hit of the run.
SearchStats search_trinomial_pairs(const SearchConfig& cfg, const Catalog& catalog, const HitSink& sink);

// Target search for [[n, k]]: for every modulus and divisor g with deg g + k < n, draws cfg.trials
// random monic f of degree k with f(0) != 0 and uses C2perp = span(g f), so that k is exact.
SearchStats search_target(const SearchConfig& cfg, int n, int k, const Catalog& catalog, const HitSink& sink);

// As search_trinomial_pairs over t = x^n - v(x) with cfg.trials random nonzero v per length.
SearchStats search_multinomial(const SearchConfig& cfg, const Catalog& catalog, const HitSink& sink);

enum class Rule { Extend, Puncture, Subcode, DirectSum, Theorem2 };
const char* to_string(Rule r);
std::optional<Rule> parse_rule(std::string_view text);

// Applies the enabled rules to the catalog until a round adds nothing or `rounds` is reached.
// Each output that is absent from or better than the catalog is inserted and reported. Lengths stay
// within the catalog scope. When q_filter is set only that alphabet is used.
SearchStats derive_closure(Catalog& catalog, const std::set<Rule>& rules, int rounds, const HitSink& sink,
                           std::optional<int> q_filter = std::nullopt);

}  // namespace polycss
