#include "polycss/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <tuple>
#include <thread>

#include "json.hpp"
#include "polycss/polycyclic.hpp"
#include "polycss/rng.hpp"

namespace polycss {

const char* to_string(HitVerdict v) {
    return v == HitVerdict::NewParameters ? "new-parameters" : "improved-distance";
}

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Extend: return "E";
        case Rule::Puncture: return "P";
        case Rule::Subcode: return "subcode";
        case Rule::DirectSum: return "DS";
        case Rule::Theorem2: return "Thm2";
    }
    return "?";
}

std::optional<Rule> parse_rule(std::string_view text) {
    for (Rule r : {Rule::Extend, Rule::Puncture, Rule::Subcode, Rule::DirectSum, Rule::Theorem2})
        if (text == to_string(r)) return r;
    return std::nullopt;
}

std::string SearchHit::to_json() const {
    nlohmann::ordered_json j;
    j["q"] = params.q_base;
    j["label"] = params.label;
    j["n"] = params.n;
    j["k"] = params.k;
    j["d"] = params.d;
    j["d_exact"] = params.d_exact;
    j["mds"] = is_mds(params);
    j["verdict"] = to_string(verdict);
    j["previous_d"] = previous_d ? nlohmann::ordered_json(*previous_d) : nlohmann::ordered_json(nullptr);
    if (!modulus.empty()) {
        j["modulus"] = modulus;
        j["g1"] = g1;
        j["second"] = second;
        j["convention"] = to_string(convention);
    }
    j["witness"] = params.witness;
    return j.dump();
}

std::string SearchHit::to_row() const {
    std::string row = params.brackets();
    if (!modulus.empty()) {
        row += "  " + modulus + "  [" + g1 + "]  [" + second + "]";
    } else if (auto it = params.witness.find("rule"); it != params.witness.end()) {
        row += "  " + params.witness.at("from") + " (" + it->second + ")";
    }
    row += "  ";
    row += to_string(verdict);
    if (!params.d_exact) row += " (d is a lower bound)";
    return row;
}

namespace {

struct ModulusJob {
    Poly t;
    std::uint64_t seed;
};

struct Found {
    SearchHit hit;
};

struct ModulusResult {
    std::vector<Found> found;
    std::vector<std::string> log;
    std::size_t candidates = 0;
    std::size_t evaluated = 0;
};

int hamming_weight(const Poly& p) {
    int w = 0;
    for (Elem e : p.coeffs()) w += e != 0;
    return w;
}

Poly random_monic(Field field, int degree, Rng& rng) {
    const std::uint64_t q = static_cast<std::uint64_t>(field.q());
    std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
    for (Elem& e : c) e = static_cast<Elem>(rng.below(q));
    c.back() = 1;
    if (degree > 0 && c[0] == 0) c[0] = static_cast<Elem>(1 + rng.below(q - 1));
    return Poly(field, std::move(c));
}

class Evaluator {
public:
    Evaluator(const SearchConfig& cfg, Catalog::Snapshot snapshot, std::optional<int> target_k)
        : cfg_(cfg), snapshot_(std::move(snapshot)), target_k_(target_k) {}

    ModulusResult run(const ModulusJob& job) const {
        ModulusResult out;
        const AmbientRing ring = AmbientRing::from_modulus(job.t);
        const int n = ring.length();
        const std::string modulus = format_expression(ring.modulus());
        std::optional<Factorization> factored;
        try {
            factored = factor(ring.modulus(), job.seed);
        } catch (const Error& e) {
            out.log.push_back(modulus + ": factorization failed: " + e.what());
            return out;
        }
        const Factorization& fact = *factored;
        const int g_hi = cfg_.g_degree_max < 0 ? n - 1 : std::min(cfg_.g_degree_max, n - 1);
        std::map<int, int> local_best;  // k -> best d found for this modulus
        Rng rng(job.seed);
        bool any_g = false;

        DivisorStream gs(fact, std::max(cfg_.g_degree_min, 1), g_hi);
        while (auto g = gs.next()) {
            const LinearCode c1 = ideal_code(g->poly, ring);
            auto consider = [&](const Poly& f) {
                const Poly h = g->poly * f;
                if (h.degree() >= n) return;
                const int k = f.degree();
                ++out.candidates;
                const int upper = std::min((n - k) / 2 + 1, hamming_weight(g->poly));
                int to_beat = known_d(n, k);
                if (auto it = local_best.find(k); it != local_best.end()) to_beat = std::max(to_beat, it->second);
                if (to_beat >= upper) return;
                EnumOptions opts;
                opts.budget = cfg_.budget;
                opts.seed = job.seed;
                if (cfg_.time_limit_ms)
                    opts.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*cfg_.time_limit_ms);
                ++out.evaluated;
                try {
                    QuantumParams p = css_construct(c1, span_code(h, n), opts);
                    if (p.d <= to_beat) return;
                    local_best[k] = p.d;
                    Found fnd;
                    fnd.hit.modulus = modulus;
                    fnd.hit.g1 = poly_format(g->poly);
                    fnd.hit.second = poly_format(h);
                    fnd.hit.convention = Convention::SecondGeneratesC2perp;
                    p.witness = {{"modulus", fnd.hit.modulus},
                                 {"g1", fnd.hit.g1},
                                 {"second", fnd.hit.second},
                                 {"convention", to_string(fnd.hit.convention)}};
                    p.reference = "search";
                    fnd.hit.params = std::move(p);
                    out.found.push_back(std::move(fnd));
                } catch (const Error& e) {
                    out.log.push_back(modulus + " g1=" + poly_format(g->poly) + " second=" + poly_format(h) + ": " +
                                      e.what());
                }
            };

            if (target_k_) {
                if (g->poly.degree() + *target_k_ >= n) continue;
                any_g = true;
                for (int trial = 0; trial < cfg_.trials; ++trial) consider(random_monic(ring.field(), *target_k_, rng));
            } else {
                any_g = true;
                const Factorization rest = cofactor(fact, g->exponents);
                DivisorStream fs(rest, 1, n - 1 - g->poly.degree());
                while (auto f = fs.next()) consider(f->poly);
            }
        }
        if (!any_g) out.log.push_back(modulus + ": no divisor g fits the requested degrees");
        return out;
    }

private:
    int known_d(int n, int k) const {
        const auto it = std::lower_bound(snapshot_->begin(), snapshot_->end(), std::tuple(cfg_.q, n, k),
                                         [](const CatalogRecord& r, const auto& key) {
                                             return std::tuple(r.q, r.n, r.k) < key;
                                         });
        return it != snapshot_->end() && it->q == cfg_.q && it->n == n && it->k == k ? it->d : 0;
    }

    const SearchConfig& cfg_;
    Catalog::Snapshot snapshot_;
    std::optional<int> target_k_;
};

// Evaluates moduli in chunks (in parallel when cfg.jobs > 1) and merges them in job order, so the
// emitted stream does not depend on the worker count.
SearchStats drive(const SearchConfig& cfg, const Catalog& catalog, std::optional<int> target_k,
                  const std::function<std::optional<ModulusJob>()>& next_job, const HitSink& sink) {
    SearchStats stats;
    const Catalog::Snapshot snapshot = catalog.snapshot();
    const Evaluator eval(cfg, snapshot, target_k);
    std::map<std::pair<int, int>, int> best;  // (n, k) -> d, seeded lazily from the snapshot
    auto best_for = [&](int n, int k) -> int& {
        auto [it, inserted] = best.try_emplace({n, k}, 0);
        if (inserted)
            if (auto r = catalog.query_exact(cfg.q, n, k)) it->second = r->d;
        return it->second;
    };

    const int jobs = std::max(1, cfg.jobs);
    for (;;) {
        std::vector<ModulusJob> chunk;
        while (static_cast<int>(chunk.size()) < 2 * jobs)
            if (auto j = next_job())
                chunk.push_back(std::move(*j));
            else
                break;
        if (chunk.empty()) break;
        std::vector<ModulusResult> results(chunk.size());
        if (jobs == 1) {
            for (std::size_t i = 0; i < chunk.size(); ++i) results[i] = eval.run(chunk[i]);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w)
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < chunk.size();) results[i] = eval.run(chunk[i]);
                });
            for (auto& t : pool) t.join();
        }
        for (ModulusResult& r : results) {
            ++stats.moduli;
            stats.candidates += r.candidates;
            stats.evaluated += r.evaluated;
            for (auto& line : r.log) stats.log.push_back(std::move(line));
            for (Found& f : r.found) {
                SearchHit& hit = f.hit;
                int& current = best_for(hit.params.n, hit.params.k);
                if (hit.params.d <= current) continue;

                RowInput check;
                check.q = cfg.q;
                check.modulus = hit.modulus;
                check.g1 = hit.g1;
                check.second = hit.second;
                check.n = hit.params.n;
                check.k = hit.params.k;
                check.d = hit.params.d;
                check.convention = hit.convention;
                check.enumeration.budget = cfg.budget;
                const RowReport report = verify_table_row(check);
                if (!report.matched()) {
                    stats.log.push_back(hit.params.brackets() + " from " + hit.modulus + ": re-verification failed");
                    continue;
                }
                const auto stored = catalog.query_exact(cfg.q, hit.params.n, hit.params.k);
                hit.verdict = stored ? HitVerdict::ImprovedDistance : HitVerdict::NewParameters;
                if (stored) hit.previous_d = stored->d;
                current = hit.params.d;
                ++stats.hits;
                sink(hit);
            }
        }
    }
    return stats;
}

std::vector<int> nonzero_or(const std::vector<int>& given, int q) {
    if (!given.empty()) return given;
    std::vector<int> all;
    for (int v = 1; v < q; ++v) all.push_back(v);
    return all;
}

void check_config(const SearchConfig& cfg) {
    (void)field_of_order(cfg.q);
    if (cfg.moduli.empty() && (cfg.n_min < 2 || cfg.n_max < cfg.n_min))
        throw Error(ErrorKind::InvalidParams, "length range must be nonempty with n >= 2");
    if (cfg.trials < 0) throw Error(ErrorKind::InvalidParams, "trial count must be nonnegative");
    for (int v : cfg.a_values)
        if (v <= 0 || v >= cfg.q) throw Error(ErrorKind::InvalidParams, "coefficient a must be a nonzero element");
    for (int v : cfg.b_values)
        if (v <= 0 || v >= cfg.q) throw Error(ErrorKind::InvalidParams, "coefficient b must be a nonzero element");
}

// Explicit moduli if given, otherwise trinomials ordered by (n, i, a, b).
std::function<std::optional<ModulusJob>()> modulus_source(const SearchConfig& cfg) {
    const Field field = field_of_order(cfg.q);
    if (!cfg.moduli.empty()) {
        auto index = std::make_shared<std::size_t>(0);
        return [cfg, field, index]() -> std::optional<ModulusJob> {
            if (*index >= cfg.moduli.size()) return std::nullopt;
            const std::size_t i = (*index)++;
            Poly t = parse_poly_any(cfg.moduli[i], field);
            if (t.degree() < 2) throw Error(ErrorKind::InvalidParams, "modulus degree must be at least 2");
            return ModulusJob{std::move(t), derive_seed(cfg.seed, i)};
        };
    }
    struct State {
        int n, i, ai = 0, bi = 0;
        std::uint64_t count = 0;
        bool done = false;
    };
    auto st = std::make_shared<State>();
    st->n = cfg.n_min;
    st->i = cfg.i_min;
    const auto as = nonzero_or(cfg.a_values, cfg.q);
    const auto bs = nonzero_or(cfg.b_values, cfg.q);
    return [cfg, field, st, as, bs]() -> std::optional<ModulusJob> {
        for (;;) {
            if (st->done || st->n > cfg.n_max) return std::nullopt;
            const int i_hi = cfg.i_max < 0 ? st->n - 1 : std::min(cfg.i_max, st->n - 1);
            if (st->i > i_hi || st->i < 1) {
                ++st->n;
                st->i = std::max(cfg.i_min, 1);
                st->ai = st->bi = 0;
                continue;
            }
            if (static_cast<std::size_t>(st->ai) >= as.size()) {
                ++st->i;
                st->ai = st->bi = 0;
                continue;
            }
            if (static_cast<std::size_t>(st->bi) >= bs.size()) {
                ++st->ai;
                st->bi = 0;
                continue;
            }
            const FieldElement a(field, static_cast<Elem>(as[st->ai]));
            const FieldElement b(field, static_cast<Elem>(bs[st->bi]));
            ++st->bi;
            return ModulusJob{make_trinomial(st->n, st->i, a, b), derive_seed(cfg.seed, st->count++)};
        }
    };
}

}  // namespace

SearchStats search_trinomial_pairs(const SearchConfig& cfg, const Catalog& catalog, const HitSink& sink) {
    check_config(cfg);
    return drive(cfg, catalog, std::nullopt, modulus_source(cfg), sink);
}

SearchStats search_target(const SearchConfig& cfg, int n, int k, const Catalog& catalog, const HitSink& sink) {
    SearchConfig c = cfg;
    if (c.moduli.empty()) c.n_min = c.n_max = n;
    check_config(c);
    if (k <= 0 || k >= n) throw Error(ErrorKind::InvalidParams, "target needs 0 < k < n");
    if (c.trials == 0) return {};
    // Explicit moduli of another degree cannot produce length n.
    if (!c.moduli.empty()) {
        const Field field = field_of_order(c.q);
        std::vector<std::string> keep;
        SearchStats skipped;
        for (const auto& m : c.moduli)
            if (parse_poly_any(m, field).degree() == n) keep.push_back(m);
        c.moduli = keep;
        if (keep.empty()) return skipped;
    }
    return drive(c, catalog, k, modulus_source(c), sink);
}

SearchStats search_multinomial(const SearchConfig& cfg, const Catalog& catalog, const HitSink& sink) {
    check_config(cfg);
    if (!cfg.moduli.empty()) return drive(cfg, catalog, std::nullopt, modulus_source(cfg), sink);
    const Field field = field_of_order(cfg.q);
    auto rng = std::make_shared<Rng>(cfg.seed);
    auto n = std::make_shared<int>(cfg.n_min);
    auto trial = std::make_shared<int>(0);
    auto count = std::make_shared<std::uint64_t>(0);
    auto source = [cfg, field, rng, n, trial, count]() -> std::optional<ModulusJob> {
        while (*n <= cfg.n_max && *trial >= cfg.trials) {
            ++*n;
            *trial = 0;
        }
        if (*n > cfg.n_max) return std::nullopt;
        ++*trial;
        std::vector<Elem> v(static_cast<std::size_t>(*n));
        do {
            for (Elem& e : v) e = static_cast<Elem>(rng->below(static_cast<std::uint64_t>(cfg.q)));
        } while (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }));
        return ModulusJob{make_multinomial(*n, Poly(field, std::move(v))), derive_seed(cfg.seed, (*count)++)};
    };
    return drive(cfg, catalog, std::nullopt, source, sink);
}

SearchStats derive_closure(Catalog& catalog, const std::set<Rule>& rules, int rounds, const HitSink& sink,
                           std::optional<int> q_filter) {
    SearchStats stats;
    if (rules.empty()) return stats;
    if (q_filter) (void)field_of_order(*q_filter);
    for (int round = 0; round < rounds; ++round) {
        const Catalog::Snapshot snap = catalog.snapshot();
        std::vector<QuantumParams> base;
        for (const CatalogRecord& r : *snap)
            if (!q_filter || r.q == *q_filter) base.push_back(params_from_record(r));

        std::vector<QuantumParams> out;
        auto fits = [](int n) { return n >= 1 && n <= kCatalogMaxLength; };
        for (const QuantumParams& p : base) {
            if (rules.count(Rule::Extend) && fits(p.n + 1)) out.push_back(propagate_extend(p));
            if (rules.count(Rule::Puncture) && p.n >= 2 && p.d >= 2 && p.k <= p.n - 1)
                out.push_back(propagate_puncture(p));
            if (rules.count(Rule::Subcode) && p.k >= 1) out.push_back(propagate_subcode(p));
        }
        for (std::size_t i = 0; i < base.size(); ++i) {
            for (std::size_t j = 0; j < base.size(); ++j) {
                const QuantumParams& a = base[i];
                const QuantumParams& b = base[j];
                if (a.q_base != b.q_base) continue;
                if (rules.count(Rule::DirectSum) && i <= j && fits(a.n + b.n)) out.push_back(direct_sum_quantum(a, b));
                if (rules.count(Rule::Theorem2) && b.k <= a.n && fits(a.n + b.n - b.k))
                    out.push_back(combine_theorem2(a, b));
            }
        }
        stats.candidates += out.size();

        std::size_t added = 0;
        for (QuantumParams& p : out) {
            const auto stored = catalog.query_exact(p.q_base, p.n, p.k);
            if (stored && stored->d >= p.d) continue;
            p.reference = "derived";
            CatalogRecord rec = record_from_params(p);
            catalog.update_if_better(rec);
            SearchHit hit;
            hit.params = p;
            hit.verdict = stored ? HitVerdict::ImprovedDistance : HitVerdict::NewParameters;
            if (stored) hit.previous_d = stored->d;
            ++added;
            ++stats.hits;
            sink(hit);
        }
        if (added == 0) break;
    }
    return stats;
}

}  // namespace polycss
