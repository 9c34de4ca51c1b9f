// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "polycss/catalog.hpp"
#include "polycss/cli.hpp"
#include "polycss/css.hpp"
#include "polycss/polycyclic.hpp"
#include "polycss/rng.hpp"
#include "polycss/search.hpp"

using namespace polycss;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= limit_s) o.require(false, "runtime limit exceeded");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, limit_s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << timing;
    if (!o.detail.empty()) std::cout << " | " << o.detail;
    std::cout << std::endl;
    if (!o.ok) ++failures;
}

std::vector<QuantumParams> produced;  // every QuantumParams built below, for the Singleton check

RowReport verify(int q, const std::string& t, const std::string& g1, const std::string& second, int n, int k,
                 int d, std::uint64_t budget, std::optional<Convention> conv = std::nullopt) {
    RowInput in;
    in.q = q;
    in.modulus = t;
    in.g1 = g1;
    in.second = second;
    in.n = n;
    in.k = k;
    in.d = d;
    in.convention = conv;
    in.enumeration.budget = budget;
    RowReport r = verify_table_row(in);
    for (const auto& a : r.attempts)
        if (a.params) produced.push_back(*a.params);
    return r;
}

void require_exact(Outcome& o, const RowReport& r, const std::string& brackets, Convention conv) {
    o.require(r.matched(), "row not matched");
    const RowAttempt* b = r.best_attempt();
    if (!b || !b->params) return;
    o.require(b->params->d_exact, "distance not exact");
    o.require(b->params->brackets() == brackets, "got " + b->params->brackets());
    o.require(b->convention == conv, std::string("matched under ") + to_string(b->convention));
    if (o.ok) o.detail = brackets + " exact under " + to_string(conv);
}

// ----- independent oracles -----

// All words spanned by `rows`, by mixed-radix enumeration of the coefficient vectors.
std::set<Word> span_words(Field f, int n, const Matrix& rows) {
    std::set<Word> out;
    const int q = f.q();
    std::vector<int> coef(rows.size(), 0);
    for (;;) {
        Word w(static_cast<std::size_t>(n), 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int j = 0; j < n; ++j) w[j] = f->add(w[j], f->mul(static_cast<Elem>(coef[r]), rows[r][j]));
        out.insert(std::move(w));
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == q) coef[i++] = 0;
        if (i == coef.size()) break;
    }
    return out;
}

// Every word of F^n orthogonal to all of `rows`.
std::set<Word> orthogonal_words(Field f, int n, const Matrix& rows) {
    std::set<Word> out;
    const int q = f.q();
    Word w(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = true;
        for (const Word& r : rows) {
            Elem s = 0;
            for (int j = 0; j < n; ++j) s = f->add(s, f->mul(w[j], r[j]));
            if (s != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(w);
        int i = 0;
        while (i < n && ++w[i] == q) w[i++] = 0;
        if (i == n) break;
    }
    return out;
}

int weight(const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](Elem e) { return e != 0; }));
}

std::vector<std::uint64_t> weight_counts(const std::set<Word>& words, int n) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (const Word& w : words) ++c[weight(w)];
    return c;
}

bool same_counts(const WeightEnumerator& we, const std::vector<std::uint64_t>& c) {
    if (we.counts().size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (we.counts()[i] != c[i]) return false;
    return true;
}

Matrix random_rows(Rng& rng, Field f, int n, int count) {
    Matrix rows(static_cast<std::size_t>(count), Word(static_cast<std::size_t>(n)));
    for (Word& r : rows)
        for (Elem& e : r) e = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(f.q())));
    return rows;
}

// (q, n) pairs with q^n <= 10^5, so whole spaces can be walked.
std::pair<int, int> small_space(Rng& rng) {
    static const std::vector<std::pair<int, int>> limits = {{2, 14}, {3, 9}, {4, 7}, {5, 6}, {7, 5}, {8, 5}, {9, 5}};
    const auto [q, nmax] = limits[rng.below(limits.size())];
    return {q, 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nmax - 1)))};
}

std::vector<std::tuple<int, int, int>> all_brackets(const std::string& s) {
    static const std::regex re(R"(\[\[(\d+),(\d+),(\d+)\]\])");
    std::vector<std::tuple<int, int, int>> out;
    for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it)
        out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]));
    return out;
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
    std::ostringstream out, err;
    const int c = cli::run(args, out, err);
    if (code) *code = c;
    return out.str();
}

constexpr std::uint64_t kSeed = 20240611;
constexpr int kCases = 500;

}  // namespace

int main() {
    criterion(1, "Table 1 [[11,1,5]]_13^2", 60, [] {
        Outcome o;
        const auto r = verify(13, "x^11-x-3", "8A0C31", "352721", 11, 1, 5, saturating_pow(13, 6));
        require_exact(o, r, "[[11,1,5]]_13^2", Convention::SecondGeneratesC2);
        bool c2perp_k0 = false;
        for (const auto& a : r.attempts)
            if (a.convention == Convention::SecondGeneratesC2perp) c2perp_k0 = a.k == 0;
        o.require(c2perp_k0, "C2perp convention did not report k = 0");
        if (o.ok) o.detail += "; C2perp gives k = 0";
        return o;
    });

    criterion(2, "Table 1 [[7,1,4]]_17^2", 10, [] {
        Outcome o;
        const auto r = verify(17, "x^7-x^2-2", "BFC1", "99101", 7, 1, 4, kDefaultBudget);
        require_exact(o, r, "[[7,1,4]]_17^2", Convention::SecondGeneratesC2);
        if (o.ok) o.detail += " (second read as " + r.best_attempt()->second_tokens + ")";
        return o;
    });

    criterion(3, "Table 1 [[60,36,5]]_3^2 within 3^12 visits", 300, [] {
        Outcome o;
        const auto r = verify(3, "x^60-2x^6-2", "1121011011001", "1222021012001", 60, 36, 5, saturating_pow(3, 12));
        require_exact(o, r, "[[60,36,5]]_3^2", Convention::SecondGeneratesC2);
        return o;
    });
    criterion(3, "Table 1 [[96,80,4]]_5^2 within 5^8 visits", 300, [] {
        Outcome o;
        const auto r = verify(5, "x^96-x-1", "310032201", "101110301", 96, 80, 4, saturating_pow(5, 8));
        require_exact(o, r, "[[96,80,4]]_5^2", Convention::SecondGeneratesC2);
        return o;
    });

    criterion(4, "Table 2 [[24,18,3]]_17^2 within 17^3 visits", 60, [] {
        Outcome o;
        const auto r = verify(17, "x^24-x-1", "EG41", "A6872366CA28406AE407F1", 24, 18, 3, saturating_pow(17, 3));
        require_exact(o, r, "[[24,18,3]]_17^2", Convention::SecondGeneratesC2perp);
        return o;
    });
    criterion(4, "Table 2 [[36,30,3]]_17^2 within 17^3 visits", 60, [] {
        Outcome o;
        const auto r = verify(17, "x^36-x-1", "3791", "94F9161A374963B0E663E35AA4A6EFDGG1", 36, 30, 3,
                              saturating_pow(17, 3));
        require_exact(o, r, "[[36,30,3]]_17^2", Convention::SecondGeneratesC2perp);
        return o;
    });

    criterion(5, "Table 3 [[22,2,6]]_5^2", 600, [] {
        Outcome o;
        const auto r = verify(5, "13343122443414240410122", "4223310221", "442143133401", 22, 2, 6, kDefaultBudget);
        require_exact(o, r, "[[22,2,6]]_5^2", Convention::SecondGeneratesC2perp);
        return o;
    });

    criterion(6, "Table 4 propagation arithmetic", 1, [] {
        Outcome o;
        Catalog c;
        c.ingest_file(std::filesystem::path(POLYCSS_DATA_DIR) / "tables.json");
        int ds = 0, e = 0, p = 0;
        for (const CatalogRecord& rec : *c.snapshot()) {
            if (!rec.witness || !rec.witness->count("rule")) continue;
            const std::string rule = rec.witness->at("rule");
            const auto from = all_brackets(rec.witness->at("from"));
            const auto want = QuantumParams::make(rec.q, rec.n, rec.k, rec.d);
            auto mk = [&](const std::tuple<int, int, int>& t) {
                return QuantumParams::make(rec.q, std::get<0>(t), std::get<1>(t), std::get<2>(t));
            };
            std::optional<QuantumParams> got;
            if (rule == "DS" && from.size() == 2) {
                got = direct_sum_quantum(mk(from[0]), mk(from[1]));
                ++ds;
            } else if (rule == "E" && from.size() == 1) {
                got = propagate_extend(mk(from[0]), rec.n - std::get<0>(from[0]));
                o.require(got->d == std::get<2>(from[0]), "extension changed d");
                ++e;
            } else if (rule == "P" && from.size() == 1) {
                got = mk(from[0]);
                while (got->n > rec.n) got = propagate_puncture(*got);
                ++p;
            }
            if (!got) {
                o.require(false, "unrecognized witness for " + want.brackets());
                continue;
            }
            produced.push_back(*got);
            o.require(got->n == want.n && got->k == want.k && got->d == want.d,
                      want.brackets() + " derived as " + got->brackets());
        }
        o.require(ds == 8, "expected 8 DS rows, saw " + std::to_string(ds));
        o.require(e == 8, "expected 8 E rows, saw " + std::to_string(e));
        o.require(p == 2, "expected 2 P rows, saw " + std::to_string(p));
        if (o.ok) o.detail = std::to_string(ds) + " DS, " + std::to_string(e) + " E, " + std::to_string(p) + " P rows";
        return o;
    });

    criterion(7, "bound mode [[80,54,4]]_5^2 and [[52,28,4]]_11^2", 600, [] {
        Outcome o;
        struct Row {
            int q;
            const char *t, *g1, *second;
            int n, k, d;
        };
        for (const Row& row : {Row{5, "x^80-x-1", "4231342331", "101124230104302301", 80, 54, 4},
                               Row{11, "x^52-2x^2-2", "7263851", "84782120107151973361", 52, 28, 4}}) {
            const auto r = verify(row.q, row.t, row.g1, row.second, row.n, row.k, row.d, kDefaultBudget);
            const RowAttempt* b = r.best_attempt();
            const std::string name = "[[" + std::to_string(row.n) + "," + std::to_string(row.k) + "," +
                                     std::to_string(row.d) + "]]";
            o.require(b && b->params, name + ": no construction");
            if (!b || !b->params) continue;
            o.require(b->params->n == row.n && b->params->k == row.k, name + ": dimension arithmetic differs");
            o.require(!b->params->d_exact, name + ": claimed exactness");
            o.require(b->params->d <= row.d, name + ": bound exceeds the printed d");
            o.require(r.to_json().find("\"status\":\"bound\"") != std::string::npos, name + ": status is not bound");
            if (o.ok)
                o.detail += (o.detail.empty() ? "" : "; ") + name + " d >= " + std::to_string(b->params->d) +
                            " (d_exact=false)";
        }
        return o;
    });

    criterion(8, "property: MacWilliams path equals direct enumeration", 120, [] {
        Outcome o;
        Rng rng(kSeed);
        for (int i = 0; i < kCases && o.ok; ++i) {
            const auto [q, n] = small_space(rng);
            const Field f = field_of_order(q);
            const Matrix rows = random_rows(rng, f, n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            const LinearCode c = LinearCode::from_rows(f, n, rows);
            const auto truth = weight_counts(span_words(f, n, rows), n);
            const auto via_dual = macwilliams(weight_enumerator(dual(c)), q, n, n - c.dimension());
            o.require(same_counts(via_dual, truth), "dual+MacWilliams differs on case " + std::to_string(i));
            o.require(same_counts(weight_enumerator(c), truth), "Gray enumeration differs on case " + std::to_string(i));
        }
        if (o.ok) o.detail = std::to_string(kCases) + " random codes vs exhaustive span";
        return o;
    });

    criterion(8, "property: dual involution", 60, [] {
        Outcome o;
        Rng rng(kSeed + 1);
        for (int i = 0; i < kCases && o.ok; ++i) {
            const int q = supported_field_orders()[rng.below(supported_field_orders().size())];
            const Field f = field_of_order(q);
            const int n = 1 + static_cast<int>(rng.below(24));
            const LinearCode c =
                LinearCode::from_rows(f, n, random_rows(rng, f, n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1))));
            const LinearCode d = dual(c);
            o.require(d.dimension() == n - c.dimension(), "dual dimension on case " + std::to_string(i));
            o.require(dual(d) == c, "dual(dual(C)) != C on case " + std::to_string(i));
            for (const Word& a : c.generator())
                for (const Word& b : d.generator()) {
                    Elem s = 0;
                    for (int j = 0; j < n; ++j) s = f->add(s, f->mul(a[j], b[j]));
                    if (s != 0) o.require(false, "non-orthogonal rows on case " + std::to_string(i));
                }
        }
        if (o.ok) o.detail = std::to_string(kCases) + " random codes over every supported field";
        return o;
    });

    criterion(8, "property: trinomial gcd structure", 60, [] {
        Outcome o;
        Rng rng(kSeed + 2);
        const std::vector<int> odd_char = {3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29};
        int nontrivial = 0;
        for (int i = 0; i < kCases; ++i) {
            const int q = odd_char[rng.below(odd_char.size())];
            const Field f = field_of_order(q);
            const int n = 2 + static_cast<int>(rng.below(40));
            const int e = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
            auto nz = [&] { return FieldElement(f, static_cast<Elem>(1 + rng.below(static_cast<std::uint64_t>(q - 1)))); };
            auto tri = [&](FieldElement a, FieldElement b) { return make_trinomial(n, e, a, b); };
            auto other = [&](Elem avoid) {
                Elem x;
                do x = static_cast<Elem>(1 + rng.below(static_cast<std::uint64_t>(q - 1)));
                while (x == avoid);
                return FieldElement(f, x);
            };
            // Same b, distinct a: coprime.
            const FieldElement a1 = nz(), b = nz();
            o.require(gcd(tri(a1, b), tri(other(a1.index()), b)).is_one(), "same-b trinomials not coprime");
            // Same a (possibly zero), distinct b (possibly zero): coprime.
            const Elem a = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
            const Elem b1 = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
            Elem b2;
            do b2 = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
            while (b2 == b1);
            auto lemma2 = [&](Elem bb) {
                std::vector<Elem> v(static_cast<std::size_t>(e) + 1, 0);
                v[0] = bb;
                v[static_cast<std::size_t>(e)] = a;
                return make_multinomial(n, Poly(f, v));
            };
            o.require(gcd(lemma2(b1), lemma2(b2)).is_one(), "same-a trinomials not coprime");
            // Any two distinct trinomials with the same (n, i): gcd is 1 or a binomial of degree gcd(n, i).
            const FieldElement ta = nz(), tb = nz();
            FieldElement tc = nz(), td = nz();
            while (tc.index() == ta.index() && td.index() == tb.index()) tc = nz(), td = nz();
            const Poly g = gcd(tri(ta, tb), tri(tc, td));
            if (!g.is_one()) {
                ++nontrivial;
                int terms = 0;
                for (Elem x : g.coeffs()) terms += x != 0;
                o.require(terms == 2 && g.coeff(0) != 0 && g.degree() == std::gcd(n, e),
                          "gcd is not 1 or a binomial for n=" + std::to_string(n) + " i=" + std::to_string(e));
            }
            // Over GF(3) distinct trinomials are coprime.
            const Field f3 = field_of_order(3);
            const int a3 = 1 + static_cast<int>(rng.below(2)), b3 = 1 + static_cast<int>(rng.below(2));
            const int c3 = 1 + static_cast<int>(rng.below(2)), d3 = 3 - b3;
            const Poly p3 = make_trinomial(n, e, FieldElement(f3, static_cast<Elem>(a3)), FieldElement(f3, static_cast<Elem>(b3)));
            const Poly r3 = make_trinomial(n, e, FieldElement(f3, static_cast<Elem>(c3)), FieldElement(f3, static_cast<Elem>(d3)));
            const Poly s3 = make_trinomial(n, e, FieldElement(f3, static_cast<Elem>(3 - a3)), FieldElement(f3, static_cast<Elem>(b3)));
            o.require(gcd(p3, r3).is_one() && gcd(p3, s3).is_one(), "GF(3) trinomials not coprime");
            o.require(divides(g, tri(ta, tb)) && divides(g, tri(tc, td)), "gcd does not divide");
        }
        if (o.ok)
            o.detail = std::to_string(kCases) + " cases per statement, " + std::to_string(nontrivial) +
                       " nontrivial binomial gcds";
        return o;
    });

    criterion(8, "property: ideal-code shift closure and dimension", 60, [] {
        Outcome o;
        Rng rng(kSeed + 3);
        for (int i = 0; i < kCases && o.ok; ++i) {
            const int q = supported_field_orders()[rng.below(supported_field_orders().size())];
            const Field f = field_of_order(q);
            const int n = 2 + static_cast<int>(rng.below(30));
            std::vector<Elem> v(static_cast<std::size_t>(n));
            do
                for (Elem& x : v) x = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
            while (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }));
            const Poly vp(f, v);
            const AmbientRing ring(n, vp);
            const Factorization fact = factor(ring.modulus(), rng.next());
            std::vector<int> ex;
            for (const auto& fp : fact.factors) ex.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(fp.multiplicity) + 1)));
            const Poly g = fact.divisor(ex);
            if (g.degree() >= n) continue;
            const LinearCode c = ideal_code(g, ring);
            o.require(c.dimension() == n - g.degree(), "dimension formula on case " + std::to_string(i));
            o.require(is_shift_closed(c, vp), "shift closure on case " + std::to_string(i));
        }
        if (o.ok) o.detail = std::to_string(kCases) + " random moduli and divisors";
        return o;
    });

    criterion(8, "property: CSS k and d vs brute force", 300, [] {
        Outcome o;
        Rng rng(kSeed + 4);
        int done = 0;
        for (int attempt = 0; done < kCases && attempt < 20 * kCases && o.ok; ++attempt) {
            const auto [q, n] = small_space(rng);
            const Field f = field_of_order(q);
            const Matrix rows1 = random_rows(rng, f, n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
            // C2perp spanned by random combinations of the C1 rows.
            Matrix rows2;
            const int m = static_cast<int>(rng.below(rows1.size()));
            for (int r = 0; r < m; ++r) {
                Word w(static_cast<std::size_t>(n), 0);
                for (const Word& src : rows1) {
                    const Elem a = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
                    for (int j = 0; j < n; ++j) w[j] = f->add(w[j], f->mul(a, src[j]));
                }
                rows2.push_back(w);
            }
            const auto c1_words = span_words(f, n, rows1);
            const auto c2perp_words = span_words(f, n, rows2);
            if (c1_words.size() == c2perp_words.size()) continue;  // k = 0
            const auto c2_words = orthogonal_words(f, n, rows2);
            const auto c1perp_words = orthogonal_words(f, n, rows1);
            int brute_k = 0;
            for (std::size_t s = c2perp_words.size(); s < c1_words.size(); s *= static_cast<std::size_t>(q)) ++brute_k;
            int brute_d = n + 1;
            for (const Word& w : c1_words)
                if (!c2perp_words.count(w)) brute_d = std::min(brute_d, weight(w));
            for (const Word& w : c2_words)
                if (!c1perp_words.count(w)) brute_d = std::min(brute_d, weight(w));

            const QuantumParams p =
                css_construct(LinearCode::from_rows(f, n, rows1), LinearCode::from_rows(f, n, rows2));
            produced.push_back(p);
            ++done;
            o.require(p.k == brute_k, "k differs on case " + std::to_string(done));
            o.require(p.d_exact && p.d == brute_d, "d differs on case " + std::to_string(done));
        }
        o.require(done == kCases, "only " + std::to_string(done) + " instances with k >= 1");
        if (o.ok) o.detail = std::to_string(done) + " nested pairs with q^n <= 10^5";
        return o;
    });

    criterion(8, "property: Singleton validity of produced parameters", 60, [] {
        Outcome o;
        Rng rng(kSeed + 5);
        std::vector<QuantumParams> pool = produced;
        for (int i = 0; i < kCases; ++i) {
            const int q = supported_field_orders()[rng.below(supported_field_orders().size())];
            const int n = 2 + static_cast<int>(rng.below(60));
            const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2)));
            const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2 * (d - 1)) + 1));
            const QuantumParams a = QuantumParams::make(q, n, k, d);
            const int n2 = 1 + static_cast<int>(rng.below(60));
            const int d2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n2 / 2))));
            const int k2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(0, n2 - 2 * (d2 - 1))) + 1));
            const QuantumParams b = QuantumParams::make(q, n2, k2, d2);
            pool.push_back(propagate_extend(a));
            if (a.d >= 2) pool.push_back(propagate_puncture(a));
            if (a.k >= 1) pool.push_back(propagate_subcode(a));
            pool.push_back(direct_sum_quantum(a, b));
            if (b.k <= a.n) pool.push_back(combine_theorem2(a, b));
        }
        int checked = 0;
        for (const QuantumParams& p : pool) {
            ++checked;
            bool valid = p.n >= 1 && p.k >= 0 && p.d >= 1;
            try {
                valid = valid && singleton_defect(p) >= 0;
            } catch (const Error&) {
                valid = false;
            }
            o.require(valid, "invalid " + p.brackets());
        }
        o.require(checked >= kCases, "too few parameters checked");
        if (o.ok) o.detail = std::to_string(checked) + " parameter sets";
        return o;
    });

    criterion(8, "property: catalog ingest of export is the identity", 120, [] {
        Outcome o;
        Rng rng(kSeed + 6);
        for (int trial = 0; trial < kCases && o.ok; ++trial) {
            Catalog c;
            const int count = static_cast<int>(rng.below(20));
            for (int i = 0; i < count; ++i) {
                CatalogRecord r;
                r.q = supported_field_orders()[rng.below(supported_field_orders().size())];
                r.label = default_label(r.q);
                r.n = 2 + static_cast<int>(rng.below(199));
                r.d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r.n / 2)));
                r.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(r.n - 2 * (r.d - 1)) + 1));
                r.mds = r.n - r.k - 2 * (r.d - 1) == 0;
                r.ref = "ref, \"" + std::to_string(i) + "\"";
                if (rng.below(2)) r.witness = Witness{{"rule", "DS"}, {"from", "[[1,0,1]] + x\n"}};
                c.update_if_better(r);
            }
            Catalog from_json;
            from_json.ingest_text(c.to_text(CatalogFormat::Json), CatalogFormat::Json);
            o.require(*from_json.snapshot() == *c.snapshot(), "JSON round trip differs on trial " + std::to_string(trial));
            Catalog from_csv;
            from_csv.ingest_text(c.to_text(CatalogFormat::Csv), CatalogFormat::Csv);
            o.require(from_csv.to_text(CatalogFormat::Csv) == c.to_text(CatalogFormat::Csv),
                      "CSV round trip differs on trial " + std::to_string(trial));
        }
        if (o.ok) o.detail = std::to_string(kCases) + " random catalogs through JSON and CSV";
        return o;
    });

    criterion(9, "search determinism and [[11,1,5]] rediscovery", 120, [] {
        Outcome o;
        const std::vector<std::string> args = {"search", "trinomial", "--q", "13", "--n", "11", "--a", "1",
                                               "--b", "3", "--seed", "1", "--json"};
        int c1 = -1, c2 = -1;
        const std::string a = cli_out(args, &c1);
        const std::string b = cli_out(args, &c2);
        o.require(c1 == 0 && c2 == 0, "search exited nonzero");
        o.require(!a.empty() && a == b, "hit streams differ");
        auto par = args;
        par.insert(par.end(), {"--jobs", "4"});
        o.require(cli_out(par) == a, "hit stream depends on --jobs");
        bool found = false;
        std::istringstream lines(a);
        int hits = 0;
        for (std::string line; std::getline(lines, line); ++hits) {
            const auto j = nlohmann::json::parse(line);
            if (j["q"] == 13 && j["n"] == 11 && j["k"] >= 1 && j["d"] >= 5) found = true;
        }
        o.require(found, "no hit with parameters >= [[11,1,5]]_13^2");
        if (o.ok) o.detail = std::to_string(hits) + " identical hits, [[11,k>=1,d>=5]] present";
        return o;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
