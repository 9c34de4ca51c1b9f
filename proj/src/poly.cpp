#include "polycss/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "polycss/rng.hpp"

namespace polycss {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    const int q = field->q();
    for (Elem c : coeffs_)
        if (c >= q)
            throw Error(ErrorKind::Precondition,
                        "coefficient " + std::to_string(c) + " outside " + field->name());
    trim();
}

Poly Poly::constant(Field field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(Field field, int degree, Elem c) {
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(field, std::move(v));
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_->inv(leading()));
}

Poly Poly::scaled(Elem c) const {
    Poly r(field_);
    if (c == 0) return r;
    r.coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_->mul(coeffs_[i], c);
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    r.coeffs_.assign(static_cast<std::size_t>(k), 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Elem Poly::evaluate(Elem x) const noexcept {
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field_->add(field_->mul(acc, x), *it);
    return acc;
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), coeffs_[i]);
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Elem& c : r.coeffs_) c = field_->neg(c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const FieldSpec& f = a.field_.spec();
    Poly r(a.field_);
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    Poly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    const FieldSpec& f = a.field_.spec();
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Elem ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] = f.add(r.coeffs_[i + j], f.mul(ai, b.coeffs_[j]));
    }
    r.trim();
    return r;
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool canonical_less(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

DivMod divmod(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const FieldSpec& F = f.field().spec();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(f.field()), f};

    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quo(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    const Elem lead_inv = F.inv(g.leading());
    const auto& gc = g.coeffs();
    for (int i = f.degree(); i >= dg; --i) {
        const Elem c = rem[i];
        if (c == 0) continue;
        const Elem t = F.mul(c, lead_inv);
        quo[i - dg] = t;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(t, gc[j]));
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(f.field(), std::move(quo)), Poly(f.field(), std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) { return divmod(f, g).remainder.is_zero(); }

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::Precondition, "gcd(0, 0) is undefined");
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
    Poly result = Poly::constant(base.field(), 1) % modulus;
    Poly b = base % modulus;
    while (exponent != 0) {
        if (exponent & 1u) result = mulmod(result, b, modulus);
        exponent >>= 1;
        if (exponent != 0) b = mulmod(b, b, modulus);
    }
    return result;
}

namespace {

Poly x_poly(Field f) { return Poly::monomial(f, 1); }

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Coefficient-wise p-th root of a polynomial in x^p.
Poly pth_root(const Poly& f) {
    const FieldSpec& F = f.field().spec();
    const int p = F.p();
    std::vector<Elem> c(static_cast<std::size_t>(f.degree() / p) + 1, 0);
    for (int i = 0; i <= f.degree(); i += p) c[i / p] = F.pth_root(f.coeff(i));
    return Poly(f.field(), std::move(c));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    const int p = f.field()->p();
    const Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree(pth_root(f), mult * p, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    for (int i = 1; !w.is_one(); ++i) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(std::move(fac), mult * i);
        c = c / y;
        w = std::move(y);
    }
    if (!c.is_one()) squarefree(pth_root(c.monic()), mult * p, out);
}

// Splits a monic squarefree f into products of irreducibles of equal degree.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    const std::uint64_t q = static_cast<std::uint64_t>(f.field().q());
    const Poly x = x_poly(f.field());
    Poly rest = f;
    Poly h = x % rest;
    for (int i = 1; 2 * i <= rest.degree(); ++i) {
        h = powmod(h, q, rest);
        Poly g = gcd(h - x, rest);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

Poly random_below(const Poly& f, Rng& rng) {
    const int q = f.field().q();
    std::vector<Elem> c(static_cast<std::size_t>(f.degree()));
    for (Elem& e : c) e = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(q)));
    return Poly(f.field(), std::move(c));
}

// Cantor-Zassenhaus: f is monic, squarefree, a product of irreducibles of degree d.
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const FieldSpec& F = f.field().spec();
    const std::uint64_t q = static_cast<std::uint64_t>(F.q());
    for (;;) {
        const Poly h = random_below(f, rng);
        if (h.degree() < 1) continue;
        Poly split(f.field());
        if (q % 2 == 1) {
            // h^((q^d - 1)/2) = (h * h^q * ... * h^(q^(d-1)))^((q-1)/2)
            Poly norm = h;
            Poly frob = h;
            for (int j = 1; j < d; ++j) {
                frob = powmod(frob, q, f);
                norm = mulmod(norm, frob, f);
            }
            split = powmod(norm, (q - 1) / 2, f) - Poly::constant(f.field(), 1);
        } else {
            // Absolute trace into GF(2): h + h^2 + ... + h^(2^(m*d - 1)).
            Poly sq = h;
            split = h;
            for (int j = 1; j < F.m() * d; ++j) {
                sq = mulmod(sq, sq, f);
                split = split + sq;
            }
        }
        if (split.is_zero()) continue;
        Poly g = gcd(f, split);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const std::uint64_t q = static_cast<std::uint64_t>(f.field().q());
    const Poly x = x_poly(f.field());
    // frob[j] = x^(q^j) mod g
    std::vector<Poly> frob{x % g};
    for (int j = 1; j <= n; ++j) frob.push_back(powmod(frob.back(), q, g));
    if (!(frob[n] == x % g)) return false;
    for (int r : prime_divisors(n))
        if (!gcd(frob[n / r] - x, g).is_one()) return false;
    return true;
}

Poly Factorization::product() const {
    Poly r = Poly::constant(unit.field(), unit.index());
    for (const auto& [fac, mult] : factors)
        for (int i = 0; i < mult; ++i) r = r * fac;
    return r;
}

std::uint64_t Factorization::divisor_count() const noexcept {
    std::uint64_t n = 1;
    for (const auto& fp : factors) {
        const std::uint64_t m = static_cast<std::uint64_t>(fp.multiplicity) + 1;
        if (n > UINT64_MAX / m) return UINT64_MAX;
        n *= m;
    }
    return n;
}

Poly Factorization::divisor(const std::vector<int>& exponents) const {
    Poly r = Poly::constant(unit.field(), 1);
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (int e = 0; e < exponents[i]; ++e) r = r * factors[i].factor;
    return r;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorKind::Precondition, "cannot factor the zero polynomial");
    Factorization out{FieldElement(f.field(), f.leading()), {}};
    std::vector<std::pair<Poly, int>> sqf;
    squarefree(f.monic(), 1, sqf);

    Rng rng(seed);
    std::vector<std::pair<Poly, int>> irreducibles;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces) irreducibles.emplace_back(std::move(piece), mult);
        }
    }
    std::sort(irreducibles.begin(), irreducibles.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    for (auto& [fac, mult] : irreducibles) {
        if (!out.factors.empty() && out.factors.back().factor == fac)
            out.factors.back().multiplicity += mult;
        else
            out.factors.push_back({std::move(fac), mult});
    }
    return out;
}

Factorization cofactor(const Factorization& fact, const std::vector<int>& exponents) {
    Factorization out{fact.unit, {}};
    for (std::size_t i = 0; i < fact.factors.size(); ++i) {
        const int rest = fact.factors[i].multiplicity - exponents[i];
        if (rest < 0) throw Error(ErrorKind::Precondition, "exponent exceeds factor multiplicity");
        if (rest > 0) out.factors.push_back({fact.factors[i].factor, rest});
    }
    return out;
}

// reach[i][s] records whether factors i.. can contribute total degree s, so the smallest
// completion of any prefix is found greedily.
namespace detail {

struct LevelWalker {
    std::vector<int> degrees;
    std::vector<int> bounds;
    std::vector<std::vector<char>> reach;

    explicit LevelWalker(const Factorization& fact) {
        for (const auto& fp : fact.factors) {
            degrees.push_back(fp.factor.degree());
            bounds.push_back(fp.multiplicity);
        }
        int total = 0;
        for (std::size_t i = 0; i < degrees.size(); ++i) total += degrees[i] * bounds[i];
        const std::size_t r = degrees.size();
        reach.assign(r + 1, std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
        reach[r][0] = 1;
        for (std::size_t i = r; i-- > 0;)
            for (int s = 0; s <= total; ++s) {
                if (!reach[i + 1][s]) continue;
                for (int e = 0; e <= bounds[i] && s + e * degrees[i] <= total; ++e)
                    reach[i][s + e * degrees[i]] = 1;
            }
    }

    int total() const { return static_cast<int>(reach[0].size()) - 1; }

    bool reachable(std::size_t i, int target) const {
        return target >= 0 && target <= total() && reach[i][target];
    }

    // Smallest completion of positions from..end with the given target; false if none.
    bool complete(std::vector<int>& e, std::size_t from, int target) const {
        if (!reachable(from, target)) return false;
        for (std::size_t i = from; i < degrees.size(); ++i) {
            int v = 0;
            while (!reachable(i + 1, target - v * degrees[i])) ++v;
            e[i] = v;
            target -= v * degrees[i];
        }
        return true;
    }

    bool first(std::vector<int>& e, int level) const {
        e.assign(degrees.size(), 0);
        return complete(e, 0, level);
    }

    bool advance(std::vector<int>& e) const {
        std::vector<int> prefix_sum(degrees.size() + 1, 0);
        for (std::size_t i = 0; i < degrees.size(); ++i)
            prefix_sum[i + 1] = prefix_sum[i] + e[i] * degrees[i];
        const int level = prefix_sum.back();
        for (std::size_t j = degrees.size(); j-- > 0;) {
            for (int v = e[j] + 1; v <= bounds[j]; ++v) {
                const int prefix = prefix_sum[j] + v * degrees[j];
                std::vector<int> trial = e;
                trial[j] = v;
                if (complete(trial, j + 1, level - prefix)) {
                    e = std::move(trial);
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace detail

DivisorStream::DivisorStream(Factorization fact, int min_degree, int max_degree)
    : fact_(std::move(fact)),
      walker_(std::make_unique<detail::LevelWalker>(fact_)),
      max_degree_(max_degree),
      level_(std::max(0, min_degree)) {
    if (max_degree_ < 0 || max_degree_ > walker_->total()) max_degree_ = walker_->total();
}

DivisorStream::~DivisorStream() = default;
DivisorStream::DivisorStream(DivisorStream&&) noexcept = default;
DivisorStream& DivisorStream::operator=(DivisorStream&&) noexcept = default;

std::optional<Divisor> DivisorStream::next() {
    if (has_current_ && walker_->advance(current_))
        return Divisor{fact_.divisor(current_), current_};
    if (has_current_) ++level_;
    has_current_ = false;
    for (; level_ <= max_degree_; ++level_) {
        if (walker_->first(current_, level_)) {
            has_current_ = true;
            return Divisor{fact_.divisor(current_), current_};
        }
    }
    return std::nullopt;
}

std::vector<Poly> enumerate_divisors(const Factorization& fact, int min_degree, int max_degree) {
    std::vector<Poly> out;
    DivisorStream stream(fact, min_degree, max_degree);
    while (auto d = stream.next()) out.push_back(std::move(d->poly));
    return out;
}

Poly make_trinomial(int n, int i, const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field(), b.field());
    if (i <= 0 || i >= n)
        throw Error(ErrorKind::Precondition, "trinomial needs 0 < i < n (got n=" +
                                                 std::to_string(n) + ", i=" + std::to_string(i) + ")");
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::Precondition, "trinomial coefficients a and b must be nonzero");
    const Field f = a.field();
    std::vector<Elem> c(static_cast<std::size_t>(n) + 1, 0);
    c[n] = 1;
    c[i] = f->neg(a.index());
    c[0] = f->neg(b.index());
    return Poly(f, std::move(c));
}

Poly make_multinomial(int n, const Poly& v) {
    if (n < 1 || v.degree() >= n)
        throw Error(ErrorKind::Precondition, "multinomial x^n - v(x) needs deg v < n");
    return Poly::monomial(v.field(), n) - v;
}

namespace {

std::string strip(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
    return s;
}

}  // namespace

Poly poly_parse(std::string_view text, Field field) {
    const std::string s = strip(text);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial string");
    std::vector<Elem> c;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            const std::size_t end = std::min(s.find(',', pos), s.size());
            const std::string tok = s.substr(pos, end - pos);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                throw Error(ErrorKind::Parse, "bad coefficient '" + tok + "' in '" + s + "'");
            const long v = std::stol(tok);
            if (v >= field.q())
                throw Error(ErrorKind::Parse,
                            "coefficient " + tok + " is not an element of " + field->name());
            c.push_back(static_cast<Elem>(v));
            pos = end + 1;
        }
    } else {
        for (char ch : s) c.push_back(symbol_decode(ch, field).index());
    }
    return Poly(field, std::move(c));
}

std::string poly_format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    if (has_symbol_alphabet(p.field())) {
        for (Elem c : p.coeffs()) out.push_back(symbol_encode(FieldElement(p.field(), c)));
    } else {
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            out += (i ? "," : "") + std::to_string(p.coeffs()[i]);
    }
    return out;
}

std::vector<PolyReading> poly_parse_variants(std::string_view text, Field field) {
    const std::string s = strip(text);
    std::vector<PolyReading> out;
    auto add = [&](const std::string& tokens) {
        try {
            Poly p = poly_parse(tokens, field);
            for (const auto& r : out)
                if (r.poly == p) return;
            out.push_back({tokens, std::move(p)});
        } catch (const Error&) {
        }
    };
    add(s);
    if (s.find(',') != std::string::npos || field.q() <= 10 || !has_symbol_alphabet(field))
        return out;

    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == '1' && s[i + 1] == '0') pairs.push_back(i++);
    constexpr std::size_t kMaxPairs = 12;
    if (pairs.size() > kMaxPairs) pairs.resize(kMaxPairs);
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
        std::string tokens;
        std::size_t pos = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!(mask & (1u << b))) continue;
            tokens += s.substr(pos, pairs[b] - pos);
            tokens.push_back('A');
            pos = pairs[b] + 2;
        }
        tokens += s.substr(pos);
        add(tokens);
    }
    return out;
}

Poly parse_expression(std::string_view text, Field field) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    // Accept Python-style powers.
    for (std::size_t pos; (pos = s.find("**")) != std::string::npos;) s.replace(pos, 2, "^");
    if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial expression");

    const FieldSpec& F = field.spec();
    std::map<int, Elem> terms;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::Parse, why + " at position " + std::to_string(i) + " in '" + s + "'");
    };
    auto read_int = [&]() {
        long long v = 0;
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) fail("number too large");
            ++i;
        }
        if (i == start) fail("expected a number");
        return v;
    };
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-'");
        }
        Elem coef = 1;
        bool has_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            const long long v = read_int();
            if (F.is_prime()) {
                coef = F.from_int(v);
            } else {
                if (v >= F.q()) fail("coefficient is not an element index of " + F.name());
                coef = static_cast<Elem>(v);
            }
            has_coef = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        int power = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                power = static_cast<int>(read_int());
            }
        } else if (!has_coef) {
            fail("expected a term");
        }
        if (negative) coef = F.neg(coef);
        terms[power] = F.add(terms[power], coef);
    }
    const int deg = terms.rbegin()->first;
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1, 0);
    for (const auto& [pw, v] : terms) c[pw] = v;
    return Poly(field, std::move(c));
}

std::string format_expression(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Elem c = p.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        const bool show_coef = c != 1 || i == 0;
        if (show_coef) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly parse_poly_any(std::string_view text, Field field) {
    const bool algebraic = text.find_first_of("xX+-^") != std::string_view::npos;
    return algebraic ? parse_expression(text, field) : poly_parse(text, field);
}

}  // namespace polycss
