#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycss/galois.hpp"

namespace polycss {

// Dense univariate polynomial over GF(q), coefficients in ascending powers of x.
// Canonical form has no trailing zero coefficients; the zero polynomial has no coefficients
// and degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(Field field) : field_(field) {}
    // Throws Error(Precondition) if a coefficient is not an element of the field.
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly constant(Field field, Elem c);
    static Poly monomial(Field field, int degree, Elem c = 1);

    Field field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem coeff(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Elem{0};
    }
    FieldElement at(int i) const { return {field_, coeff(i)}; }
    Elem leading() const noexcept { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }

    Poly monic() const;
    Poly scaled(Elem c) const;
    // Multiplication by x^k.
    Poly shifted(int k) const;
    Elem evaluate(Elem x) const noexcept;
    Poly derivative() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim() noexcept;

    Field field_;
    std::vector<Elem> coeffs_;
};

// Canonical ordering: by degree, then by coefficients from the leading term down.
bool canonical_less(const Poly& a, const Poly& b) noexcept;

struct DivMod {
    Poly quotient;
    Poly remainder;
};

// f = quotient * g + remainder with deg remainder < deg g. Throws Error(DivisionByZero) if g = 0.
DivMod divmod(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

// Monic gcd. gcd(f, 0) = monic(f); gcd(0, 0) throws Error(Precondition).
Poly gcd(const Poly& f, const Poly& g);

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);

// Rabin's irreducibility test.
bool is_irreducible(const Poly& f);

struct FactorPower {
    Poly factor;  // monic irreducible
    int multiplicity;
};

struct Factorization {
    FieldElement unit;
    std::vector<FactorPower> factors;  // sorted by canonical_less on the factor

    Poly product() const;
    // Number of monic divisors, prod(m_i + 1), saturating at UINT64_MAX.
    std::uint64_t divisor_count() const noexcept;
    Poly divisor(const std::vector<int>& exponents) const;
};

// Complete factorization into monic irreducibles: squarefree decomposition, distinct-degree
// splitting, then Cantor-Zassenhaus equal-degree splitting driven by `seed`. The result does not
// depend on the seed. Throws Error(Precondition) for the zero polynomial.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

struct Divisor {
    Poly poly;
    std::vector<int> exponents;  // one entry per factor of the source factorization
};

namespace detail {
struct LevelWalker;
}

// Streams the monic divisors of a factored polynomial in nondecreasing degree order, each exactly
// once. Within a degree, exponent vectors are visited lexicographically (first factor most
// significant); nothing beyond the current vector is materialized.
class DivisorStream {
public:
    explicit DivisorStream(Factorization fact, int min_degree = 0, int max_degree = -1);
    ~DivisorStream();
    DivisorStream(DivisorStream&&) noexcept;
    DivisorStream& operator=(DivisorStream&&) noexcept;

    std::optional<Divisor> next();

    const Factorization& factorization() const noexcept { return fact_; }

private:
    Factorization fact_;
    std::unique_ptr<detail::LevelWalker> walker_;
    int max_degree_;
    int level_;
    std::vector<int> current_;
    bool has_current_ = false;
};

std::vector<Poly> enumerate_divisors(const Factorization& fact, int min_degree = 0,
                                     int max_degree = -1);

// Factorization of f / d, given d as an exponent vector over fact's factors.
Factorization cofactor(const Factorization& fact, const std::vector<int>& exponents);

// x^n - a x^i - b. Requires 0 < i < n and a, b nonzero.
Poly make_trinomial(int n, int i, const FieldElement& a, const FieldElement& b);
// x^n - v(x). Requires deg v < n.
Poly make_multinomial(int n, const Poly& v);

// Table notation: coefficients in ascending powers, leading coefficient rightmost, one symbol
// (0-9, A-H) per coefficient. Fields with q > 18 use comma-separated decimal coefficients.
Poly poly_parse(std::string_view text, Field field);
std::string poly_format(const Poly& p);

// Alternative readings of a table string: the literal one first, then every reading in which some
// "10" digit pairs denote the single element ten. Only fields with 10 < q <= 18 have variants.
struct PolyReading {
    std::string tokens;  // canonical one-symbol-per-coefficient spelling
    Poly poly;
};
std::vector<PolyReading> poly_parse_variants(std::string_view text, Field field);

// Algebraic notation such as "x^11-x-3" or "2x^3 + 5x + 1". Integer coefficients are reduced into
// the prime subfield for prime fields and read as element indices for extension fields.
Poly parse_expression(std::string_view text, Field field);
std::string format_expression(const Poly& p);

// Accepts either the algebraic or the table notation.
Poly parse_poly_any(std::string_view text, Field field);

}  // namespace polycss
