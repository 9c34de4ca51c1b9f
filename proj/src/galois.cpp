#include "polycss/galois.hpp"

#include <algorithm>
#include <array>
#include <memory>

namespace polycss {
namespace {

constexpr std::array<int, 16> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29};

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Small helpers over GF(p) on ascending coefficient vectors; only used while building tables.
using Digits = std::vector<int>;

Digits to_digits(int v, int p, int len) {
    Digits d(len);
    for (int i = 0; i < len; ++i, v /= p) d[i] = v % p;
    return d;
}

int from_digits(const Digits& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

// Remainder of a modulo monic b over GF(p).
Digits mod_monic(Digits a, const Digits& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::min<std::size_t>(a.size(), db));
    return a;
}

bool is_irreducible(const Digits& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            Digits g = to_digits(v, p, d);
            g.push_back(1);
            Digits r = mod_monic(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

Digits least_irreducible(int p, int m) {
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
        Digits f = to_digits(v, p, m);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::UnsupportedField, "no irreducible polynomial found");
}

}  // namespace

FieldSpec::FieldSpec(int p, int m) : p_(p), m_(m), q_(1) {
    for (int i = 0; i < m; ++i) q_ *= p;
    modulus_ = m == 1 ? Digits{0, 1} : least_irreducible(p, m);

    for (int a = 0; a < q_; ++a) {
        const Digits da = to_digits(a, p, m);
        for (int b = 0; b < q_; ++b) {
            const Digits db = to_digits(b, p, m);
            Digits sum(m);
            for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
            add_[a * q_ + b] = static_cast<Elem>(from_digits(sum, p));

            Digits prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            Digits r = m == 1 ? prod : mod_monic(prod, modulus_, p);
            r.resize(m, 0);
            mul_[a * q_ + b] = static_cast<Elem>(from_digits(r, p));
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add_[a * q_ + b] == 0) neg_[a] = static_cast<Elem>(b);
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
        }
        root_[pow(static_cast<Elem>(a), static_cast<std::uint64_t>(p))] = static_cast<Elem>(a);
    }
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

Elem FieldSpec::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + name());
    return inv_[a];
}

Elem FieldSpec::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = 1;
    while (e != 0) {
        if (e & 1u) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem FieldSpec::from_int(long long v) const noexcept {
    const long long r = ((v % p_) + p_) % p_;
    return static_cast<Elem>(r);
}

const FieldSpec& Field::spec() const {
    if (spec_ == nullptr) throw Error(ErrorKind::Precondition, "use of an uninitialized Field");
    return *spec_;
}

namespace {

const std::vector<std::unique_ptr<FieldSpec>>& registry() {
    static const std::vector<std::unique_ptr<FieldSpec>> fields = [] {
        std::vector<std::unique_ptr<FieldSpec>> out;
        for (int q : kOrders) {
            int p = 2;
            while (q % p != 0) ++p;
            int m = 0;
            for (int r = q; r > 1; r /= p) ++m;
            out.push_back(std::make_unique<FieldSpec>(p, m));
        }
        return out;
    }();
    return fields;
}

}  // namespace

Field make_field(int p, int m) {
    if (!is_prime(p)) throw Error(ErrorKind::UnsupportedField, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::UnsupportedField, "extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < m && q <= kMaxFieldOrder; ++i) q *= p;
    if (q > kMaxFieldOrder)
        throw Error(ErrorKind::UnsupportedField,
                    "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 29");
    for (const auto& spec : registry())
        if (spec->q() == q) return Field(spec.get());
    throw Error(ErrorKind::UnsupportedField, "unsupported field order " + std::to_string(q));
}

std::span<const int> supported_field_orders() { return kOrders; }

bool is_supported_field_order(int q) noexcept {
    return std::find(kOrders.begin(), kOrders.end(), q) != kOrders.end();
}

Field field_of_order(int q) {
    if (!is_supported_field_order(q)) {
        std::string list;
        for (int o : kOrders) list += (list.empty() ? "" : ",") + std::to_string(o);
        throw Error(ErrorKind::UnsupportedField,
                    "unsupported field order " + std::to_string(q) + " (supported: " + list + ")");
    }
    int p = 2;
    while (q % p != 0) ++p;
    int m = 0;
    for (int r = q; r > 1; r /= p) ++m;
    return make_field(p, m);
}

void require_same_field(Field a, Field b) {
    if (!(a == b))
        throw Error(ErrorKind::FieldMismatch,
                    "operands from different fields: " + a->name() + " vs " + b->name());
}

FieldElement::FieldElement(Field field, Elem index) : field_(field), index_(index) {
    if (index >= field->q())
        throw Error(ErrorKind::Precondition,
                    "element index " + std::to_string(index) + " outside " + field->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->add(index_, o.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->sub(index_, o.index_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->mul(index_, o.index_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->div(index_, o.index_)};
}

bool has_symbol_alphabet(Field field) { return field.q() <= kMaxSymbolFieldOrder; }

char symbol_encode(const FieldElement& e) {
    if (!has_symbol_alphabet(e.field()))
        throw Error(ErrorKind::Precondition,
                    e.field()->name() + " has no single-character symbol alphabet");
    const int v = e.index();
    return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + (v - 10));
}

FieldElement symbol_decode(char c, Field field) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'A' && c <= 'H') v = 10 + (c - 'A');
    else if (c >= 'a' && c <= 'h') v = 10 + (c - 'a');
    if (v < 0 || v >= field.q())
        throw Error(ErrorKind::Parse,
                    std::string("symbol '") + c + "' is not an element of " + field->name());
    return {field, static_cast<Elem>(v)};
}

}  // namespace polycss
