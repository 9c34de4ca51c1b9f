#pragma once

// Exact arithmetic in GF(q) for the prime powers q <= 29.
//
// Every supported field is built once and interned; a Field is a cheap handle to that shared,
// immutable table set, and two handles compare equal iff they name the same field. Elements are
// canonical integers in [0, q): the residue mod p for prime fields, and for extension fields the
// base-p digits of the residue polynomial, lowest power first.
//
// Extension field moduli are the least monic irreducible of degree m over GF(p), ordered by the
// base-p value of the non-leading coefficients:
//
//   GF(4)  x^2 + x + 1      GF(8)  x^3 + x + 1      GF(16) x^4 + x + 1
//   GF(9)  x^2 + 1          GF(25) x^2 + 2          GF(27) x^3 + 2x + 1

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polycss/error.hpp"

namespace polycss {

using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 29;

class FieldSpec {
public:
    FieldSpec(int p, int m);

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    int q() const noexcept { return q_; }
    bool is_prime() const noexcept { return m_ == 1; }

    // Monic modulus over GF(p), ascending coefficients, length m + 1.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    std::string name() const;

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    // Image of an integer in the prime subfield.
    Elem from_int(long long v) const noexcept;
    // Unique x with x^p = a (Frobenius is bijective on a finite field).
    Elem pth_root(Elem a) const noexcept { return root_[a]; }

private:
    int p_;
    int m_;
    int q_;
    std::vector<int> modulus_;
    std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> add_{};
    std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> mul_{};
    std::array<Elem, kMaxFieldOrder> neg_{};
    std::array<Elem, kMaxFieldOrder> inv_{};
    std::array<Elem, kMaxFieldOrder> root_{};
};

// Handle to an interned FieldSpec.
class Field {
public:
    Field() = default;

    const FieldSpec& spec() const;
    const FieldSpec* operator->() const { return &spec(); }
    int q() const { return spec().q(); }
    bool valid() const noexcept { return spec_ != nullptr; }

    friend bool operator==(Field a, Field b) noexcept { return a.spec_ == b.spec_; }

private:
    friend Field make_field(int p, int m);
    explicit Field(const FieldSpec* spec) : spec_(spec) {}

    const FieldSpec* spec_ = nullptr;
};

// Throws Error(UnsupportedField) for non-prime p or p^m > 29.
Field make_field(int p, int m = 1);
// Field of order q; q must be one of supported_field_orders().
Field field_of_order(int q);
std::span<const int> supported_field_orders();
bool is_supported_field_order(int q) noexcept;

// Throws Error(FieldMismatch) unless a == b.
void require_same_field(Field a, Field b);

class FieldElement {
public:
    // Throws Error(Precondition) when index >= q.
    FieldElement(Field field, Elem index);

    static FieldElement from_int(Field field, long long v) { return {field, field->from_int(v)}; }

    Field field() const noexcept { return field_; }
    Elem index() const noexcept { return index_; }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const { return {field_, field_->neg(index_)}; }
    FieldElement inv() const { return {field_, field_->inv(index_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }

private:
    Field field_;
    Elem index_;
};

// Table alphabet: 0-9 then A-H for 10..17. Only fields with q <= 18 have a single-character form.
inline constexpr int kMaxSymbolFieldOrder = 18;

bool has_symbol_alphabet(Field field);
char symbol_encode(const FieldElement& e);
FieldElement symbol_decode(char c, Field field);

}  // namespace polycss
