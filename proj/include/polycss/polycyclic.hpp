#pragma once

#include <span>

#include "polycss/linear_code.hpp"
#include "polycss/poly.hpp"

namespace polycss {

// The factor ring GF(q)[x] / <x^n - v(x)> with deg v < n.
class AmbientRing {
public:
    // From the shift vector v (deg v < n).
    AmbientRing(int n, Poly v);
    // From a modulus of degree n >= 1; a non-monic modulus is scaled to be monic.
    static AmbientRing from_modulus(const Poly& f);

    Field field() const noexcept { return v_.field(); }
    int length() const noexcept { return n_; }
    const Poly& v() const noexcept { return v_; }
    const Poly& modulus() const noexcept { return f_; }

private:
    int n_;
    Poly v_;
    Poly f_;
};

// Right polycyclic shift: (0, c_0, ..., c_{n-2}) + c_{n-1} (v_0, ..., v_{n-1}).
Word polycyclic_shift(std::span<const Elem> w, const Poly& v);

// <g> in the ring: rows x^j g(x), j < n - deg g. Requires g | f (Error(Precondition), "not a
// divisor", otherwise).
LinearCode ideal_code(const Poly& g, const AmbientRing& ring);

// Span of the unreduced shifts x^j h(x), j < n - deg h. Requires deg h < n. Coincides with
// ideal_code when h | f; otherwise generally not shift-closed.
LinearCode span_code(const Poly& h, int n);
inline LinearCode span_code(const Poly& h, const AmbientRing& ring) {
    return span_code(h, ring.length());
}

bool is_shift_closed(const LinearCode& c, const Poly& v);

// Coefficient vector of p padded to length n (deg p < n).
Word to_word(const Poly& p, int n);

}  // namespace polycss
