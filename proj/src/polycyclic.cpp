#include "polycss/polycyclic.hpp"

namespace polycss {

AmbientRing::AmbientRing(int n, Poly v) : n_(n), v_(std::move(v)), f_(v_.field()) {
    if (n < 1) throw Error(ErrorKind::Precondition, "ring length must be positive");
    if (v_.degree() >= n)
        throw Error(ErrorKind::Precondition, "deg v must be below n = " + std::to_string(n));
    f_ = Poly::monomial(v_.field(), n) - v_;
}

AmbientRing AmbientRing::from_modulus(const Poly& f) {
    if (f.degree() < 1) throw Error(ErrorKind::Precondition, "modulus must have positive degree");
    const Poly m = f.monic();
    return AmbientRing(m.degree(), Poly::monomial(m.field(), m.degree()) - m);
}

Word to_word(const Poly& p, int n) {
    if (p.degree() >= n)
        throw Error(ErrorKind::Precondition, "polynomial of degree " + std::to_string(p.degree()) +
                                                 " does not fit length " + std::to_string(n));
    Word w(static_cast<std::size_t>(n), 0);
    std::copy(p.coeffs().begin(), p.coeffs().end(), w.begin());
    return w;
}

Word polycyclic_shift(std::span<const Elem> w, const Poly& v) {
    const int n = static_cast<int>(w.size());
    if (n == 0 || v.degree() >= n)
        throw Error(ErrorKind::Precondition, "shift vector does not match word length");
    const FieldSpec& F = v.field().spec();
    Word out(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) out[i] = w[i - 1];
    const Elem top = w[n - 1];
    if (top != 0)
        for (int i = 0; i <= v.degree(); ++i) out[i] = F.add(out[i], F.mul(top, v.coeff(i)));
    return out;
}

LinearCode span_code(const Poly& h, int n) {
    if (h.is_zero()) throw Error(ErrorKind::Precondition, "span of the zero polynomial");
    if (h.degree() >= n)
        throw Error(ErrorKind::Precondition, "deg h = " + std::to_string(h.degree()) +
                                                 " must be below n = " + std::to_string(n));
    Matrix rows;
    for (int j = 0; j + h.degree() < n; ++j) rows.push_back(to_word(h.shifted(j), n));
    return LinearCode::from_rows(h.field(), n, rows);
}

LinearCode ideal_code(const Poly& g, const AmbientRing& ring) {
    require_same_field(g.field(), ring.field());
    if (g.is_zero() || !divides(g, ring.modulus()))
        throw Error(ErrorKind::Precondition,
                    "not a divisor: " + poly_format(g) + " does not divide " + format_expression(ring.modulus()));
    if (g.degree() == ring.length()) return LinearCode::zero(ring.field(), ring.length());
    return span_code(g, ring.length());
}

bool is_shift_closed(const LinearCode& c, const Poly& v) {
    for (const Word& row : c.generator())
        if (!c.contains_word(polycyclic_shift(row, v))) return false;
    return true;
}

}  // namespace polycss
