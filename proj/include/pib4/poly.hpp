#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pib4/bigint.hpp"

namespace pib4 {

template <class R>
class PolyT;

using UniPoly = PolyT<BigInt>;

namespace ring {

inline bool is_zero(const BigInt& a) { return a == 0; }
inline BigInt one(const BigInt*) { return BigInt(1); }
inline BigInt div_exact(const BigInt& a, const BigInt& b) { return exact_div(a, b); }

template <class R>
bool is_zero(const PolyT<R>& p);
template <class R>
PolyT<R> one(const PolyT<R>*);
template <class R>
PolyT<R> div_exact(const PolyT<R>& a, const PolyT<R>& b);

}  // namespace ring

/// Dense univariate polynomial over an integral domain R, coefficients stored
/// lowest degree first with no trailing zeros (empty vector = zero polynomial).
template <class R>
class PolyT {
  public:
    PolyT() = default;
    explicit PolyT(R c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit PolyT(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyT monomial(const R& c, size_t deg) {
        std::vector<R> v(deg + 1);
        v[deg] = c;
        return PolyT(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& lc() const {
        if (is_zero()) throw std::domain_error("lc of zero polynomial");
        return coeffs_.back();
    }
    R coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }

    PolyT operator-() const {
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = R{} - c;
        return r;
    }
    PolyT operator+(const PolyT& o) const {
        std::vector<R> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
        return PolyT(std::move(v));
    }
    PolyT operator-(const PolyT& o) const {
        std::vector<R> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
        return PolyT(std::move(v));
    }
    PolyT operator*(const PolyT& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<R> v(coeffs_.size() + o.coeffs_.size() - 1);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
        return PolyT(std::move(v));
    }
    PolyT operator*(const R& s) const {
        PolyT r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    bool operator==(const PolyT& o) const { return coeffs_ == o.coeffs_; }

    PolyT shifted(size_t k) const {  // multiply by x^k
        if (is_zero()) return {};
        std::vector<R> v(coeffs_.size() + k);
        std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
        return PolyT(std::move(v));
    }

    PolyT derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> v(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) {
            R k{};
            for (size_t j = 0; j < i; ++j) k = k + ring::one(static_cast<const R*>(nullptr));
            v[i - 1] = coeffs_[i] * k;
        }
        return PolyT(std::move(v));
    }

    template <class S>
    S eval(const S& x) const {
        S acc{};
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
        return acc;
    }

  private:
    std::vector<R> coeffs_;
    void trim() {
        while (!coeffs_.empty() && ring::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
};

namespace ring {

template <class R>
bool is_zero(const PolyT<R>& p) { return p.is_zero(); }
template <class R>
PolyT<R> one(const PolyT<R>*) { return PolyT<R>(one(static_cast<const R*>(nullptr))); }

/// Exact quotient a/b for polynomials over an integral domain; throws if the
/// division is not exact.
template <class R>
PolyT<R> div_exact(const PolyT<R>& a, const PolyT<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("polynomial division not exact");
    std::vector<R> rem(a.coeffs());
    long db = b.degree();
    std::vector<R> quot(a.degree() - db + 1);
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
        R& lead = rem[i + db];
        if (is_zero(lead)) continue;
        R qc = div_exact(lead, b.lc());
        quot[i] = qc;
        for (long j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - qc * b.coeff(j);
    }
    for (auto& c : rem)
        if (!is_zero(c)) throw std::domain_error("polynomial division not exact");
    return PolyT<R>(std::move(quot));
}

}  // namespace ring

/// Resultant of a and b via the subresultant pseudo-remainder sequence
/// (Cohen, Alg. 3.3.7, without the content extraction step).
template <class R>
R resultant(PolyT<R> a, PolyT<R> b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        R r = ring::one(static_cast<const R*>(nullptr));
        for (long i = 0; i < a.degree(); ++i) r = r * b.lc();
        return negate ? R{} - r : r;
    }
    R g = ring::one(static_cast<const R*>(nullptr));
    R h = g;
    while (true) {
        long da = a.degree(), db = b.degree();
        long delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        // prem(a, b): remainder of lc(b)^(delta+1) * a by b
        PolyT<R> r = a;
        {
            R mult = ring::one(static_cast<const R*>(nullptr));
            for (long i = 0; i <= delta; ++i) mult = mult * b.lc();
            r = r * PolyT<R>(mult);
            while (!r.is_zero() && r.degree() >= db) {
                long k = r.degree() - db;
                R qc = ring::div_exact(r.lc(), b.lc());
                r = r - PolyT<R>::monomial(qc, static_cast<size_t>(k)) * b;
            }
        }
        if (r.is_zero()) return R{};  // common factor
        R hd = h;
        for (long i = 1; i < delta; ++i) hd = hd * h;  // h^delta (delta>=0; empty product = 1 handled below)
        if (delta == 0) hd = ring::one(static_cast<const R*>(nullptr));
        a = b;
        b = ring::div_exact(r, PolyT<R>(g * hd));
        g = a.lc();
        if (delta > 0) {
            R gd = g;
            for (long i = 1; i < delta; ++i) gd = gd * g;
            R hprev = ring::one(static_cast<const R*>(nullptr));
            for (long i = 1; i < delta; ++i) hprev = hprev * h;
            h = ring::div_exact(gd, hprev);
        }
        if (b.degree() <= 0) {
            if (b.is_zero()) return R{};
            long da2 = a.degree();
            R num = b.lc();
            for (long i = 1; i < da2; ++i) num = num * b.lc();
            R den = ring::one(static_cast<const R*>(nullptr));
            for (long i = 1; i < da2; ++i) den = den * h;
            R res = ring::div_exact(num, den);
            return negate ? R{} - res : res;
        }
    }
}

/// Content (gcd of coefficients, nonnegative) of an integer polynomial.
inline BigInt content(const UniPoly& p) {
    BigInt c = 0;
    for (const auto& a : p.coeffs()) c = gcd(c, a);
    return c;
}

inline UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.lc() < 0) c = -c;
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) v.push_back(exact_div(a, c));
    return UniPoly(std::move(v));
}

/// gcd over Z, primitive with positive leading coefficient (up to the gcd of
/// the contents).
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    BigInt cont_gcd = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        long delta = a.degree() - b.degree();
        BigInt mult = pow_ui(b.lc(), static_cast<unsigned long>(delta) + 1);
        UniPoly r = a * mult;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            BigInt qc = exact_div(r.lc(), b.lc());
            r = r - UniPoly::monomial(qc, static_cast<size_t>(r.degree() - b.degree())) * b;
        }
        a = b;
        b = r.is_zero() ? UniPoly{} : primitive_part(r);
        if (!b.is_zero() && a.degree() < b.degree()) std::swap(a, b);
    }
    return primitive_part(a) * cont_gcd;
}

/// disc(p) = (-1)^(d(d-1)/2) res(p, p') / lc(p); requires deg >= 2.
inline BigInt discriminant(const UniPoly& p) {
    if (p.degree() < 2) throw std::invalid_argument("discriminant: degree < 2");
    BigInt r = resultant(p, p.derivative());
    long d = p.degree();
    BigInt s = exact_div(r, p.lc());
    return ((d * (d - 1) / 2) % 2) ? -s : s;
}

}  // namespace pib4
