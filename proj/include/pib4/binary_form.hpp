#pragma once

#include <vector>

#include "pib4/factor.hpp"
#include "pib4/poly.hpp"

namespace pib4 {

/// Homogeneous integer form in (u, v): coefficient of u^(d-i) v^i at index i.
class BinaryForm {
  public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<BigInt> coeffs);

    int degree() const { return degree_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const;

    BigInt eval(const BigInt& u, const BigInt& v) const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;  // degrees add
    BinaryForm operator*(const BigInt& s) const;
    BinaryForm operator-() const;
    bool operator==(const BinaryForm& o) const;

    /// F(m11*a + m12*b, m21*a + m22*b), expanded exactly.
    BinaryForm substituted(const BigInt& m11, const BigInt& m12, const BigInt& m21,
                           const BigInt& m22) const;

    /// p(u) = F(u, 1), coefficients ascending.
    UniPoly dehomogenized() const;

    /// True if o == lambda * this or this == lambda * o for a rational lambda.
    bool proportional_to(const BinaryForm& o) const;

  private:
    int degree_ = 0;
    std::vector<BigInt> c_{BigInt(0)};
};

/// v^d * p(u/v) as a binary form of degree d; requires deg p <= d.
BinaryForm homogenize(const UniPoly& p, int d);

struct FormFactorization {
    BigInt content;                  // content * product(factors) == form
    std::vector<BinaryForm> factors; // irreducible forms, each with its multiplicity expanded
};

/// Factor a nonzero form of degree <= 4 over Q: v-power plus the factorization
/// of the dehomogenization.
FormFactorization factor_form(const BinaryForm& f);

}  // namespace pib4
