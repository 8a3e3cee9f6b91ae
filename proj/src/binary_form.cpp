#include "pib4/binary_form.hpp"

#include <stdexcept>

namespace pib4 {

BinaryForm::BinaryForm(int degree, std::vector<BigInt> coeffs) : degree_(degree), c_(std::move(coeffs)) {
    if (degree_ < 0 || c_.size() != static_cast<size_t>(degree_) + 1)
        throw std::invalid_argument("BinaryForm: need degree+1 coefficients");
}

bool BinaryForm::is_zero() const {
    for (const auto& a : c_)
        if (a != 0) return false;
    return true;
}

BigInt BinaryForm::eval(const BigInt& u, const BigInt& v) const {
    // Horner in u with running powers of v.
    BigInt acc = c_[0];
    BigInt vp = 1;
    for (int i = 1; i <= degree_; ++i) {
        vp *= v;
        acc = acc * u + c_[static_cast<size_t>(i)] * vp;
    }
    return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
    std::vector<BigInt> v(c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] + o.c_[i];
    return BinaryForm(degree_, std::move(v));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("form degree mismatch");
    std::vector<BigInt> v(c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] - o.c_[i];
    return BinaryForm(degree_, std::move(v));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    std::vector<BigInt> v(static_cast<size_t>(degree_ + o.degree_) + 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return BinaryForm(degree_ + o.degree_, std::move(v));
}

BinaryForm BinaryForm::operator*(const BigInt& s) const {
    std::vector<BigInt> v(c_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return BinaryForm(degree_, std::move(v));
}

BinaryForm BinaryForm::operator-() const { return *this * BigInt(-1); }

bool BinaryForm::operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }

BinaryForm BinaryForm::substituted(const BigInt& m11, const BigInt& m12, const BigInt& m21,
                                   const BigInt& m22) const {
    BinaryForm un(1, {m11, m12});
    BinaryForm vn(1, {m21, m22});
    std::vector<BinaryForm> upow(static_cast<size_t>(degree_) + 1), vpow(static_cast<size_t>(degree_) + 1);
    upow[0] = BinaryForm(0, {BigInt(1)});
    vpow[0] = BinaryForm(0, {BigInt(1)});
    for (int i = 1; i <= degree_; ++i) {
        upow[static_cast<size_t>(i)] = upow[static_cast<size_t>(i - 1)] * un;
        vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i - 1)] * vn;
    }
    std::vector<BigInt> acc(static_cast<size_t>(degree_) + 1, BigInt(0));
    BinaryForm result(degree_, acc);
    for (int i = 0; i <= degree_; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        BinaryForm term = upow[static_cast<size_t>(degree_ - i)] * vpow[static_cast<size_t>(i)];
        result = result + term * c_[static_cast<size_t>(i)];
    }
    return result;
}

UniPoly BinaryForm::dehomogenized() const {
    std::vector<BigInt> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[c_.size() - 1 - i] = c_[i];
    return UniPoly(std::move(v));
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
    if (degree_ != o.degree_) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = i + 1; j < c_.size(); ++j)
            if (c_[i] * o.c_[j] != c_[j] * o.c_[i]) return false;
    return true;
}

BinaryForm homogenize(const UniPoly& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("homogenize: d < deg p");
    std::vector<BigInt> v(static_cast<size_t>(d) + 1, BigInt(0));
    for (long i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(d - i)] = p.coeff(static_cast<size_t>(i));
    return BinaryForm(d, std::move(v));
}

FormFactorization factor_form(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_form: zero form");
    FormFactorization out;
    // v^e divides f exactly when the top e coefficients (u^d, ..., u^(d-e+1)) vanish
    int e = 0;
    while (e <= f.degree() && f.coeff(e) == 0) ++e;
    UniPoly p = f.dehomogenized();  // degree d - e
    auto pf = factor_univariate_deg_le4(p);
    out.content = pf.content;
    for (int i = 0; i < e; ++i) out.factors.push_back(BinaryForm(1, {BigInt(0), BigInt(1)}));
    for (const auto& fac : pf.factors) out.factors.push_back(homogenize(fac, static_cast<int>(fac.degree())));
    return out;
}

}  // namespace pib4
