#pragma once

#include <array>

#include "pib4/binary_form.hpp"

namespace pib4 {

/// Integer quadratic form in three variables:
///   cxx x^2 + cxy xy + cyy y^2 + cxz xz + cyz yz + czz z^2.
struct TernaryQuadratic {
    BigInt cxx, cxy, cyy, cxz, cyz, czz;

    BigInt eval(const BigInt& x, const BigInt& y, const BigInt& z) const {
        return cxx * x * x + cxy * x * y + cyy * y * y + cxz * x * z + cyz * y * z + czz * z * z;
    }

    /// Polarization Q(a+b) - Q(a) - Q(b).
    BigInt polar(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) const {
        return 2 * cxx * a[0] * b[0] + cxy * (a[0] * b[1] + a[1] * b[0]) + 2 * cyy * a[1] * b[1] +
               cxz * (a[0] * b[2] + a[2] * b[0]) + cyz * (a[1] * b[2] + a[2] * b[1]) +
               2 * czz * a[2] * b[2];
    }

    bool is_zero() const {
        return cxx == 0 && cxy == 0 && cyy == 0 && cxz == 0 && cyz == 0 && czz == 0;
    }

    /// Q(fx, fy, fz) for binary forms of a common degree k; result has degree 2k.
    BinaryForm compose(const BinaryForm& fx, const BinaryForm& fy, const BinaryForm& fz) const {
        return fx * fx * cxx + fx * fy * cxy + fy * fy * cyy + fx * fz * cxz + fy * fz * cyz +
               fz * fz * czz;
    }

    TernaryQuadratic scaled(const BigInt& s) const {
        return {cxx * s, cxy * s, cyy * s, cxz * s, cyz * s, czz * s};
    }

    TernaryQuadratic operator-(const TernaryQuadratic& o) const {
        return {cxx - o.cxx, cxy - o.cxy, cyy - o.cyy, cxz - o.cxz, cyz - o.cyz, czz - o.czz};
    }

    bool operator==(const TernaryQuadratic& o) const = default;
};

}  // namespace pib4
