/*
   Copyright 2026 The mpfcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MPF_SIGMA_LINEAR_HPP
#define MPF_SIGMA_LINEAR_HPP

#include <string>

#include "mpf/errors.hpp"
#include "mpf/rational.hpp"

namespace mpf {

/// A value a*sigma + b over exact rationals. The constant and gradient
/// cofactors are affine in sigma, so this small ring is enough to build
/// them symbolically; sign questions are answered after specializing
/// sigma to a rational.
struct SigmaLinear {
    Rat a; // slope in sigma
    Rat b; // constant part

    SigmaLinear() : a(0), b(0) {}
    SigmaLinear(Rat slope, Rat constant) : a(std::move(slope)), b(std::move(constant)) {}
    /// Implicit lift of a sigma-free rational.
    SigmaLinear(const Rat& constant) : a(0), b(constant) {}
    SigmaLinear(int constant) : a(0), b(constant) {}

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    Rat at(const Rat& sigma) const { return a * sigma + b; }

    SigmaLinear operator-() const { return {-a, -b}; }
    SigmaLinear& operator+=(const SigmaLinear& o) { a += o.a; b += o.b; return *this; }
    SigmaLinear& operator-=(const SigmaLinear& o) { a -= o.a; b -= o.b; return *this; }

    friend SigmaLinear operator+(SigmaLinear x, const SigmaLinear& y) { return x += y; }
    friend SigmaLinear operator-(SigmaLinear x, const SigmaLinear& y) { return x -= y; }

    // Rejected when both factors have nonzero slope: the result would be
    // quadratic in sigma.
    friend SigmaLinear operator*(const SigmaLinear& x, const SigmaLinear& y) {
        if (sgn(x.a) != 0 && sgn(y.a) != 0) throw DegreeOverflowInSigma();
        return {x.a * y.b + y.a * x.b, x.b * y.b};
    }

    friend bool operator==(const SigmaLinear& x, const SigmaLinear& y) {
        return x.a == y.a && x.b == y.b;
    }

    std::string str() const {
        if (sgn(a) == 0) return rat_str(b);
        std::string s = rat_str(a) + "*s";
        if (sgn(b) > 0) s += "+" + rat_str(b);
        if (sgn(b) < 0) s += rat_str(b);
        return s;
    }
};

inline bool is_zero(const SigmaLinear& x) { return x.is_zero(); }

} // namespace mpf

#endif
