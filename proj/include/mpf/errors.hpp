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

#ifndef MPF_ERRORS_HPP
#define MPF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpf {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Multiplying two coefficients that are both non-constant in sigma would
/// leave the linear-in-sigma coefficient ring.
struct DegreeOverflowInSigma : Error {
    DegreeOverflowInSigma()
        : Error("product of two sigma-linear values with nonzero slopes "
                "leaves the linear ring") {}
};

/// An operation that needs a nonzero polynomial received the zero polynomial.
struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& where)
        : Error("zero polynomial not allowed in " + where) {}
};

/// Numeric critical-point evaluation rejected because lambda1 == lambda2.
struct DiagonalPointError : Error {
    DiagonalPointError() : Error("diagonal point lambda1 == lambda2") {}
};

/// w_H + lambda1 * w_K vanished at the evaluation point.
struct CriticalDenominatorZero : Error {
    CriticalDenominatorZero() : Error("w_H + lambda1*w_K == 0 at point") {}
};

/// A principal curvature was not strictly positive.
struct NonpositiveCurvature : Error {
    NonpositiveCurvature() : Error("principal curvatures must be > 0") {}
};

/// The denominator q is not strictly positive, so the monotonicity
/// condition on w(rho,1) has no meaning.
struct ConditionIPrerequisiteFailed : Error {
    ConditionIPrerequisiteFailed()
        : Error("condition III requires q > 0 on (0,inf)") {}
};

/// Case classification is undefined when a first nonzero coefficient is
/// negative (such a candidate can never satisfy condition I).
struct NonPositiveLeadingCoefficient : Error {
    explicit NonPositiveLeadingCoefficient(const std::string& which)
        : Error("first nonzero coefficient of " + which + " is negative") {}
};

/// Case parameters violate the (k,l) bucket bounds.
struct InvalidCaseParams : Error {
    explicit InvalidCaseParams(const std::string& why)
        : Error("invalid case parameters: " + why) {}
};

/// A candidate satisfied every condition during a sweep that must find none.
struct TheoremViolationFound : Error {
    explicit TheoremViolationFound(const std::string& dump)
        : Error("sweep found a passing candidate: " + dump) {}
};

} // namespace mpf

#endif
