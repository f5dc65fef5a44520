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

#ifndef MPF_RATIONAL_HPP
#define MPF_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mpf/errors.hpp"

namespace mpf {

/// Exact rational coefficient field. GMP keeps values canonical
/// (gcd(|num|,den) = 1, den > 0); no operation ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Parses "a/b" or "a". Returns nullopt on malformed input or zero
/// denominator.
inline std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (sgn(Rat(r.get_den())) == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

/// Serializes as "a/b", or "a" when the denominator is 1.
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_pow(const Rat& x, unsigned long e) {
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_num_mpz_t(), x.get_den_mpz_t(), e);
    mpq_set_den(num.get_mpq_t(), den.get_num_mpz_t());
    num.canonicalize();
    return num;
}

inline Int int_pow(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

} // namespace mpf

#endif
