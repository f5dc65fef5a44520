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

#ifndef MPF_TEST_UTIL_HPP
#define MPF_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "mpf/flow_terms.hpp"
#include "mpf/hk_poly.hpp"
#include "mpf/poly.hpp"

namespace mpf::test {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long seed) : eng(seed) {}

    long uniform(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }

    Rat rat(long lo, long hi, long den_max = 8) {
        Rat r(uniform(lo, hi), uniform(1, den_max));
        r.canonicalize();
        return r;
    }

    Rat positive_rat(long hi = 9, long den_max = 8) {
        Rat r(uniform(1, hi), uniform(1, den_max));
        r.canonicalize();
        return r;
    }
};

inline RhoPoly random_rho_poly(Rng& rng, long max_deg, long lo = -9, long hi = 9) {
    long d = rng.uniform(0, max_deg);
    std::vector<Rat> c(size_t(d) + 1);
    for (Rat& x : c) x = rng.rat(lo, hi);
    return RhoPoly(std::move(c), d);
}

inline HKPoly random_hk(Rng& rng, long g, long lo = -9, long hi = 9) {
    for (;;) {
        HKPoly p = HKPoly::zero(g);
        for (Rat& c : p.coeffs) c = rng.rat(lo, hi);
        if (!p.is_zero()) return p;
    }
}

/// First k-1 coefficients zero, coefficient k positive, tail arbitrary.
/// Requires k <= g/2 + 1.
inline HKPoly random_hk_with_index(Rng& rng, long g, long k) {
    HKPoly p = HKPoly::zero(g);
    p.coeffs[size_t(k - 1)] = rng.positive_rat();
    for (size_t i = size_t(k); i < p.coeffs.size(); ++i) p.coeffs[i] = rng.rat(-9, 9);
    return p;
}

/// Nonnegative coefficients, not all zero: strictly positive on the open
/// quadrant.
inline HKPoly random_hk_nonneg(Rng& rng, long g) {
    for (;;) {
        HKPoly p = HKPoly::zero(g);
        for (Rat& c : p.coeffs) c = Rat(rng.uniform(0, 6));
        if (!p.is_zero()) return p;
    }
}

inline Candidate random_candidate(Rng& rng, long g_cap, const Rat& sigma) {
    long g = rng.uniform(1, g_cap);
    long h = rng.uniform(0, g); // h can reach g; most call sites only need nonzero p, q
    return Candidate(random_hk(rng, g), random_hk(rng, h), sigma);
}

/// Candidates passing conditions I-III by construction plus rejection:
/// p = (H^2-4K) * u with u >= 0, q > 0, checked for the monotonicity
/// condition by the caller.
inline Candidate random_i_candidate(Rng& rng, const Rat& sigma) {
    long du = rng.uniform(0, 4);
    long g = 2 + du;
    long h = rng.uniform(0, g - 1);
    HKPoly sq(2, {Rat(1), Rat(-4)});
    HKPoly u = random_hk_nonneg(rng, du);
    return Candidate(hk_mul(sq, u), random_hk_nonneg(rng, h), sigma);
}

/// Distinct-real-root count on (lo, hi] by exhaustive sign-change scanning
/// on a refining rational grid: the independent oracle for the Sturm path.
/// Counts exact zero hits plus sign alternations; the density doubles until
/// three consecutive levels agree (a single agreement can still straddle a
/// narrow sign window between close roots).
inline long grid_scan_roots(const RhoPoly& p, const Rat& lo, const Rat& hi) {
    // integer image for cheap exact sign evaluation
    Int den_lcm(1);
    for (long i = 0; i <= p.true_degree(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(i).get_den_mpz_t());
    std::vector<Int> ip(size_t(p.true_degree()) + 1);
    for (long i = 0; i <= p.true_degree(); ++i) ip[size_t(i)] = Rat(p.coeff(i) * Rat(den_lcm)).get_num();
    auto sign_at = [&](const Rat& x) {
        Int acc(0), num_pow(1);
        std::vector<Int> den_pows(ip.size());
        den_pows[ip.size() - 1] = 1;
        for (size_t i = ip.size() - 1; i-- > 0;) den_pows[i] = den_pows[i + 1] * Int(x.get_den());
        for (size_t i = 0; i < ip.size(); ++i) {
            acc += ip[i] * num_pow * den_pows[i];
            num_pow *= Int(x.get_num());
        }
        return sgn(acc);
    };
    auto count_at_density = [&](long n) {
        long count = 0;
        int prev_sign = 0;
        Rat step = (hi - lo) / Rat(n);
        for (long i = 0; i <= n; ++i) {
            Rat x = lo + Rat(i) * step;
            int s = sign_at(x);
            if (s == 0) {
                // a grid point dead on a root; absorb the surrounding sign
                // change so the root is not counted twice
                if (x > lo) ++count;
                prev_sign = 0;
                continue;
            }
            if (prev_sign != 0 && s != prev_sign) ++count;
            prev_sign = s;
        }
        return count;
    };
    long last = count_at_density(256);
    int stable = 0;
    for (long n = 512; n <= (1L << 20); n *= 2) {
        long cur = count_at_density(n);
        stable = (cur == last) ? stable + 1 : 0;
        last = cur;
        if (stable >= 2) return cur;
    }
    return last;
}

} // namespace mpf::test

#endif
