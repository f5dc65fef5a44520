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

#include "mpf/sign_cert.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "mpf/errors.hpp"

namespace mpf {
namespace {

// Integer image of a rational polynomial: same roots, same sign everywhere
// (the clearing factor is positive). All Sturm work runs on these.
using IntPoly = std::vector<Int>;

IntPoly to_int_poly(const RhoPoly& p) {
    IntPoly v(size_t(p.true_degree() + 1));
    Int den_lcm(1);
    for (long i = 0; i <= p.true_degree(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p.coeff(i).get_den_mpz_t());
    for (long i = 0; i <= p.true_degree(); ++i) {
        Rat c = p.coeff(i) * Rat(den_lcm);
        assert(c.get_den() == 1);
        v[size_t(i)] = c.get_num();
    }
    return v;
}

void strip_content(IntPoly& p) {
    Int g(0);
    for (const Int& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0 || g == 1) return;
    for (Int& c : p) c /= g;
}

long deg(const IntPoly& p) { return long(p.size()) - 1; }

IntPoly int_derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * long(i);
    return d;
}

// Pseudo-remainder lc(b)^(da-db+1) * a mod b, normalized so it equals the
// true rational remainder up to a positive factor, then content-stripped.
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Int& lb = b.back();
    long delta = deg(a) - deg(b);
    assert(delta >= 0);
    for (long k = delta; k >= 0; --k) {
        if (deg(r) < deg(b) + k) {
            for (Int& c : r) c *= lb;
            continue;
        }
        Int top = r.back();
        for (size_t i = 0; i + 1 < r.size(); ++i) r[i] *= lb;
        r.pop_back();
        for (long i = 0; i < deg(b); ++i)
            r[size_t(i + k)] -= top * b[size_t(i)];
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    // r == lb^(delta+1) * (a mod b); flip when that factor is negative
    bool factor_negative = (sgn(lb) < 0) && ((delta + 1) % 2 == 1);
    if (factor_negative)
        for (Int& c : r) c = -c;
    strip_content(r);
    return r;
}

// Last nonzero signed remainder; equals gcd(a, b) up to a constant.
IntPoly int_gcd(IntPoly a, IntPoly b) {
    strip_content(a);
    strip_content(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) return IntPoly{Int(1)};
        IntPoly r = signed_prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact quotient num/den over Q, cleared back to integers. Asserts
// divisibility.
IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    assert(!den.empty() && deg(num) >= deg(den));
    std::vector<Rat> rem(num.size());
    for (size_t i = 0; i < num.size(); ++i) rem[i] = Rat(num[i]);
    std::vector<Rat> quot(size_t(deg(num) - deg(den)) + 1);
    Rat lead(den.back());
    for (long i = long(quot.size()); i-- > 0;) {
        Rat q = rem[size_t(i + deg(den))] / lead;
        quot[size_t(i)] = q;
        if (sgn(q) == 0) continue;
        for (long j = 0; j <= deg(den); ++j) rem[size_t(i + j)] -= q * Rat(den[size_t(j)]);
    }
    for (const Rat& r : rem) {
        assert(sgn(r) == 0);
        (void)r;
    }
    Int den_lcm(1);
    for (const Rat& q : quot)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    IntPoly out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        Rat c = quot[i] * Rat(den_lcm);
        out[i] = c.get_num();
    }
    strip_content(out);
    return out;
}

// Same distinct roots, all simple. Sturm endpoint conventions for (a, b]
// only hold on squarefree input: a repeated root at an endpoint makes the
// whole raw chain vanish there.
IntPoly squarefree_part(const IntPoly& p) {
    if (deg(p) < 2) return p;
    IntPoly d = int_derivative(p);
    strip_content(d);
    IntPoly g = int_gcd(p, d);
    if (deg(g) < 1) return p;
    return exact_div(p, g);
}

struct SturmChain {
    std::vector<IntPoly> seq;
};

// Chain of the squarefree part. V(a) - V(b) counts distinct roots of the
// original polynomial in (a, b], endpoints allowed to be roots.
SturmChain build_chain(IntPoly p) {
    strip_content(p);
    p = squarefree_part(p);
    SturmChain ch;
    ch.seq.push_back(p);
    if (deg(p) < 1) return ch;
    ch.seq.push_back(int_derivative(p));
    strip_content(ch.seq.back());
    while (deg(ch.seq.back()) >= 0) {
        const IntPoly& s0 = ch.seq[ch.seq.size() - 2];
        const IntPoly& s1 = ch.seq.back();
        if (deg(s1) == 0) break;
        IntPoly r = signed_prem(s0, s1);
        if (r.empty()) break;
        for (Int& c : r) c = -c;
        ch.seq.push_back(std::move(r));
    }
    return ch;
}

// Exact sign of p(x): sign of sum c_i num^i den^(n-i).
int sign_at(const IntPoly& p, const Rat& x) {
    if (p.empty()) return 0;
    const Int num = x.get_num();
    const Int den = x.get_den();
    Int acc(0);
    Int num_pow(1);
    std::vector<Int> den_pows(p.size());
    den_pows[p.size() - 1] = 1;
    for (size_t i = p.size() - 1; i-- > 0;) den_pows[i] = den_pows[i + 1] * den;
    for (size_t i = 0; i < p.size(); ++i) {
        acc += p[i] * num_pow * den_pows[i];
        num_pow *= num;
    }
    return sgn(acc);
}

int sign_at_bound(const IntPoly& p, const Bound& b) {
    if (p.empty()) return 0;
    switch (b.kind) {
        case Bound::Finite: return sign_at(p, b.value);
        case Bound::PosInf: return sgn(p.back());
        case Bound::NegInf: return deg(p) % 2 == 0 ? sgn(p.back()) : -sgn(p.back());
    }
    return 0;
}

long variations(const SturmChain& ch, const Bound& b) {
    long v = 0;
    int prev = 0;
    for (const IntPoly& s : ch.seq) {
        int sg = sign_at_bound(s, b);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++v;
        prev = sg;
    }
    return v;
}

long chain_count(const SturmChain& ch, const Bound& lo, const Bound& hi) {
    return variations(ch, lo) - variations(ch, hi);
}

// Cauchy bound: every real root has |r| < 1 + max|c_i| / |c_n|.
Rat root_bound(const IntPoly& p) {
    assert(!p.empty());
    Int m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Int a = abs(p[i]);
        if (a > m) m = a;
    }
    Int lead = abs(p.back());
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
    return Rat(q + 2);
}

// One distinct root of p. Either pinned to an exact rational, or strictly
// inside the open interval (lo, hi) whose endpoints are not roots.
struct RootLoc {
    bool exact = false;
    Rat point;
    Rat lo, hi;
    Rat lower() const { return exact ? point : lo; }
    Rat upper() const { return exact ? point : hi; }
};

struct Isolation {
    const SturmChain* chain = nullptr;
    const IntPoly* poly = nullptr;
    std::vector<RootLoc> roots;
};

// Shrinks an interval root location, keeping exactly one root inside and
// non-root endpoints, until pred(loc) holds. The predicate must be
// satisfiable by shrinking toward the root.
template <typename Pred>
void refine_until(Isolation& iso, RootLoc& loc, Pred pred) {
    while (!loc.exact && !pred(loc)) {
        Rat m = (loc.lo + loc.hi) / 2;
        if (sign_at(*iso.poly, m) == 0) {
            loc.exact = true;
            loc.point = m;
            return;
        }
        if (chain_count(*iso.chain, Bound::at(loc.lo), Bound::at(m)) == 1)
            loc.hi = m;
        else
            loc.lo = m;
    }
}

// Isolates the distinct real roots of the chain's polynomial in (lo, hi],
// lo/hi finite. Intervals come back sorted and pairwise disjoint.
Isolation isolate_roots(const SturmChain& ch, const IntPoly& p, const Rat& lo, const Rat& hi) {
    Isolation iso;
    iso.chain = &ch;
    iso.poly = &p;
    struct Seg { Rat a, b; long count; };
    std::vector<Seg> stack;
    long total = chain_count(ch, Bound::at(lo), Bound::at(hi));
    if (total > 0) stack.push_back({lo, hi, total});
    std::vector<RootLoc> out;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            RootLoc loc;
            if (sign_at(p, s.b) == 0) {
                loc.exact = true;
                loc.point = s.b;
            } else {
                loc.lo = s.a;
                loc.hi = s.b;
                // make the left endpoint a non-root
                refine_until(iso, loc, [&](const RootLoc& l) { return sign_at(p, l.lo) != 0; });
            }
            out.push_back(std::move(loc));
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        long left = chain_count(ch, Bound::at(s.a), Bound::at(m));
        if (left > 0) stack.push_back({s.a, m, left});
        if (s.count - left > 0) stack.push_back({m, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootLoc& x, const RootLoc& y) { return x.lower() < y.lower(); });
    iso.roots = std::move(out);
    return iso;
}

Rat exact_value(const RhoPoly& p, const Rat& x) { return p.eval(x); }

SignCertificate fail_point(const RhoPoly& p, const Rat& x) {
    SignCertificate cert;
    cert.pass = false;
    SignWitness w;
    w.kind = SignWitness::Point;
    w.rho = x;
    w.value = exact_value(p, x);
    cert.witness = w;
    return cert;
}

SignCertificate fail_interval(const Rat& lo, const Rat& hi) {
    SignCertificate cert;
    cert.pass = false;
    SignWitness w;
    w.kind = SignWitness::RootInterval;
    w.lo = lo;
    w.hi = hi;
    cert.witness = w;
    return cert;
}

// Sample points covering every maximal sign-constant region of (start, end),
// given the isolated roots inside. All samples are non-roots.
std::vector<Rat> gap_samples(Isolation& iso, const Rat& start, const Bound& end, const Rat& fallback_top) {
    std::vector<Rat> samples;
    auto& roots = iso.roots;
    // ensure interval lower ends sit strictly above `start`
    for (auto& r : roots)
        refine_until(iso, r, [&](const RootLoc& l) { return l.lo > start; });
    // first gap
    if (roots.empty()) {
        if (end.kind == Bound::Finite)
            samples.push_back((start + end.value) / 2);
        else
            samples.push_back(start + 1);
        return samples;
    }
    {
        const RootLoc& first = roots.front();
        samples.push_back(first.exact ? Rat((start + first.point) / 2) : first.lo);
    }
    // middle gaps
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        RootLoc& a = roots[i];
        RootLoc& b = roots[i + 1];
        if (!a.exact) {
            samples.push_back(a.hi);
        } else {
            refine_until(iso, b, [&](const RootLoc& l) { return l.lo > a.point; });
            samples.push_back(b.exact ? Rat((a.point + b.point) / 2) : b.lo);
        }
    }
    // last gap
    RootLoc& last = roots.back();
    if (end.kind == Bound::Finite) {
        const Rat& v = end.value;
        if (last.exact) {
            if (last.point < v) samples.push_back((last.point + v) / 2);
            // exact root at v: no gap above it inside the region
        } else {
            refine_until(iso, last, [&](const RootLoc& l) { return l.hi < v; });
            if (!last.exact || last.point < v) {
                Rat hi_pt = last.exact ? Rat((last.point + v) / 2) : last.hi;
                samples.push_back(hi_pt);
            }
        }
    } else {
        Rat top = fallback_top;
        if (last.upper() >= top) top = last.upper() + 1;
        samples.push_back(top);
    }
    return samples;
}

} // namespace

std::string SignWitness::str() const {
    if (kind == Point)
        return "rho=" + rat_str(rho) + " value=" + rat_str(value);
    return "root in (" + rat_str(lo) + ", " + rat_str(hi) + ")";
}

long sturm_count_roots(const RhoPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw ZeroPolynomialError("sturm_count_roots");
    SturmChain ch = build_chain(to_int_poly(p));
    return chain_count(ch, lo, hi);
}

SignCertificate certify_sign_on_halfline(const RhoPoly& p, SignMode mode) {
    assert(mode == SignMode::Nonpositive || mode == SignMode::Nonnegative);
    SignCertificate cert;
    if (p.is_zero()) {
        cert.pass = true;
        return cert;
    }
    const int bad = (mode == SignMode::Nonpositive) ? +1 : -1;
    IntPoly ip = to_int_poly(p);
    SturmChain ch = build_chain(ip);
    Rat zero(0);
    if (sign_at(ip, zero) == bad) return fail_point(p, zero);
    Rat bound = root_bound(ip);
    Isolation iso = isolate_roots(ch, ip, zero, bound);
    for (const Rat& s : gap_samples(iso, zero, Bound::pos_inf(), bound + 1))
        if (sign_at(ip, s) == bad) return fail_point(p, s);
    cert.pass = true;
    return cert;
}

SignCertificate certify_sign_on_halfline(const RhoPoly& p, SignMode mode,
                                         const OpenInterval& region) {
    assert(mode == SignMode::StrictlyNegative || mode == SignMode::StrictlyPositive);
    if (p.is_zero()) {
        // fails everywhere; witness at an arbitrary interior point
        Rat mid = region.hi.kind == Bound::Finite ? Rat((region.lo + region.hi.value) / 2)
                                                  : Rat(region.lo + 1);
        SignCertificate cert;
        cert.pass = false;
        SignWitness w;
        w.rho = mid;
        w.value = 0;
        cert.witness = w;
        return cert;
    }
    const int bad_zero_or = (mode == SignMode::StrictlyNegative) ? +1 : -1;
    IntPoly ip = to_int_poly(p);
    SturmChain ch = build_chain(ip);
    Rat bound = root_bound(ip);
    Rat hi_finite = region.hi.kind == Bound::Finite ? region.hi.value : Rat(bound);
    if (region.hi.kind == Bound::Finite && hi_finite <= region.lo) {
        // empty region
        SignCertificate cert;
        cert.pass = true;
        return cert;
    }
    // a half-line region may start beyond the root bound; keep the
    // isolation window nonempty so the tail sample still happens
    if (hi_finite <= region.lo) hi_finite = region.lo + 1;
    Isolation iso = isolate_roots(ch, ip, region.lo, hi_finite);
    // wrong-sign samples first: they make the best witnesses
    for (const Rat& s : gap_samples(iso, region.lo, region.hi, bound + 1))
        if (sign_at(ip, s) == bad_zero_or) return fail_point(p, s);
    // any root strictly inside the open region violates strictness
    for (const RootLoc& r : iso.roots) {
        if (r.exact) {
            bool interior = region.hi.kind != Bound::Finite || r.point < region.hi.value;
            if (interior) return fail_point(p, r.point); // value is exactly 0
        } else {
            return fail_interval(r.lo, r.hi); // interval roots are always interior
        }
    }
    SignCertificate cert;
    cert.pass = true;
    return cert;
}

} // namespace mpf
