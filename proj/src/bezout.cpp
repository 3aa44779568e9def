#include "ringforge/bezout.hpp"

#include <functional>

namespace ringforge {

BezoutTriple bezout_triple(const ExactRing& r, const Int& a_in, const Int& b_in) {
    Int a = r.canon(a_in), b = r.canon(b_in);
    if (a == 0 && b == 0) return {Int(0), Int(1), Int(1), Int(0), Int(0)};

    if (r.is_integers()) {
        auto [g, u, v] = int_xgcd(a, b);
        return {g, a / g, b / g, u, v};
    }

    // d = gcd of the canonical representatives and m
    auto [g, u0, v0] = int_xgcd(a, b); // g = gcd(a,b) as integers, may be 0 when one input is 0
    Int d;
    Int u, v;
    if (g == 0) {
        d = 0; // unreachable: a == b == 0 handled above
        u = v = 0;
    } else {
        auto [d2, w, t] = int_xgcd(g, r.modulus());
        (void)t;
        d = d2;
        u = r.canon(w * u0);
        v = r.canon(w * v0);
    }
    Int a1 = r.canon(a / d);
    Int b1 = r.canon(b / d);
    return {d, a1, b1, u, v};
}

namespace {

/// (N : c) == N over a finite ring, i.e. c is regular modulo the nilradical.
bool regular_mod_nilradical(const ExactRing& r, const Int& c) {
    if (r.is_integers()) return true; // N = 0 and Z is a domain
    return int_gcd(r.canon(c), r.radical()) == 1;
}

/// The idempotent e with e = 1 exactly on the components where pred holds.
Int component_idempotent(const ExactRing& r, const std::function<bool(const Int& p)>& pred) {
    std::vector<Int> res;
    res.reserve(r.components().size());
    for (const auto& pp : r.components()) res.push_back(pred(pp.p) ? 1 : 0);
    return r.crt(res);
}

/// Second Bézout round of the Hermite construction; valid when the first
/// round's cofactor is regular modulo the nilradical.
HermiteCertificate hermite_regular_case(const ExactRing& r, const Int& d, const Int& a1,
                                        const Int& b1) {
    BezoutTriple t = bezout_triple(r, a1, b1); // a1 = d' a'', b1 = d' b''
    Int s = r.add(r.mul(t.u, t.a1), r.mul(t.v, t.b1));
    // 1 - s lies in the nilradical, so s is a unit
    Int w = r.inv_unit(s);
    return {r.mul(d, t.d), t.a1, t.b1, r.mul(t.u, w), r.mul(t.v, w)};
}

} // namespace

HermiteCertificate hermite_pair(const ExactRing& r, const Int& a_in, const Int& b_in) {
    Int a = r.canon(a_in), b = r.canon(b_in);
    if (b == 0) return {a, Int(1), Int(0), Int(1), Int(0)};
    if (a == 0) return {b, Int(0), Int(1), Int(0), Int(1)};

    BezoutTriple t = bezout_triple(r, a, b);
    Int c = r.add(r.mul(t.u, t.a1), r.mul(t.v, t.b1));

    if (regular_mod_nilradical(r, c)) return hermite_regular_case(r, t.d, t.a1, t.b1);

    // c is a zero divisor modulo N: transform by the idempotent that lifts
    // the annihilator of c in R/N, then the regular case applies
    Int e = component_idempotent(r, [&](const Int& p) { return r.canon(c) % p != 0; });
    Int one_minus_e = r.sub(1, e);
    Int a1 = r.mul(t.a1, e);
    Int b1 = r.add(r.mul(t.b1, e), one_minus_e);
    return hermite_regular_case(r, t.d, a1, b1);
}

AdequateFactorization adequate_factor(const ExactRing& r, const Int& a_in, const Int& b_in) {
    if (r.is_integers())
        throw std::invalid_argument("adequate_factor: requires a finite ring");
    Int a = r.canon(a_in), b = r.canon(b_in);
    if (a == 0) throw std::invalid_argument("adequate_factor: a must be nonzero");

    // e = 1 exactly where b is a unit, so D(b) = D(e)
    Int e = component_idempotent(r, [&](const Int& p) { return b % p != 0; });
    Int one_minus_e = r.sub(1, e);
    Int rr = r.add(one_minus_e, r.mul(a, e));
    Int s = r.add(r.mul(a, one_minus_e), e);
    return {rr, s, e};
}

GhWitness gh_witness(const ExactRing& r, const Int& a_in, const Int& b_in, const Int& c_in) {
    if (r.is_integers())
        throw std::invalid_argument("gh_witness: requires a finite ring");
    Int a = r.canon(a_in), b = r.canon(b_in), c = r.canon(c_in);
    Int g = int_gcd(int_gcd(a, b), int_gcd(c, r.modulus()));
    if (g != 1)
        throw std::invalid_argument("gh_witness: (a, b, c) is not a unimodular triple");

    auto verified = [&](const Int& p, const Int& q) {
        Int x = r.mul(p, a);
        Int y = r.add(r.mul(p, b), r.mul(q, c));
        return int_gcd(int_gcd(x, y), r.modulus()) == 1;
    };

    // On each component: nothing to fix where a is a unit; where it is not,
    // b + qc must be a unit, which q = 0 gives when b is one and q = 1 gives
    // otherwise (c is then a unit by unimodularity).
    std::vector<Int> res;
    res.reserve(r.components().size());
    for (const auto& pp : r.components()) {
        if (a % pp.p != 0) res.push_back(0);
        else if (b % pp.p != 0) res.push_back(0);
        else res.push_back(1);
    }
    Int q = r.crt(res);
    if (verified(Int(1), q)) return {Int(1), q};

    // bounded exhaustive fallback; not expected to be reached
    for (Int p = 0; p < r.modulus(); ++p)
        for (Int qq = 0; qq < r.modulus(); ++qq)
            if (verified(p, qq)) return {p, qq};
    throw std::logic_error("gh_witness: no witness found for a unimodular triple");
}

MinPrimeReport unique_min_prime_report(const ExactRing& r) {
    if (r.is_integers())
        throw std::invalid_argument("unique_min_prime_report: requires a finite ring");
    MinPrimeReport out;
    out.unique = r.components().size() == 1;

    const Int& m = r.modulus();
    const Int& rad = r.radical();
    auto in_jacobson = [&](const Int& x) { return x % rad == 0; };

    out.condition2 = true;
    for (Int d = 0; d < m && out.condition2; ++d) {
        if (in_jacobson(d)) continue;
        for (Int x = 0; x < m; ++x) {
            if (r.mul(d, x) != 0) continue;
            if (!in_jacobson(x)) {
                out.condition2 = false;
                out.witness = std::make_pair(d, x);
                break;
            }
        }
    }

    if (out.unique != out.condition2)
        throw std::logic_error("unique_min_prime_report: criteria disagree");
    return out;
}

} // namespace ringforge
