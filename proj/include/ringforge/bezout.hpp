#pragma once

#include "ringforge/exact_ring.hpp"

#include <optional>

namespace ringforge {

struct BezoutTriple {
    Int d, a1, b1, u, v; // a = d*a1, b = d*b1, u*a + v*b = d
};

/// Extended Bézout data. d is the integer gcd of the canonical
/// representatives (and the modulus, when finite), which fixes the associate
/// ambiguity deterministically; (0,0) yields the degenerate (0,1,1,0,0).
BezoutTriple bezout_triple(const ExactRing& r, const Int& a, const Int& b);

struct HermiteCertificate {
    Int d, a1, b1, u, v; // a = d*a1, b = d*b1, u*a1 + v*b1 = 1
};

/// Hermite reduction of a pair: one Bézout round, then either a second
/// round when the cofactor is regular modulo the nilradical, or an exact
/// idempotent transformation (lifted through the stored factorization)
/// followed by the regular case. Degenerate pairs use (a,0) -> (a,1,0).
HermiteCertificate hermite_pair(const ExactRing& r, const Int& a, const Int& b);

struct AdequateFactorization {
    Int r, s, e; // a = r*s with (r,b) = R; e is the idempotent with D(b) = D(e)
};

/// Adequate factorization of a with respect to b over a finite ring:
/// the idempotent e is 1 exactly on the components where b is a unit;
/// r = (1-e) + a*e and s = a*(1-e) + e. Every nonunit divisor of s shares a
/// component with b.
AdequateFactorization adequate_factor(const ExactRing& r, const Int& a, const Int& b);

struct GhWitness {
    Int p, q; // ideal (p*a, p*b + q*c) = R
};

/// Witness for the unimodular-triple reduction: requires (a,b,c) = R and
/// produces (p,q) with (pa, pb+qc) = R. Built constructively through the
/// component idempotent of b; falls back to bounded exhaustive search.
GhWitness gh_witness(const ExactRing& r, const Int& a, const Int& b, const Int& c);

struct MinPrimeReport {
    bool unique = false;     // from the factorization: one prime-power component
    bool condition2 = false; // for every d not in J(R), (0:d) contained in J(R)
    std::optional<std::pair<Int, Int>> witness; // (d, x): d*x = 0, both outside J(R)
};

/// The unique-minimal-prime criterion, checked both ways: structurally from
/// the factorization and exhaustively over the ring. The two verdicts must
/// agree; disagreement throws.
MinPrimeReport unique_min_prime_report(const ExactRing& r);

} // namespace ringforge
