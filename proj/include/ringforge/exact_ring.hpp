#pragma once

#include "ringforge/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace ringforge {

struct PrimePower {
    Int p;
    unsigned e = 1;
    Int pk; // p^e
};

/// Exact arithmetic context: the integers, a residue ring Z/m with known
/// factorization, or a finite product of residue rings with pairwise coprime
/// moduli (stored, like Z/m, as its prime-power components). Elements are
/// plain Int values kept in canonical form: arbitrary integers over Z,
/// representatives in [0, m) otherwise.
class ExactRing {
public:
    static ExactRing integers();
    /// Z/m from an explicit factorization (prime -> exponent). The
    /// factorization is validated exactly.
    static ExactRing residue(const Int& m, const std::map<Int, unsigned>& factorization);
    /// Z/m with the factorization found by trial division (exact; intended
    /// for the small moduli of the CLI and the test suites).
    static ExactRing residue_auto(const Int& m);
    /// Product of residue rings with pairwise coprime moduli.
    static ExactRing product(const std::vector<ExactRing>& factors);

    bool is_integers() const { return integers_; }
    bool is_finite() const { return !integers_; }
    const Int& modulus() const; // m, finite rings only
    const std::vector<PrimePower>& components() const { return comps_; }
    /// Generator of the nilradical: the product of the distinct primes.
    const Int& radical() const;
    const std::string& spec_string() const { return spec_; }

    Int canon(const Int& x) const;
    Int add(const Int& x, const Int& y) const { return canon(x + y); }
    Int sub(const Int& x, const Int& y) const { return canon(x - y); }
    Int mul(const Int& x, const Int& y) const { return canon(x * y); }
    Int neg(const Int& x) const { return canon(-x); }

    bool is_unit(const Int& x) const;
    Int inv_unit(const Int& x) const;
    bool is_idempotent(const Int& x) const { return mul(x, x) == canon(x); }
    /// x generates the same ideal as gcd(x, m); true units have gcd 1.
    Int ideal_gcd(const Int& x) const;

    /// Component residue x mod p^e.
    Int component(const Int& x, size_t i) const;
    /// Chinese-remainder recombination from per-component residues.
    Int crt(const std::vector<Int>& residues) const;

    bool operator==(const ExactRing& o) const;

private:
    ExactRing() = default;

    bool integers_ = false;
    Int m_ = 0;
    Int radical_ = 0;
    std::vector<PrimePower> comps_;
    std::string spec_;
};

/// All idempotents of a finite ring, one binary choice per prime-power
/// component, recombined by CRT; sorted ascending.
std::vector<Int> idempotents(const ExactRing& r);

/// Trial-division factorization; exact for any m >= 2 (intended small).
std::map<Int, unsigned> factor_small(const Int& m);

/// Parses "Z", "Z/<m>", or "Z/<m>x Z/<k>..." ring spec strings.
ExactRing parse_exact_ring(const std::string& spec);

} // namespace ringforge
