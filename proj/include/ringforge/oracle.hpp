#pragma once

#include "ringforge/cut.hpp"
#include "ringforge/exact_ring.hpp"
#include "ringforge/smith.hpp"

#include <string>
#include <vector>

namespace ringforge {

// Independent brute-force verifiers. Everything here recomputes invariants
// from definitions (enumeration and exact multiplication) and never calls
// the algorithms whose output it checks.

struct OracleFailure {
    std::string input, expected, got;
};

struct OracleReport {
    long long checked = 0;
    long long failed = 0;
    std::vector<OracleFailure> failures; // capped sample of the failures

    bool pass() const { return failed == 0; }
    void note(const std::string& input, const std::string& expected, const std::string& got);
    void absorb(const OracleReport& o);
};

/// Definitional multiplication tables for a small finite ring (|R| <= 10^4):
/// principal-ideal membership by orbit enumeration only.
class FiniteRingTables {
public:
    explicit FiniteRingTables(const ExactRing& r);

    long size() const { return m_; }
    /// x in gR, by the precomputed orbit of g.
    bool in_principal_ideal(long x, long g) const { return ideal_[g][x]; }
    bool is_unit(long x) const { return in_principal_ideal(1, x); }
    /// g divides x in the ring: x in gR.
    bool divides(long g, long x) const { return in_principal_ideal(x, g); }
    /// 1 in uR + vR, by enumerating u-multiples against the v-orbit.
    bool pair_unimodular(long u, long v) const;

private:
    long m_;
    std::vector<std::vector<bool>> ideal_;
};

/// { x : a*x = 0 }, by enumeration.
std::vector<Int> brute_annihilator(const ExactRing& r, const Int& a);

OracleReport verify_hermite(const ExactRing& r, const Int& a, const Int& b, const Int& d,
                            const Int& a1, const Int& b1, const Int& u, const Int& v);

OracleReport verify_adequate(const ExactRing& r, const FiniteRingTables& t, const Int& a,
                             const Int& b, const Int& rr, const Int& s);
OracleReport verify_adequate(const ExactRing& r, const Int& a, const Int& b, const Int& rr,
                             const Int& s);

OracleReport verify_smith(const ExactRing& r, const Mat& a, const DiagCertificate& cert);

OracleReport verify_canonical(const ExactRing& r, const std::vector<Int>& entries,
                              const std::vector<Int>& chain);

OracleReport verify_gh(const ExactRing& r, const FiniteRingTables& t, const Int& a, const Int& b,
                       const Int& c, const Int& p, const Int& q);
OracleReport verify_gh(const ExactRing& r, const Int& a, const Int& b, const Int& c, const Int& p,
                       const Int& q);

/// Seeded randomized check of the cut laws (quotient definition and
/// composition, fg transfer, sum membership), pointwise on sampled
/// membership grids. Identical seeds give identical reports.
OracleReport sample_cut_laws(GroupKind kind, long trials, unsigned long long seed);

} // namespace ringforge
