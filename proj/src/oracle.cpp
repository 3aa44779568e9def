#include "ringforge/oracle.hpp"

#include "ringforge/valuation.hpp"

#include <random>
#include <sstream>

namespace ringforge {

namespace {

constexpr long kMaxEnumeration = 10000;
constexpr size_t kMaxStoredFailures = 64;

long ring_size_checked(const ExactRing& r, const char* what) {
    if (r.is_integers())
        throw std::invalid_argument(std::string(what) + ": requires a finite ring");
    if (r.modulus() > kMaxEnumeration)
        throw std::invalid_argument(std::string(what) + ": ring too large to enumerate");
    return r.modulus().convert_to<long>();
}

} // namespace

void OracleReport::note(const std::string& input, const std::string& expected,
                        const std::string& got) {
    ++failed;
    if (failures.size() < kMaxStoredFailures) failures.push_back({input, expected, got});
}

void OracleReport::absorb(const OracleReport& o) {
    checked += o.checked;
    failed += o.failed;
    for (const auto& f : o.failures)
        if (failures.size() < kMaxStoredFailures) failures.push_back(f);
}

FiniteRingTables::FiniteRingTables(const ExactRing& r) {
    m_ = ring_size_checked(r, "FiniteRingTables");
    ideal_.assign(m_, std::vector<bool>(m_, false));
    for (long g = 0; g < m_; ++g)
        for (long x = 0; x < m_; ++x) ideal_[g][(g * x) % m_] = true;
}

bool FiniteRingTables::pair_unimodular(long u, long v) const {
    for (long x = 0; x < m_; ++x)
        if (ideal_[v][((1 - u * x) % m_ + m_) % m_]) return true;
    return false;
}

std::vector<Int> brute_annihilator(const ExactRing& r, const Int& a) {
    long m = ring_size_checked(r, "brute_annihilator");
    Int ac = r.canon(a);
    std::vector<Int> out;
    for (long x = 0; x < m; ++x)
        if (r.mul(ac, x) == 0) out.push_back(Int(x));
    return out;
}

OracleReport verify_hermite(const ExactRing& r, const Int& a, const Int& b, const Int& d,
                            const Int& a1, const Int& b1, const Int& u, const Int& v) {
    OracleReport rep;
    auto input = [&] {
        std::ostringstream os;
        os << r.spec_string() << " a=" << a << " b=" << b << " cert(d=" << d << ",a'=" << a1
           << ",b'=" << b1 << ",u=" << u << ",v=" << v << ")";
        return os.str();
    };
    ++rep.checked;
    if (r.canon(a) != r.mul(d, a1)) rep.note(input(), "a = d*a'", "violated");
    ++rep.checked;
    if (r.canon(b) != r.mul(d, b1)) rep.note(input(), "b = d*b'", "violated");
    ++rep.checked;
    if (r.add(r.mul(u, a1), r.mul(v, b1)) != r.canon(1)) rep.note(input(), "u*a'+v*b' = 1", "violated");
    return rep;
}

OracleReport verify_adequate(const ExactRing& r, const FiniteRingTables& t, const Int& a,
                             const Int& b, const Int& rr, const Int& s) {
    OracleReport rep;
    long m = t.size();
    long al = r.canon(a).convert_to<long>();
    long bl = r.canon(b).convert_to<long>();
    long rl = r.canon(rr).convert_to<long>();
    long sl = r.canon(s).convert_to<long>();
    auto input = [&] {
        std::ostringstream os;
        os << r.spec_string() << " a=" << al << " b=" << bl << " r=" << rl << " s=" << sl;
        return os.str();
    };

    ++rep.checked;
    if ((rl * sl) % m != al) rep.note(input(), "a = r*s", "violated");
    ++rep.checked;
    if (!t.pair_unimodular(rl, bl)) rep.note(input(), "(r, b) = R", "violated");
    for (long s2 = 0; s2 < m; ++s2) {
        if (!t.divides(s2, sl)) continue; // s2 does not divide s
        if (t.is_unit(s2)) continue;
        ++rep.checked;
        if (t.pair_unimodular(s2, bl)) {
            std::ostringstream os;
            os << "nonunit divisor s'=" << s2;
            rep.note(input(), "(s', b) != R", os.str());
        }
    }
    return rep;
}

OracleReport verify_adequate(const ExactRing& r, const Int& a, const Int& b, const Int& rr,
                             const Int& s) {
    FiniteRingTables t(r);
    return verify_adequate(r, t, a, b, rr, s);
}

OracleReport verify_smith(const ExactRing& r, const Mat& a, const DiagCertificate& cert) {
    OracleReport rep;
    auto input = [&] {
        std::ostringstream os;
        os << r.spec_string() << " " << a.rows() << "x" << a.cols() << " matrix";
        return os.str();
    };

    ++rep.checked;
    Mat paq = cert.p.mul(a, r).mul(cert.q, r);
    if (!(paq == cert.d.canon(r))) rep.note(input(), "P*A*Q = D", "violated");

    ++rep.checked;
    for (size_t i = 0; i < cert.d.rows(); ++i)
        for (size_t j = 0; j < cert.d.cols(); ++j)
            if (i != j && r.canon(cert.d.at(i, j)) != 0) {
                rep.note(input(), "D diagonal", "nonzero off-diagonal entry");
                i = cert.d.rows();
                break;
            }

    ++rep.checked;
    if (!r.is_unit(cert.p.det())) rep.note(input(), "det(P) unit", "violated");
    ++rep.checked;
    if (!r.is_unit(cert.q.det())) rep.note(input(), "det(Q) unit", "violated");

    size_t steps = std::min(cert.d.rows(), cert.d.cols());
    for (size_t tt = 0; tt + 1 < steps; ++tt) {
        ++rep.checked;
        Int di = r.canon(cert.d.at(tt, tt));
        Int dj = r.canon(cert.d.at(tt + 1, tt + 1));
        bool ok;
        if (r.is_integers()) {
            ok = di == 0 ? dj == 0 : dj % di == 0;
        } else {
            ok = false; // dj in diR, by enumeration
            long m = ring_size_checked(r, "verify_smith");
            for (long x = 0; x < m && !ok; ++x)
                if (r.mul(di, x) == dj) ok = true;
        }
        if (!ok) rep.note(input(), "d_i | d_{i+1}", "chain violated");
    }
    return rep;
}

OracleReport verify_canonical(const ExactRing& r, const std::vector<Int>& entries,
                              const std::vector<Int>& chain) {
    OracleReport rep;
    long m = ring_size_checked(r, "verify_canonical");
    auto input = [&] {
        std::ostringstream os;
        os << r.spec_string() << " entries=[";
        for (size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << r.canon(entries[i]);
        os << "] chain=[";
        for (size_t i = 0; i < chain.size(); ++i) os << (i ? "," : "") << r.canon(chain[i]);
        os << "]";
        return os.str();
    };

    // ascending ideals, none the whole ring
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        ++rep.checked;
        bool contained = false; // (c_i) subset (c_{i+1})  <=>  c_i in c_{i+1} R
        for (long x = 0; x < m && !contained; ++x)
            if (r.mul(chain[i + 1], x) == r.canon(chain[i])) contained = true;
        if (!contained) rep.note(input(), "I_i subset I_{i+1}", "chain not ascending");
    }
    for (const Int& c : chain) {
        ++rep.checked;
        bool unit = false;
        for (long x = 0; x < m && !unit; ++x)
            if (r.mul(c, x) == 1) unit = true;
        if (unit) rep.note(input(), "I_j != R", "unit generator in chain");
    }

    // isomorphism by annihilator counts: for each d, the number of elements
    // killed by d must agree between the two decompositions
    auto ann_count = [&](const std::vector<Int>& gens, const Int& d) {
        Int total = 1;
        for (const Int& g : gens) {
            std::vector<bool> in_g(m, false);
            for (long y = 0; y < m; ++y) in_g[r.mul(g, y).convert_to<long>()] = true;
            // x runs over coset representatives of (g), |(g)| to one; both
            // counts below are coset-invariant
            long in_ideal = 0, killed = 0;
            for (long x = 0; x < m; ++x) {
                if (in_g[r.mul(d, x).convert_to<long>()]) ++killed;
                if (in_g[x]) ++in_ideal;
            }
            total *= Int(killed) / Int(in_ideal);
        }
        return total;
    };
    for (long d = 0; d < m; ++d) {
        ++rep.checked;
        if (ann_count(entries, Int(d)) != ann_count(chain, Int(d))) {
            std::ostringstream os;
            os << "annihilator counts differ at d=" << d;
            rep.note(input(), "isomorphic decompositions", os.str());
            break;
        }
    }
    return rep;
}

OracleReport verify_gh(const ExactRing& r, const FiniteRingTables& t, const Int& a, const Int& b,
                       const Int& c, const Int& p, const Int& q) {
    OracleReport rep;
    ++rep.checked;
    long pa = r.mul(p, a).convert_to<long>();
    long pbqc = r.add(r.mul(p, b), r.mul(q, c)).convert_to<long>();
    if (!t.pair_unimodular(pa, pbqc)) {
        std::ostringstream os;
        os << r.spec_string() << " (a,b,c)=(" << r.canon(a) << "," << r.canon(b) << ","
           << r.canon(c) << ") (p,q)=(" << r.canon(p) << "," << r.canon(q) << ")";
        rep.note(os.str(), "R(pa) + R(pb+qc) = R", "violated");
    }
    return rep;
}

OracleReport verify_gh(const ExactRing& r, const Int& a, const Int& b, const Int& c, const Int& p,
                       const Int& q) {
    FiniteRingTables t(r);
    return verify_gh(r, t, a, b, c, p, q);
}

// ---------------------------------------------------------------------------
// Cut-law sampling

namespace {

// Sampling bounds: coordinates in [-8, 8] scaled into the cone, rational
// denominators <= 16.

Int rnd_int(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

GroupElement rnd_cone(GroupKind kind, std::mt19937_64& rng) {
    switch (kind) {
    case GroupKind::DiscreteZ:
        return GroupElement::integer(kind, rnd_int(rng, 0, 8));
    case GroupKind::DenseQ: {
        Int num = rnd_int(rng, 0, 8 * 16);
        Int den = rnd_int(rng, 1, 16);
        return GroupElement::rational(Rat(num, den * 2)); // values up to 64, fine-grained
    }
    case GroupKind::LexZ2: {
        Int a = rnd_int(rng, 0, 8);
        Int b = rnd_int(rng, a == 0 ? 0 : -8, 8);
        return GroupElement::pair(a, b);
    }
    }
    throw std::logic_error("rnd_cone");
}

GroupElement rnd_cone_positive(GroupKind kind, std::mt19937_64& rng) {
    for (;;) {
        GroupElement g = rnd_cone(kind, rng);
        if (g.is_positive()) return g;
    }
}

Cut rnd_cut(GroupKind kind, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(rng)) {
    case 0: return Cut::zero(kind);
    case 1: return Cut::full(kind);
    case 3:
        if (kind == GroupKind::DenseQ) return Cut::open(rnd_cone(kind, rng));
        return Cut::closed(rnd_cone_positive(kind, rng));
    case 4:
        if (kind == GroupKind::LexZ2) return Cut::row(rnd_int(rng, 1, 8));
        return Cut::closed(rnd_cone_positive(kind, rng));
    default: return Cut::closed(rnd_cone_positive(kind, rng));
    }
}

} // namespace

OracleReport sample_cut_laws(GroupKind kind, long trials, unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("sample_cut_laws: trials must be >= 1");
    OracleReport rep;
    std::mt19937_64 rng(seed);

    for (long t = 0; t < trials; ++t) {
        // quotient definition and composition law
        {
            Cut c = rnd_cut(kind, rng);
            GroupElement g = rnd_cone(kind, rng);
            GroupElement h = rnd_cone(kind, rng);
            Cut cg = cut_quotient(c, g);
            Cut cgh = cut_quotient(cg, h);
            Cut direct = cut_quotient(c, g + h);
            ++rep.checked;
            if (cgh != direct)
                rep.note("(" + c.str() + " : " + g.str() + " : " + h.str() + ")", direct.str(),
                         cgh.str());
            for (int s = 0; s < 12; ++s) {
                GroupElement delta = rnd_cone(kind, rng);
                ++rep.checked;
                if (cut_member(delta, cg) != cut_member(delta + g, c))
                    rep.note("member(" + delta.str() + ", " + c.str() + ":" + g.str() + ")",
                             cut_member(delta + g, c) ? "true" : "false",
                             cut_member(delta, cg) ? "true" : "false");
            }
        }
        // fg transfer: with A properly between, annihilator classes share
        // their finite-generation verdict along multiplication
        {
            Cut a = rnd_cut(kind, rng);
            if (!a.is_full()) {
                GroupElement g = rnd_cone(kind, rng);
                GroupElement h = rnd_cone(kind, rng);
                Cut ag = cut_quotient(a, g);
                if (!ag.is_full() && ag != a && !cut_member(g + h, a)) {
                    Cut agh = cut_quotient(a, g + h);
                    ++rep.checked;
                    if (cut_fg_mod(ag, a).fg != cut_fg_mod(agh, a).fg)
                        rep.note("fg-transfer A=" + a.str() + " g=" + g.str() + " h=" + h.str(),
                                 cut_fg_mod(ag, a).fg ? "both fg" : "both not fg", "differ");
                }
            }
        }
        // sum membership
        {
            Cut c1 = rnd_cut(kind, rng);
            Cut c2 = rnd_cut(kind, rng);
            Cut s = cut_sum(c1, c2);
            for (int i = 0; i < 12; ++i) {
                GroupElement delta = rnd_cone(kind, rng);
                ++rep.checked;
                bool lhs = cut_member(delta, s);
                bool rhs = cut_member(delta, c1) || cut_member(delta, c2);
                if (lhs != rhs)
                    rep.note("member(" + delta.str() + ", " + c1.str() + "+" + c2.str() + ")",
                             rhs ? "true" : "false", lhs ? "true" : "false");
            }
        }
    }
    return rep;
}

} // namespace ringforge
