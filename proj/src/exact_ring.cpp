#include "ringforge/exact_ring.hpp"

#include <algorithm>
#include <sstream>

namespace ringforge {

namespace {

bool is_prime_trial(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

std::map<Int, unsigned> factor_small(const Int& m) {
    if (m < 2) throw std::invalid_argument("factor_small: modulus must be >= 2");
    std::map<Int, unsigned> out;
    Int rest = m;
    for (Int d = 2; d * d <= rest; ++d) {
        while (rest % d == 0) {
            out[d] += 1;
            rest /= d;
        }
    }
    if (rest > 1) out[rest] += 1;
    return out;
}

ExactRing ExactRing::integers() {
    ExactRing r;
    r.integers_ = true;
    r.spec_ = "Z";
    return r;
}

ExactRing ExactRing::residue(const Int& m, const std::map<Int, unsigned>& factorization) {
    if (m < 2) throw std::invalid_argument("ExactRing::residue: modulus must be >= 2");
    ExactRing r;
    r.m_ = m;
    Int prod = 1;
    Int rad = 1;
    for (const auto& [p, e] : factorization) {
        if (e == 0 || !is_prime_trial(p))
            throw std::invalid_argument("ExactRing::residue: not a prime-power factorization");
        PrimePower pp{p, e, int_pow(p, e)};
        prod *= pp.pk;
        rad *= p;
        r.comps_.push_back(std::move(pp));
    }
    if (prod != m)
        throw std::invalid_argument("ExactRing::residue: factorization does not multiply to m");
    r.radical_ = rad;
    r.spec_ = "Z/" + m.str();
    return r;
}

ExactRing ExactRing::residue_auto(const Int& m) { return residue(m, factor_small(m)); }

ExactRing ExactRing::product(const std::vector<ExactRing>& factors) {
    if (factors.empty()) throw std::invalid_argument("ExactRing::product: no factors");
    ExactRing r;
    Int m = 1;
    Int rad = 1;
    std::ostringstream spec;
    for (size_t i = 0; i < factors.size(); ++i) {
        const ExactRing& f = factors[i];
        if (f.is_integers())
            throw std::invalid_argument("ExactRing::product: factors must be finite");
        if (int_gcd(m, f.modulus()) != 1)
            throw std::invalid_argument("ExactRing::product: moduli must be pairwise coprime");
        m *= f.modulus();
        rad *= f.radical();
        for (const auto& pp : f.comps_) r.comps_.push_back(pp);
        if (i) spec << "x";
        spec << f.spec_string();
    }
    std::sort(r.comps_.begin(), r.comps_.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    r.m_ = m;
    r.radical_ = rad;
    r.spec_ = spec.str();
    return r;
}

const Int& ExactRing::modulus() const {
    if (integers_) throw std::logic_error("ExactRing::modulus: the integer ring is not finite");
    return m_;
}

const Int& ExactRing::radical() const {
    if (integers_) {
        static const Int zero(0);
        return zero; // nilradical of Z
    }
    return radical_;
}

Int ExactRing::canon(const Int& x) const {
    if (integers_) return x;
    return mod_floor(x, m_);
}

bool ExactRing::is_unit(const Int& x) const {
    if (integers_) return x == 1 || x == -1;
    return int_gcd(canon(x), m_) == 1;
}

Int ExactRing::inv_unit(const Int& x) const {
    if (integers_) {
        if (x == 1 || x == -1) return x;
        throw std::invalid_argument("inv_unit: not a unit of Z");
    }
    auto [g, u, v] = int_xgcd(canon(x), m_);
    if (g != 1) throw std::invalid_argument("inv_unit: not a unit");
    return canon(u);
}

Int ExactRing::ideal_gcd(const Int& x) const {
    if (integers_) return x < 0 ? -x : x;
    Int c = canon(x);
    return c == 0 ? Int(0) : int_gcd(c, m_);
}

Int ExactRing::component(const Int& x, size_t i) const {
    if (integers_) throw std::logic_error("ExactRing::component: integer ring");
    return mod_floor(x, comps_.at(i).pk);
}

Int ExactRing::crt(const std::vector<Int>& residues) const {
    if (integers_) throw std::logic_error("ExactRing::crt: integer ring");
    if (residues.size() != comps_.size())
        throw std::invalid_argument("ExactRing::crt: wrong number of residues");
    Int x = 0;
    Int mod = 1;
    for (size_t i = 0; i < comps_.size(); ++i) {
        const Int& mi = comps_[i].pk;
        Int ri = mod_floor(residues[i], mi);
        // solve x + mod*t == ri (mod mi)
        auto [g, u, v] = int_xgcd(mod, mi);
        (void)v;
        Int t = mod_floor((ri - x) * u, mi);
        x += mod * t;
        mod *= mi;
    }
    return mod_floor(x, m_);
}

bool ExactRing::operator==(const ExactRing& o) const {
    if (integers_ != o.integers_) return false;
    if (integers_) return true;
    return m_ == o.m_;
}

std::vector<Int> idempotents(const ExactRing& r) {
    if (r.is_integers()) return {Int(0), Int(1)};
    size_t k = r.components().size();
    std::vector<Int> out;
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<Int> res(k);
        for (size_t i = 0; i < k; ++i) res[i] = (mask >> i) & 1 ? 1 : 0;
        out.push_back(r.crt(res));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExactRing parse_exact_ring(const std::string& spec) {
    if (spec == "Z") return ExactRing::integers();
    std::vector<ExactRing> factors;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t next = spec.find('x', pos);
        std::string part = spec.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.rfind("Z/", 0) != 0)
            throw ParseError("ring spec: expected Z/<m>", pos);
        std::string digits = part.substr(2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("ring spec: bad modulus '" + digits + "'", pos + 2);
        Int m(digits);
        if (m < 2) throw ParseError("ring spec: modulus must be >= 2", pos + 2);
        factors.push_back(ExactRing::residue_auto(m));
        if (next == std::string::npos) break;
        pos = next + 1;
        if (pos >= spec.size()) throw ParseError("ring spec: trailing 'x'", pos);
    }
    if (factors.empty()) throw ParseError("ring spec: empty", 0);
    if (factors.size() == 1) return factors[0];
    return ExactRing::product(factors);
}

} // namespace ringforge
