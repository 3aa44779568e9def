#pragma once

#include "ringforge/cut.hpp"
#include "ringforge/valuation.hpp"

#include <random>
#include <vector>

// Shared sampling helpers for the test suites. Bounds follow the project
// convention: coordinates in [-8, 8] scaled into the cone, rational
// denominators <= 16.

namespace rf_test {

using namespace ringforge;

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

inline Rat rand_rat(std::mt19937_64& rng, long lo, long hi, long max_den = 16) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(Int(num(rng)), Int(den(rng)));
}

/// Random element of the nonnegative cone.
inline GroupElement rand_cone(GroupKind kind, std::mt19937_64& rng) {
    switch (kind) {
    case GroupKind::DiscreteZ:
        return GroupElement::integer(kind, rand_int(rng, 0, 8));
    case GroupKind::DenseQ: {
        Rat q = rand_rat(rng, 0, 8);
        return GroupElement::rational(q);
    }
    case GroupKind::LexZ2: {
        Int a = rand_int(rng, 0, 8);
        Int b = rand_int(rng, a == 0 ? 0 : -8, 8);
        return GroupElement::pair(a, b);
    }
    }
    throw std::logic_error("rand_cone");
}

/// Random strictly positive cone element.
inline GroupElement rand_cone_positive(GroupKind kind, std::mt19937_64& rng) {
    for (;;) {
        GroupElement g = rand_cone(kind, rng);
        if (g.is_positive()) return g;
    }
}

/// Random normalized cut, all variants represented.
inline Cut rand_cut(GroupKind kind, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(rng)) {
    case 0: return Cut::zero(kind);
    case 1: return Cut::full(kind);
    case 2: return Cut::closed(rand_cone_positive(kind, rng));
    case 3:
        if (kind == GroupKind::DenseQ) return Cut::open(rand_cone(kind, rng));
        return Cut::closed(rand_cone_positive(kind, rng));
    case 4:
        if (kind == GroupKind::LexZ2) return Cut::row(rand_int(rng, 1, 8));
        return Cut::closed(rand_cone_positive(kind, rng));
    default: return Cut::closed(rand_cone_positive(kind, rng));
    }
}

/// Random proper cut, usable as a quotient modulus.
inline Cut rand_modulus(GroupKind kind, std::mt19937_64& rng) {
    for (;;) {
        Cut c = rand_cut(kind, rng);
        if (!c.is_full()) return c;
    }
}

/// A fixed grid of cone points for pointwise membership comparisons.
inline std::vector<GroupElement> sample_grid(GroupKind kind) {
    std::vector<GroupElement> out;
    switch (kind) {
    case GroupKind::DiscreteZ:
        for (long n = 0; n <= 16; ++n)
            out.push_back(GroupElement::integer(kind, Int(n)));
        break;
    case GroupKind::DenseQ:
        for (long n = 0; n <= 16 * 8; ++n)
            out.push_back(GroupElement::rational(Rat(Int(n), Int(8))));
        break;
    case GroupKind::LexZ2:
        for (long a = 0; a <= 10; ++a)
            for (long b = (a == 0 ? 0 : -10); b <= 10; ++b)
                out.push_back(GroupElement::pair(Int(a), Int(b)));
        break;
    }
    return out;
}

inline std::vector<GroupKind> all_kinds() {
    return {GroupKind::DiscreteZ, GroupKind::DenseQ, GroupKind::LexZ2};
}

} // namespace rf_test
