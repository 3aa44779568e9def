#include "ringforge/function_ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ringforge {

// ---------------------------------------------------------------------------
// TailRule

TailRule::TailRule(Kind k, GroupKind g, Cut u, GroupElement base, GroupElement step, Rat limit,
                   Rat amp)
    : kind_(k), group_(g), uniform_(std::move(u)), base_(std::move(base)),
      step_(std::move(step)), limit_(std::move(limit)), amp_(std::move(amp)) {}

TailRule TailRule::uniform(Cut c) {
    GroupKind g = c.kind();
    return TailRule(Kind::Uniform, g, std::move(c), GroupElement::zero(g), GroupElement::zero(g),
                    Rat(0), Rat(0));
}

TailRule TailRule::arithmetic(const GroupElement& base, const GroupElement& step) {
    require_same_kind(base, step, "TailRule::arithmetic");
    if (!step.is_nonneg())
        throw std::invalid_argument("TailRule::arithmetic: step must be nonnegative");
    if (step.is_zero()) return uniform(Cut::closed(base));
    GroupKind g = base.kind();
    return TailRule(Kind::Arithmetic, g, Cut::full(g), base, step, Rat(0), Rat(0));
}

TailRule TailRule::geometric(const Rat& limit, const Rat& amp) {
    if (amp <= 0) throw std::invalid_argument("TailRule::geometric: amp must be positive");
    GroupKind g = GroupKind::DenseQ;
    return TailRule(Kind::Geometric, g, Cut::full(g), GroupElement::zero(g),
                    GroupElement::zero(g), limit, amp);
}

GroupKind TailRule::group() const { return group_; }

Cut TailRule::cut_at(const Int& n) const {
    if (n < 0) throw std::invalid_argument("TailRule::cut_at: negative index");
    switch (kind_) {
    case Kind::Uniform:
        return uniform_;
    case Kind::Arithmetic:
        return Cut::closed(base_ + step_.scaled(n));
    case Kind::Geometric:
        return Cut::closed(GroupElement::rational(limit_ + amp_ * pow2_inv(n)));
    }
    throw std::logic_error("TailRule::cut_at");
}

const Cut& TailRule::uniform_cut() const {
    if (kind_ != Kind::Uniform) throw std::logic_error("TailRule: not uniform");
    return uniform_;
}
const GroupElement& TailRule::base() const {
    if (kind_ != Kind::Arithmetic) throw std::logic_error("TailRule: not arithmetic");
    return base_;
}
const GroupElement& TailRule::step() const {
    if (kind_ != Kind::Arithmetic) throw std::logic_error("TailRule: not arithmetic");
    return step_;
}
const Rat& TailRule::limit() const {
    if (kind_ != Kind::Geometric) throw std::logic_error("TailRule: not geometric");
    return limit_;
}
const Rat& TailRule::amp() const {
    if (kind_ != Kind::Geometric) throw std::logic_error("TailRule: not geometric");
    return amp_;
}

TailRule TailRule::quotient_by(const ValElement& x) const {
    if (x.is_zero()) return uniform(Cut::full(group_));
    const GroupElement& g = x.value();
    switch (kind_) {
    case Kind::Uniform:
        return uniform(cut_quotient(uniform_, g));
    case Kind::Arithmetic:
        return arithmetic(base_ - g, step_);
    case Kind::Geometric:
        return geometric(limit_ - g.first(), amp_);
    }
    throw std::logic_error("TailRule::quotient_by");
}

bool TailRule::operator==(const TailRule& o) const {
    if (kind_ != o.kind_ || group_ != o.group_) return false;
    switch (kind_) {
    case Kind::Uniform: return uniform_ == o.uniform_;
    case Kind::Arithmetic: return base_ == o.base_ && step_ == o.step_;
    case Kind::Geometric: return limit_ == o.limit_ && amp_ == o.amp_;
    }
    return false;
}

std::string TailRule::str() const {
    std::ostringstream out;
    switch (kind_) {
    case Kind::Uniform:
        out << "uniform(" << uniform_.str() << ")";
        break;
    case Kind::Arithmetic:
        out << "arithmetic(base=" << base_.str() << ",step=" << step_.str() << ")";
        break;
    case Kind::Geometric: {
        GroupElement l = GroupElement::rational(limit_);
        GroupElement a = GroupElement::rational(amp_);
        out << "geometric(limit=" << l.str() << ",amp=" << a.str() << ")";
        break;
    }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// FunElement

FunElement::FunElement(ValElement default_value, std::map<Int, ValElement> overrides)
    : default_(std::move(default_value)), overrides_(std::move(overrides)) {
    for (auto it = overrides_.begin(); it != overrides_.end();) {
        if (it->first < 0) throw std::invalid_argument("FunElement: negative index");
        if (it->second.kind() != default_.kind())
            throw KindMismatch("FunElement: override kind differs from default kind");
        if (it->second == default_) it = overrides_.erase(it);
        else ++it;
    }
}

FunElement FunElement::constant(const ValElement& v) { return FunElement(v); }

FunElement FunElement::basis_term(const Int& index, const ValElement& v) {
    return FunElement(ValElement::zero(v.kind()), {{index, v}});
}

ValElement FunElement::at(const Int& i) const {
    auto it = overrides_.find(i);
    return it == overrides_.end() ? default_ : it->second;
}

bool FunElement::is_zero() const { return default_.is_zero() && overrides_.empty(); }

bool FunElement::operator==(const FunElement& o) const {
    return default_ == o.default_ && overrides_ == o.overrides_;
}

std::string FunElement::str() const {
    std::ostringstream out;
    out << default_.str() << "*1";
    for (const auto& [i, v] : overrides_) out << " | e" << i << ":" << v.str();
    return out.str();
}

FunElement fun_mul(const FunElement& f, const FunElement& g) {
    if (f.kind() != g.kind()) throw KindMismatch("fun_mul: group kinds differ");
    std::map<Int, ValElement> ov;
    for (const auto& [i, v] : f.overrides()) ov.emplace(i, val_mul(v, g.at(i)));
    for (const auto& [i, v] : g.overrides())
        if (!ov.count(i)) ov.emplace(i, val_mul(f.at(i), v));
    return FunElement(val_mul(f.default_value(), g.default_value()), std::move(ov));
}

FunElement fun_add(const FunElement& f, const FunElement& g) {
    if (f.kind() != g.kind()) throw KindMismatch("fun_add: group kinds differ");
    std::map<Int, ValElement> ov;
    for (const auto& [i, v] : f.overrides()) ov.emplace(i, val_add(v, g.at(i)));
    for (const auto& [i, v] : g.overrides())
        if (!ov.count(i)) ov.emplace(i, val_add(f.at(i), v));
    return FunElement(val_add(f.default_value(), g.default_value()), std::move(ov));
}

FunElement fun_scale(const ValElement& c, const FunElement& f) {
    return fun_mul(FunElement::constant(c), f);
}

// ---------------------------------------------------------------------------
// Exact analysis of cut-valued tail sequences.
//
// Every tail rule, viewed as the sequence n -> cut_at(n), decomposes into at
// most two segments, the last one infinite, each in one of three regimes:
// a constant cut, strictly increasing Closed thresholds (affine), or
// strictly decreasing Closed thresholds (geometric, DenseQ). All verdicts
// about "all tail indices" are decided on the final regimes, with a finite
// explicit region below the computed settle point.

namespace {

constexpr long kMaxExplicit = 200000;

long to_long_checked(const Int& n, const char* what) {
    if (n > kMaxExplicit)
        throw std::invalid_argument(std::string(what) + ": descriptor exceeds analysis bounds");
    return n.convert_to<long>();
}

// smallest n >= 0 with b + n*s >= t (or > t when strict); requires the
// sequence b + n*s to be nondecreasing (s >= 0 for tail rules) or, for the
// lex case, any s with positive first coordinate. nullopt when never.
std::optional<Int> scalar_first_reach(const Rat& b, const Rat& s, const Rat& t, bool strict) {
    bool at0 = strict ? (b > t) : (b >= t);
    if (at0) return Int(0);
    if (s <= 0) return std::nullopt;
    Rat q = (t - b) / s;
    Int n = strict ? rat_floor(q) + 1 : rat_ceil(q);
    if (n < 0) n = 0;
    return n;
}

std::optional<Int> affine_first_reach(const GroupElement& b, const GroupElement& s,
                                      const GroupElement& t, bool strict) {
    if (b.kind() != GroupKind::LexZ2)
        return scalar_first_reach(b.first(), s.first(), t.first(), strict);
    Int b1 = rat_num(b.first()), s1 = rat_num(s.first()), t1 = rat_num(t.first());
    if (s1 == 0) {
        if (b1 > t1) return Int(0);
        if (b1 < t1) return std::nullopt;
        return scalar_first_reach(Rat(b.second()), Rat(s.second()), Rat(t.second()), strict);
    }
    if (s1 < 0) throw std::logic_error("affine_first_reach: decreasing first coordinate");
    // s1 > 0: condition true whenever the first coordinate strictly exceeds t1
    Rat q = Rat(t1 - b1, s1);
    Int na = rat_floor(q) + 1;
    if (na < 0) na = 0;
    if ((t1 - b1) % s1 == 0) {
        Int nb = (t1 - b1) / s1;
        if (nb >= 0 && nb < na) {
            Int sec = b.second() + nb * s.second();
            bool ok = strict ? (sec > t.second()) : (sec >= t.second());
            if (ok) return nb;
        }
    }
    return na;
}

// smallest n >= 0 with l + a*2^-n <= t (or < t when strict); nullopt if never
std::optional<Int> geometric_first_drop(const Rat& l, const Rat& a, const Rat& t, bool strict) {
    Rat margin = t - l;
    if (margin <= 0) return std::nullopt; // a*2^-n stays positive
    Rat bound = a / margin;               // need 2^n >= bound (or >)
    Int n = 0;
    Rat p = 1;
    while (strict ? (p <= bound) : (p < bound)) {
        p *= 2;
        ++n;
        if (n > kMaxExplicit) throw std::invalid_argument("geometric_first_drop: out of bounds");
    }
    return n;
}

struct Regime {
    enum class Kind { ConstCut, Inc, Dec };
    Kind kind;
    Cut cut;                 // ConstCut
    GroupElement base, step; // Inc: thresholds base + n*step, proper on the segment
    Rat limit, amp;          // Dec: thresholds limit + amp*2^-n, proper on the segment

    static Regime constant(Cut c) {
        GroupKind g = c.kind();
        return {Kind::ConstCut, std::move(c), GroupElement::zero(g), GroupElement::zero(g),
                Rat(0), Rat(0)};
    }
    static Regime inc(GroupElement b, GroupElement s) {
        GroupKind g = b.kind();
        return {Kind::Inc, Cut::full(g), std::move(b), std::move(s), Rat(0), Rat(0)};
    }
    static Regime dec(Rat l, Rat a) {
        GroupKind g = GroupKind::DenseQ;
        return {Kind::Dec, Cut::full(g), GroupElement::zero(g), GroupElement::zero(g),
                std::move(l), std::move(a)};
    }

    Cut eval(const Int& n) const {
        switch (kind) {
        case Kind::ConstCut: return cut;
        case Kind::Inc: return Cut::closed(base + step.scaled(n));
        case Kind::Dec: return Cut::closed(GroupElement::rational(limit + amp * pow2_inv(n)));
        }
        throw std::logic_error("Regime::eval");
    }
};

struct Segment {
    Int start;
    Regime regime;
};

struct SegSeq {
    std::vector<Segment> segs; // last segment extends to infinity

    const Segment& final_segment() const { return segs.back(); }

    Int max_boundary() const { return segs.back().start; }
};

SegSeq seq_of_tail(const TailRule& t) {
    switch (t.kind()) {
    case TailRule::Kind::Uniform:
        return {{{Int(0), Regime::constant(t.uniform_cut())}}};
    case TailRule::Kind::Arithmetic: {
        GroupElement zero = GroupElement::zero(t.group());
        auto n0 = affine_first_reach(t.base(), t.step(), zero, /*strict=*/true);
        if (!n0) return {{{Int(0), Regime::constant(Cut::full(t.group()))}}};
        Regime inc = Regime::inc(t.base(), t.step());
        if (*n0 == 0) return {{{Int(0), inc}}};
        return {{{Int(0), Regime::constant(Cut::full(t.group()))}, {*n0, inc}}};
    }
    case TailRule::Kind::Geometric: {
        Rat w0 = t.limit() + t.amp();
        if (w0 <= 0) return {{{Int(0), Regime::constant(Cut::full(t.group()))}}};
        Regime dec = Regime::dec(t.limit(), t.amp());
        if (t.limit() >= 0) return {{{Int(0), dec}}};
        auto n1 = geometric_first_drop(t.limit(), t.amp(), Rat(0), /*strict=*/false);
        return {{{Int(0), dec}, {*n1, Regime::constant(Cut::full(t.group()))}}};
    }
    }
    throw std::logic_error("seq_of_tail");
}

/// Eventual verdict of a per-index predicate. value=true means the predicate
/// holds for ALL n >= from; value=false means it fails for infinitely many
/// n >= from (for the monotone predicates used in subset logic, it then
/// fails for all n >= from).
struct Eventual {
    bool value;
    Int from;
};

// eventual sign of the affine sequence db + n*ds (ds of arbitrary sign)
Eventual ev_affine_nonneg_scalar(const Rat& db, const Rat& ds) {
    if (ds > 0) {
        auto r = scalar_first_reach(db, ds, Rat(0), false);
        return {true, *r};
    }
    if (ds == 0) return {db >= 0, Int(0)};
    auto r = scalar_first_reach(-db, -ds, Rat(0), true); // first n with db + n ds < 0
    return {false, *r};
}

Eventual ev_affine_nonneg(const GroupElement& db, const GroupElement& ds) {
    if (db.kind() != GroupKind::LexZ2) return ev_affine_nonneg_scalar(db.first(), ds.first());
    Int ds1 = rat_num(ds.first());
    Int db1 = rat_num(db.first());
    if (ds1 > 0) {
        auto r = affine_first_reach(db, ds, GroupElement::zero(GroupKind::LexZ2), false);
        return {true, *r};
    }
    if (ds1 < 0) {
        auto r = affine_first_reach(-db, -ds, GroupElement::zero(GroupKind::LexZ2), true);
        return {false, *r};
    }
    if (db1 > 0) return {true, Int(0)};
    if (db1 < 0) return {false, Int(0)};
    return ev_affine_nonneg_scalar(Rat(db.second()), Rat(ds.second()));
}

// eventual sign of dl + da*2^-n
Eventual ev_geometric_nonneg(const Rat& dl, const Rat& da) {
    if (dl > 0) {
        if (da >= 0) return {true, Int(0)};
        auto r = geometric_first_drop(Rat(0), -da, dl, false); // first n with -da*2^-n <= dl
        return {true, *r};
    }
    if (dl < 0) {
        if (da <= 0) return {false, Int(0)};
        auto r = geometric_first_drop(Rat(0), da, -dl, true); // first n with da*2^-n < -dl
        return {false, *r};
    }
    return {da >= 0, Int(0)};
}

// first n >= lo where pred(n) holds; pred must be monotone nondecreasing and
// eventually true
Int first_true_monotone(const std::function<bool(const Int&)>& pred, Int lo) {
    Int hi = lo;
    Int width = 1;
    int guard = 0;
    while (!pred(hi)) {
        hi += width;
        width *= 2;
        if (++guard > 200) throw std::logic_error("first_true_monotone: no crossing found");
    }
    while (lo < hi) {
        Int mid = lo + (hi - lo) / 2;
        if (pred(mid)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

// eventual verdict of cut_subset(A.eval(n), B.eval(n)) on final regimes
Eventual ev_subset(const Regime& a, const Int& froma, const Regime& b, const Int& fromb) {
    Int from = std::max(froma, fromb);
    using K = Regime::Kind;

    if (a.kind == K::ConstCut && b.kind == K::ConstCut)
        return {cut_subset(a.cut, b.cut), from};

    if (a.kind == K::ConstCut && b.kind == K::Inc) {
        // shrinking right side: subset can only be lost, never gained
        const Cut& c = a.cut;
        if (c.is_zero()) return {true, from};
        if (c.is_full()) return {false, from};
        std::optional<Int> fail;
        if (c.is_closed())
            fail = affine_first_reach(b.base, b.step, c.bound(), true); // threshold > u
        else if (c.is_open())
            fail = affine_first_reach(b.base, b.step, c.bound(), true);
        else { // Row(r): fails when first coordinate of threshold >= r
            Rat r0 = Rat(c.row_bound());
            fail = scalar_first_reach(b.base.first(), b.step.first(), r0, false);
        }
        if (fail) return {false, std::max(from, *fail)};
        return {true, from};
    }

    if (a.kind == K::ConstCut && b.kind == K::Dec) {
        // growing right side: subset can only be gained
        const Cut& c = a.cut;
        if (c.is_zero()) return {true, from};
        if (c.is_full()) return {false, from};
        Rat u = c.bound().first();
        auto r = geometric_first_drop(b.limit, b.amp, u, false); // threshold <= u
        if (r) return {true, std::max(from, *r)};
        return {false, from};
    }

    if (a.kind == K::Inc && b.kind == K::ConstCut) {
        // shrinking left side: subset can only be gained
        const Cut& c = b.cut;
        if (c.is_full()) return {true, from};
        if (c.is_zero()) return {false, from};
        std::optional<Int> reach;
        if (c.is_closed())
            reach = affine_first_reach(a.base, a.step, c.bound(), false);
        else if (c.is_open())
            reach = affine_first_reach(a.base, a.step, c.bound(), true);
        else { // Row(r): need first coordinate >= r
            Rat r0 = Rat(c.row_bound());
            reach = scalar_first_reach(a.base.first(), a.step.first(), r0, false);
        }
        if (reach) return {true, std::max(from, *reach)};
        return {false, from};
    }

    if (a.kind == K::Dec && b.kind == K::ConstCut) {
        const Cut& c = b.cut;
        if (c.is_full()) return {true, from};
        if (c.is_zero()) return {false, from};
        Rat u = c.bound().first();
        if (a.limit >= u) return {true, from}; // thresholds stay above the bound
        // failure begins where the thresholds drop below (Closed) or to (Open) u
        auto r = geometric_first_drop(a.limit, a.amp, u, c.is_closed());
        return {false, r ? std::max(from, *r) : from};
    }

    if (a.kind == K::Inc && b.kind == K::Inc) {
        Eventual e = ev_affine_nonneg(a.base - b.base, a.step - b.step);
        return {e.value, std::max(from, e.from)};
    }

    if (a.kind == K::Dec && b.kind == K::Dec) {
        Eventual e = ev_geometric_nonneg(a.limit - b.limit, a.amp - b.amp);
        return {e.value, std::max(from, e.from)};
    }

    if (a.kind == K::Inc && b.kind == K::Dec) {
        // thresholds of a grow without bound (scalar), b's shrink:
        // containment is eventually gained
        auto pred = [&](const Int& n) {
            return a.base.first() + a.step.first() * Rat(n) >= b.limit + b.amp * pow2_inv(n);
        };
        Int r = first_true_monotone(pred, from);
        return {true, r};
    }

    if (a.kind == K::Dec && b.kind == K::Inc) {
        // a's thresholds shrink toward a limit, b's grow without bound:
        // containment is eventually lost
        auto pred = [&](const Int& n) {
            return !(a.limit + a.amp * pow2_inv(n) >= b.base.first() + b.step.first() * Rat(n));
        };
        Int r = first_true_monotone(pred, from);
        return {false, r};
    }

    throw std::logic_error("ev_subset: unhandled regime pair");
}

// eventual verdict of A.eval(n) == B.eval(n) on final regimes; a false value
// here means they differ for all large n up to at most one index
Eventual ev_equal(const Regime& a, const Int& froma, const Regime& b, const Int& fromb) {
    Int from = std::max(froma, fromb);
    using K = Regime::Kind;
    if (a.kind == K::ConstCut && b.kind == K::ConstCut) return {a.cut == b.cut, from};
    if (a.kind == K::Inc && b.kind == K::Inc)
        return {a.base == b.base && a.step == b.step, from};
    if (a.kind == K::Dec && b.kind == K::Dec)
        return {a.limit == b.limit && a.amp == b.amp, from};
    // mixed regimes: a strictly monotone sequence never agrees with a
    // constant or an oppositely monotone one beyond a single index
    return {false, from};
}

// final regime of n -> cut_sum(k, a.eval(n))
std::pair<Regime, Int> ev_sum_const(const Cut& k, const Regime& a, const Int& froma) {
    using RK = Regime::Kind;
    if (k.is_full()) return {Regime::constant(k), froma};
    if (k.is_zero()) return {a, froma};
    if (a.kind == RK::ConstCut) return {Regime::constant(cut_sum(k, a.cut)), froma};

    // a evaluates to proper Closed cuts on its regime; the sum is k once the
    // a-cut is inside k, and the a-cut otherwise (cuts form a chain)
    Eventual inside = ev_subset(a, froma, Regime::constant(k), froma);
    if (inside.value) return {Regime::constant(k), inside.from};
    return {a, inside.from};
}

void collect_boundary(const SegSeq& s, Int& bound) {
    bound = std::max(bound, s.max_boundary());
}

} // namespace

// ---------------------------------------------------------------------------
// SubmoduleDescriptor

SubmoduleDescriptor::SubmoduleDescriptor(Cut const_cut, TailRule tail, std::map<Int, Cut> overrides)
    : const_(std::move(const_cut)), tail_(std::move(tail)), overrides_(std::move(overrides)) {
    if (const_.kind() != tail_.group())
        throw KindMismatch("SubmoduleDescriptor: constant cut and tail rule kinds differ");
    for (auto it = overrides_.begin(); it != overrides_.end();) {
        if (it->first < 0) throw std::invalid_argument("SubmoduleDescriptor: negative index");
        if (it->second.kind() != const_.kind())
            throw KindMismatch("SubmoduleDescriptor: override kind differs");
        if (it->second == tail_.cut_at(it->first)) it = overrides_.erase(it);
        else ++it;
    }
}

Cut SubmoduleDescriptor::cut_at(const Int& i) const {
    auto it = overrides_.find(i);
    return it == overrides_.end() ? tail_.cut_at(i) : it->second;
}

bool SubmoduleDescriptor::is_full() const {
    if (!const_.is_full()) return false;
    for (const auto& [i, c] : overrides_)
        if (!c.is_full()) return false;
    SegSeq s = seq_of_tail(tail_);
    for (const auto& seg : s.segs)
        if (!(seg.regime.kind == Regime::Kind::ConstCut && seg.regime.cut.is_full()))
            return false;
    return true;
}

bool SubmoduleDescriptor::operator==(const SubmoduleDescriptor& o) const {
    return const_ == o.const_ && tail_ == o.tail_ && overrides_ == o.overrides_;
}

std::string SubmoduleDescriptor::str() const {
    std::ostringstream out;
    out << "{const=" << const_.str() << ", tail=" << tail_.str();
    if (!overrides_.empty()) {
        out << ", overrides={";
        bool first = true;
        for (const auto& [i, c] : overrides_) {
            if (!first) out << ", ";
            out << i << ":" << c.str();
            first = false;
        }
        out << "}";
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------------------
// Membership and containment

namespace {

bool member_or_zero(const ValElement& v, const Cut& c) {
    if (v.is_zero()) return true;
    return cut_member(v.value(), c);
}

std::set<Int> override_keys(const SubmoduleDescriptor& a) {
    std::set<Int> keys;
    for (const auto& [i, c] : a.overrides()) keys.insert(i);
    return keys;
}

} // namespace

bool desc_member(const FunElement& f, const SubmoduleDescriptor& a) {
    if (f.kind() != a.kind()) throw KindMismatch("desc_member: group kinds differ");
    if (!member_or_zero(f.default_value(), a.const_cut())) return false;

    std::set<Int> keys = override_keys(a);
    for (const auto& [i, v] : f.overrides()) keys.insert(i);
    for (const Int& i : keys)
        if (!member_or_zero(f.at(i), a.cut_at(i))) return false;

    // tail condition: the default value must lie in the tail cut at every
    // index that was not explicitly checked above
    const ValElement& d = f.default_value();
    if (d.is_zero()) return true;
    const GroupElement& v = d.value();

    SegSeq seq = seq_of_tail(a.tail());
    for (size_t si = 0; si < seq.segs.size(); ++si) {
        const Segment& seg = seq.segs[si];
        bool last = si + 1 == seq.segs.size();
        Int lo = seg.start;
        std::optional<Int> hi;
        if (!last) hi = seq.segs[si + 1].start;

        switch (seg.regime.kind) {
        case Regime::Kind::ConstCut: {
            // one membership test, provided some index of the segment is not
            // an override
            bool has_free_index = false;
            if (!hi) {
                has_free_index = true; // infinite segment, overrides are finite
            } else {
                for (Int n = lo; n < *hi; ++n)
                    if (!keys.count(n)) { has_free_index = true; break; }
            }
            if (has_free_index && !cut_member(v, seg.regime.cut)) return false;
            break;
        }
        case Regime::Kind::Inc: {
            if (!hi) {
                // failures form a tail of indices; overrides cannot cover it
                if (affine_first_reach(seg.regime.base, seg.regime.step, v, true)) return false;
            } else {
                // hardest at the largest non-override index of the segment
                for (Int n = *hi - 1; n >= lo; --n) {
                    if (keys.count(n)) continue;
                    if (!cut_member(v, seg.regime.eval(n))) return false;
                    break;
                }
            }
            break;
        }
        case Regime::Kind::Dec: {
            if (!hi) {
                // member(v, Closed(w_n)) asks v >= w_n; thresholds decrease,
                // so failures form an initial block [lo, r)
                auto r = geometric_first_drop(seg.regime.limit, seg.regime.amp, v.first(), false);
                if (!r) return false; // v stays below every threshold
                for (Int n = lo; n < *r; ++n)
                    if (!keys.count(n)) return false;
                break;
            }
            // hardest at the smallest non-override index
            for (Int n = lo; n < *hi; ++n) {
                if (keys.count(n)) continue;
                if (!cut_member(v, seg.regime.eval(n))) return false;
                break;
            }
            break;
        }
        }
    }
    return true;
}

bool desc_subset(const SubmoduleDescriptor& a, const SubmoduleDescriptor& b) {
    if (a.kind() != b.kind()) throw KindMismatch("desc_subset: group kinds differ");
    if (!cut_subset(a.const_cut(), b.const_cut())) return false;

    SegSeq sa = seq_of_tail(a.tail());
    SegSeq sb = seq_of_tail(b.tail());
    Int bound = 0;
    collect_boundary(sa, bound);
    collect_boundary(sb, bound);
    for (const auto& [i, c] : a.overrides()) bound = std::max(bound, Int(i + 1));
    for (const auto& [i, c] : b.overrides()) bound = std::max(bound, Int(i + 1));

    Eventual ev = ev_subset(sa.final_segment().regime, sa.final_segment().start,
                            sb.final_segment().regime, sb.final_segment().start);
    Int explicit_to = std::max(bound, ev.from);
    long n_end = to_long_checked(explicit_to, "desc_subset");
    for (long n = 0; n < n_end; ++n)
        if (!cut_subset(a.cut_at(Int(n)), b.cut_at(Int(n)))) return false;
    return ev.value;
}

bool desc_equivalent(const SubmoduleDescriptor& a, const SubmoduleDescriptor& b) {
    return desc_subset(a, b) && desc_subset(b, a);
}

SubmoduleDescriptor desc_quotient(const SubmoduleDescriptor& a, const FunElement& x) {
    if (a.kind() != x.kind()) throw KindMismatch("desc_quotient: group kinds differ");
    auto quot = [](const Cut& c, const ValElement& e) {
        return e.is_zero() ? Cut::full(c.kind()) : cut_quotient(c, e.value());
    };
    Cut cq = quot(a.const_cut(), x.default_value());
    TailRule tq = a.tail().quotient_by(x.default_value());
    std::map<Int, Cut> ov;
    std::set<Int> keys = override_keys(a);
    for (const auto& [i, v] : x.overrides()) keys.insert(i);
    for (const Int& i : keys) ov.emplace(i, quot(a.cut_at(i), x.at(i)));
    return SubmoduleDescriptor(std::move(cq), std::move(tq), std::move(ov));
}

// ---------------------------------------------------------------------------
// SRingQuotient and annihilators

namespace {

/// The modulus must decompose as (constant part) + (per-index parts): the
/// constant cut must be contained in the cut at every index.
bool desc_decomposable(const SubmoduleDescriptor& a) {
    const Cut& c = a.const_cut();
    SegSeq s = seq_of_tail(a.tail());
    Int bound = s.max_boundary();
    for (const auto& [i, cut] : a.overrides()) bound = std::max(bound, Int(i + 1));
    Eventual ev = ev_subset(Regime::constant(c), Int(0), s.final_segment().regime,
                            s.final_segment().start);
    Int explicit_to = std::max(bound, ev.from);
    long n_end = to_long_checked(explicit_to, "desc_decomposable");
    for (long n = 0; n < n_end; ++n)
        if (!cut_subset(c, a.cut_at(Int(n)))) return false;
    return ev.value;
}

} // namespace

SRingQuotient::SRingQuotient(GroupKind k, SubmoduleDescriptor m)
    : kind(k), modulus(std::move(m)) {
    if (modulus.kind() != kind)
        throw KindMismatch("SRingQuotient: modulus kind differs from ring kind");
    if (modulus.const_cut().is_full())
        throw std::invalid_argument("SRingQuotient: modulus must be a proper submodule");
    if (!desc_decomposable(modulus))
        throw std::invalid_argument(
            "SRingQuotient: modulus constant cut must be contained in every index cut");
}

SubmoduleDescriptor ann_cyclic(const SRingQuotient& r, const FunElement& x) {
    if (x.kind() != r.kind) throw KindMismatch("ann_cyclic: group kinds differ");
    return desc_quotient(r.modulus, x);
}

DescFgResult desc_fg_mod(const SubmoduleDescriptor& b, const SubmoduleDescriptor& a) {
    if (a.kind() != b.kind()) throw KindMismatch("desc_fg_mod: group kinds differ");
    if (!desc_decomposable(a))
        throw std::invalid_argument("desc_fg_mod: A is not a decomposable modulus");
    if (!desc_subset(a, b))
        throw std::invalid_argument("desc_fg_mod: A is not contained in B");

    DescFgResult out;
    const Cut& k = b.const_cut();

    SegSeq sa = seq_of_tail(a.tail());
    SegSeq sb = seq_of_tail(b.tail());
    Int bound = 0;
    collect_boundary(sa, bound);
    collect_boundary(sb, bound);
    for (const auto& [i, c] : a.overrides()) bound = std::max(bound, Int(i + 1));
    for (const auto& [i, c] : b.overrides()) bound = std::max(bound, Int(i + 1));

    auto [target, from_t] = ev_sum_const(k, sa.final_segment().regime, sa.final_segment().start);
    Eventual ev = ev_equal(sb.final_segment().regime, sb.final_segment().start, target, from_t);

    Int explicit_to = std::max(bound, ev.from);
    long n_end = to_long_checked(explicit_to, "desc_fg_mod");

    std::vector<Int> exceptional;
    for (long n = 0; n < n_end; ++n) {
        Int i(n);
        if (b.cut_at(i) != cut_sum(k, a.cut_at(i))) exceptional.push_back(i);
    }

    if (!ev.value) {
        out.fg = false;
        out.fail = DescFgResult::Fail::InfinitelyManyIndices;
        out.infinitely_many = true;
        out.failing_indices = exceptional;
        // extend the sample with the first few failures past the settle point
        for (long n = n_end; n < n_end + 64 && out.failing_indices.size() < 8; ++n) {
            Int i(n);
            if (b.cut_at(i) != cut_sum(k, a.cut_at(i))) out.failing_indices.push_back(i);
        }
        return out;
    }

    CutFgResult const_fg = cut_fg_mod(k, a.const_cut());
    if (!const_fg.fg) {
        out.fg = false;
        out.fail = DescFgResult::Fail::ConstNotFg;
        return out;
    }
    if (const_fg.generator) {
        // the constant-part generator must vanish at the exceptional
        // indices: their cuts need not admit its default value
        std::map<Int, ValElement> zeros;
        for (const Int& i : exceptional) zeros.emplace(i, ValElement::zero(a.kind()));
        out.generators.push_back(
            FunElement(ValElement::monic(*const_fg.generator), std::move(zeros)));
    }

    for (const Int& i : exceptional) {
        CutFgResult fgi = cut_fg_mod(b.cut_at(i), a.cut_at(i));
        if (!fgi.fg) {
            out.fg = false;
            out.fail = DescFgResult::Fail::IndexCutNotFg;
            out.failing_indices = {i};
            out.generators.clear();
            return out;
        }
        if (fgi.generator)
            out.generators.push_back(FunElement::basis_term(i, ValElement::monic(*fgi.generator)));
    }

    out.fg = true;
    out.fail = DescFgResult::Fail::None;
    return out;
}

SLambdaResult lambda_cyclic_s(const SRingQuotient& r, const FunElement& x, int depth) {
    if (depth < 1) throw std::invalid_argument("lambda_cyclic_s: depth must be >= 1");
    SLambdaResult res;
    FunElement y = x;
    for (int k = 0; k < depth; ++k) {
        SubmoduleDescriptor ann = ann_cyclic(r, y);
        res.chain.push_back(ann);
        if (ann.is_full() || desc_equivalent(ann, r.modulus)) {
            // the class of y is zero or regular: free continuation
            res.value = LambdaValue::infinite();
            res.reason = LambdaReason::ZeroOrUnit;
            return res;
        }
        for (size_t j = 0; j + 1 < res.chain.size(); ++j) {
            if (desc_equivalent(res.chain[j], ann)) {
                res.value = LambdaValue::infinite();
                res.reason = LambdaReason::Periodic;
                return res;
            }
        }
        DescFgResult fg = desc_fg_mod(ann, r.modulus);
        if (!fg.fg) {
            res.value = LambdaValue::finite(k + 1);
            res.reason = LambdaReason::NotFG;
            return res;
        }
        bool cyclic = fg.generators.size() == 1 && fg.generators[0].overrides().empty();
        if (!cyclic) {
            res.value = LambdaValue::at_least(k + 2);
            res.reason = LambdaReason::NonCyclic;
            return res;
        }
        y = fg.generators[0];
    }
    res.value = LambdaValue::at_least(depth);
    res.reason = LambdaReason::DepthCap;
    return res;
}

// ---------------------------------------------------------------------------
// Distinguished ideals and the named examples

Cut maximal_ideal_cut(GroupKind kind) {
    switch (kind) {
    case GroupKind::DiscreteZ:
        return Cut::closed(GroupElement::integer(kind, 1));
    case GroupKind::DenseQ:
        return Cut::open(GroupElement::rational(Rat(0)));
    case GroupKind::LexZ2:
        return Cut::closed(GroupElement::pair(0, 1));
    }
    throw std::logic_error("maximal_ideal_cut");
}

SubmoduleDescriptor jacobson_descriptor(GroupKind kind) {
    Cut n = maximal_ideal_cut(kind);
    return SubmoduleDescriptor(n, TailRule::uniform(n));
}

SubmoduleDescriptor maximal_ideal_m0(GroupKind kind) {
    return SubmoduleDescriptor(maximal_ideal_cut(kind), TailRule::uniform(Cut::full(kind)));
}

SubmoduleDescriptor maximal_ideal_mi(GroupKind kind, const Int& i) {
    return SubmoduleDescriptor(Cut::full(kind), TailRule::uniform(Cut::full(kind)),
                               {{i, maximal_ideal_cut(kind)}});
}

const FunElement& NamedExample::element(const std::string& key) const {
    auto it = elements.find(key);
    if (it == elements.end())
        throw std::invalid_argument("NamedExample: no element named " + key);
    return it->second;
}

NamedExample build_named_example(const std::string& name) {
    if (name == "dim3") {
        GroupKind k = GroupKind::LexZ2;
        ValElement a = ValElement::monic(GroupElement::pair(0, 1));
        ValElement b = ValElement::monic(GroupElement::pair(1, 0));
        ValElement ab = val_mul(a, b);
        SubmoduleDescriptor mod(Cut::closed(ab.value()), TailRule::uniform(Cut::row(1)));
        NamedExample ex{name, SRingQuotient(k, std::move(mod)), {}};
        ex.elements.emplace("a1", FunElement::constant(a));
        ex.elements.emplace("b1", FunElement::constant(b));
        ex.elements.emplace("ab1", FunElement::constant(ab));
        return ex;
    }
    if (name == "reduced") {
        GroupKind k = GroupKind::LexZ2;
        SubmoduleDescriptor mod(Cut::zero(k), TailRule::uniform(maximal_ideal_cut(k)));
        NamedExample ex{name, SRingQuotient(k, std::move(mod)), {}};
        ex.elements.emplace("a1", FunElement::constant(ValElement::monic(GroupElement::pair(0, 1))));
        return ex;
    }
    if (name == "noncoherent") {
        GroupKind k = GroupKind::DenseQ;
        // v(a) = 1, v(b_n) = 2^-n, A = D(a b_0) 1 + sum D(a b_n) e_n
        SubmoduleDescriptor mod(Cut::closed(GroupElement::rational(Rat(2))),
                                TailRule::geometric(Rat(1), Rat(1)));
        NamedExample ex{name, SRingQuotient(k, std::move(mod)), {}};
        ex.elements.emplace("a1", FunElement::constant(ValElement::monic(GroupElement::rational(Rat(1)))));
        ex.elements.emplace("b0_1", FunElement::constant(ValElement::monic(GroupElement::rational(Rat(1)))));
        return ex;
    }
    if (name == "padic") {
        GroupKind k = GroupKind::DiscreteZ;
        // A = (+)_{n>=1} D p^n e_n over the p-adic-style discrete domain
        SubmoduleDescriptor mod(Cut::zero(k),
                                TailRule::arithmetic(GroupElement::integer(k, 0),
                                                     GroupElement::integer(k, 1)),
                                {{Int(0), Cut::zero(k)}});
        NamedExample ex{name, SRingQuotient(k, std::move(mod)), {}};
        ex.elements.emplace("p1", FunElement::constant(ValElement::monic(GroupElement::integer(k, 1))));
        return ex;
    }
    throw std::invalid_argument("build_named_example: unknown name " + name +
                                " (expected dim3, reduced, noncoherent, padic)");
}

FunElement padic_power_element(int k) {
    if (k < 0) throw std::invalid_argument("padic_power_element: negative power");
    return FunElement::constant(ValElement::monic(GroupElement::integer(GroupKind::DiscreteZ, k)));
}

} // namespace ringforge
