#include "ringforge/cut.hpp"

namespace ringforge {

namespace {

void require_kind(const Cut& c, const GroupElement& g, const char* op) {
    if (c.kind() != g.kind())
        throw KindMismatch(std::string(op) + ": cut and value have different group kinds");
}

void require_kind(const Cut& a, const Cut& b, const char* op) {
    if (a.kind() != b.kind())
        throw KindMismatch(std::string(op) + ": cuts have different group kinds");
}

GroupElement successor(const GroupElement& v) {
    switch (v.kind()) {
    case GroupKind::DiscreteZ:
        return v + GroupElement::integer(GroupKind::DiscreteZ, 1);
    case GroupKind::LexZ2:
        return v + GroupElement::pair(0, 1);
    case GroupKind::DenseQ:
        break;
    }
    throw std::logic_error("successor: dense group has no successors");
}

} // namespace

Cut Cut::zero(GroupKind kind) {
    return Cut(kind, Variant::Zero, GroupElement::zero(kind), Int(0));
}

Cut Cut::full(GroupKind kind) {
    return Cut(kind, Variant::Full, GroupElement::zero(kind), Int(0));
}

Cut Cut::closed(const GroupElement& v) {
    if (!v.is_positive()) return full(v.kind());
    return Cut(v.kind(), Variant::Closed, v, Int(0));
}

Cut Cut::open(const GroupElement& v) {
    if (v < GroupElement::zero(v.kind())) return full(v.kind());
    if (v.kind() == GroupKind::DenseQ)
        return Cut(v.kind(), Variant::Open, v, Int(0));
    // discrete order: {gamma > v} = {gamma >= v + least positive step}
    return closed(successor(v));
}

Cut Cut::row(const Int& a) {
    if (a <= 0) return full(GroupKind::LexZ2);
    return Cut(GroupKind::LexZ2, Variant::Row, GroupElement::zero(GroupKind::LexZ2), a);
}

const GroupElement& Cut::bound() const {
    if (variant_ != Variant::Closed && variant_ != Variant::Open)
        throw std::logic_error("Cut::bound: cut has no boundary value");
    return bound_;
}

const Int& Cut::row_bound() const {
    if (variant_ != Variant::Row)
        throw std::logic_error("Cut::row_bound: not a row cut");
    return row_;
}

bool Cut::operator==(const Cut& o) const {
    return kind_ == o.kind_ && variant_ == o.variant_ && bound_ == o.bound_ && row_ == o.row_;
}

bool Cut::operator<(const Cut& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (variant_ != o.variant_) return variant_ < o.variant_;
    if (bound_ != o.bound_) return bound_ < o.bound_;
    return row_ < o.row_;
}

std::string Cut::str() const {
    switch (variant_) {
    case Variant::Zero: return "zero";
    case Variant::Full: return "full";
    case Variant::Closed: return "closed:" + bound_.str();
    case Variant::Open: return "open:" + bound_.str();
    case Variant::Row: return "row:" + row_.str();
    }
    return "?";
}

bool cut_member(const GroupElement& gamma, const Cut& c) {
    require_kind(c, gamma, "cut_member");
    if (!gamma.is_nonneg())
        throw std::invalid_argument("cut_member: value is outside the nonnegative cone");
    switch (c.variant()) {
    case Cut::Variant::Zero: return false;
    case Cut::Variant::Full: return true;
    case Cut::Variant::Closed: return gamma >= c.bound();
    case Cut::Variant::Open: return gamma > c.bound();
    case Cut::Variant::Row: return rat_num(gamma.first()) >= c.row_bound();
    }
    return false;
}

Cut cut_quotient(const Cut& c, const GroupElement& gamma) {
    require_kind(c, gamma, "cut_quotient");
    if (!gamma.is_nonneg())
        throw std::invalid_argument("cut_quotient: value is outside the nonnegative cone");
    switch (c.variant()) {
    case Cut::Variant::Zero: return c;
    case Cut::Variant::Full: return c;
    case Cut::Variant::Closed: return Cut::closed(c.bound() - gamma);
    case Cut::Variant::Open: return Cut::open(c.bound() - gamma);
    case Cut::Variant::Row: return Cut::row(c.row_bound() - rat_num(gamma.first()));
    }
    return c;
}

bool cut_subset(const Cut& c1, const Cut& c2) {
    require_kind(c1, c2, "cut_subset");
    using V = Cut::Variant;
    if (c1.variant() == V::Zero) return true;
    if (c2.variant() == V::Full) return true;
    if (c1.variant() == V::Full) return false; // c2 != Full here
    if (c2.variant() == V::Zero) return false; // c1 != Zero here

    if (c1.variant() == V::Closed && c2.variant() == V::Closed)
        return c1.bound() >= c2.bound();
    if (c1.variant() == V::Closed && c2.variant() == V::Open)
        return c1.bound() > c2.bound();
    if (c1.variant() == V::Open && c2.variant() == V::Closed)
        return c2.bound() <= c1.bound();
    if (c1.variant() == V::Open && c2.variant() == V::Open)
        return c1.bound() >= c2.bound();
    if (c1.variant() == V::Closed && c2.variant() == V::Row)
        return rat_num(c1.bound().first()) >= c2.row_bound();
    if (c1.variant() == V::Row && c2.variant() == V::Closed)
        return c1.row_bound() > rat_num(c2.bound().first());
    if (c1.variant() == V::Row && c2.variant() == V::Row)
        return c1.row_bound() >= c2.row_bound();
    throw std::logic_error("cut_subset: impossible variant pair");
}

Cut cut_sum(const Cut& c1, const Cut& c2) {
    require_kind(c1, c2, "cut_sum");
    return cut_subset(c1, c2) ? c2 : c1;
}

std::pair<bool, std::optional<GroupElement>> cut_is_principal(const Cut& c) {
    switch (c.variant()) {
    case Cut::Variant::Zero: return {true, std::nullopt};
    case Cut::Variant::Full: return {true, GroupElement::zero(c.kind())};
    case Cut::Variant::Closed: return {true, c.bound()};
    case Cut::Variant::Open: return {false, std::nullopt};
    case Cut::Variant::Row: return {false, std::nullopt};
    }
    return {false, std::nullopt};
}

bool cut_is_prime(const Cut& c) {
    if (c.is_full())
        throw std::invalid_argument("cut_is_prime: the unit ideal is not a candidate");
    switch (c.variant()) {
    case Cut::Variant::Zero:
        return true; // the domain case
    case Cut::Variant::Closed:
        // prime iff the bound is the least positive element of the cone
        switch (c.kind()) {
        case GroupKind::DiscreteZ:
            return c.bound() == GroupElement::integer(GroupKind::DiscreteZ, 1);
        case GroupKind::LexZ2:
            return c.bound() == GroupElement::pair(0, 1);
        case GroupKind::DenseQ:
            return false;
        }
        return false;
    case Cut::Variant::Open:
        return c.bound() == GroupElement::zero(c.kind()); // the maximal ideal N
    case Cut::Variant::Row:
        return c.row_bound() == 1;
    case Cut::Variant::Full:
        break;
    }
    return false;
}

CutFgResult cut_fg_mod(const Cut& b, const Cut& a) {
    if (!cut_subset(a, b))
        throw std::invalid_argument("cut_fg_mod: A is not contained in B");
    if (b == a) return {true, std::nullopt}; // zero module
    switch (b.variant()) {
    case Cut::Variant::Closed:
        return {true, b.bound()};
    case Cut::Variant::Full:
        return {true, GroupElement::zero(b.kind())};
    case Cut::Variant::Open:
    case Cut::Variant::Row:
        // strictly above A with no attained minimum: not finitely generated
        return {false, std::nullopt};
    case Cut::Variant::Zero:
        break; // A subset of B forces A == Zero, handled above
    }
    return {true, std::nullopt};
}

} // namespace ringforge
