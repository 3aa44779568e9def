#include "ringforge/group.hpp"

#include <sstream>

namespace ringforge {

std::string group_kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::DiscreteZ: return "Z";
    case GroupKind::DenseQ: return "Q";
    case GroupKind::LexZ2: return "Z2lex";
    }
    return "?";
}

GroupElement GroupElement::integer(GroupKind kind, Int n) {
    if (kind == GroupKind::LexZ2)
        throw std::invalid_argument("GroupElement::integer: LexZ2 needs two coordinates");
    return GroupElement(kind, Rat(std::move(n)), Int(0));
}

GroupElement GroupElement::rational(Rat q) {
    return GroupElement(GroupKind::DenseQ, std::move(q), Int(0));
}

GroupElement GroupElement::pair(Int a, Int b) {
    return GroupElement(GroupKind::LexZ2, Rat(std::move(a)), std::move(b));
}

GroupElement GroupElement::zero(GroupKind kind) {
    return GroupElement(kind, Rat(0), Int(0));
}

bool GroupElement::is_nonneg() const {
    return *this >= zero(kind_);
}

bool GroupElement::is_positive() const {
    return *this > zero(kind_);
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    require_same_kind(*this, o, "add");
    return GroupElement(kind_, first_ + o.first_, second_ + o.second_);
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
    require_same_kind(*this, o, "subtract");
    return GroupElement(kind_, first_ - o.first_, second_ - o.second_);
}

GroupElement GroupElement::operator-() const {
    return GroupElement(kind_, -first_, -second_);
}

GroupElement GroupElement::scaled(const Int& n) const {
    return GroupElement(kind_, first_ * Rat(n), second_ * n);
}

bool GroupElement::operator==(const GroupElement& o) const {
    return kind_ == o.kind_ && first_ == o.first_ && second_ == o.second_;
}

bool GroupElement::operator<(const GroupElement& o) const {
    require_same_kind(*this, o, "compare");
    if (kind_ == GroupKind::LexZ2) {
        if (first_ != o.first_) return first_ < o.first_;
        return second_ < o.second_;
    }
    return first_ < o.first_;
}

bool GroupElement::operator<=(const GroupElement& o) const {
    return *this < o || *this == o;
}

std::string GroupElement::str() const {
    std::ostringstream out;
    if (kind_ == GroupKind::LexZ2) {
        out << "(" << rat_num(first_) << "," << second_ << ")";
    } else if (is_integral(first_)) {
        out << rat_num(first_);
    } else {
        out << rat_num(first_) << "/" << rat_den(first_);
    }
    return out.str();
}

void require_same_kind(const GroupElement& a, const GroupElement& b, const char* op) {
    if (a.kind() != b.kind())
        throw KindMismatch(std::string(op) + ": group kinds differ (" +
                           group_kind_name(a.kind()) + " vs " + group_kind_name(b.kind()) + ")");
}

} // namespace ringforge
