#pragma once

#include "ringforge/numeric.hpp"

#include <compare>
#include <string>

namespace ringforge {

/// The three ordered value groups the toolkit computes with.
enum class GroupKind {
    DiscreteZ, // integers
    DenseQ,    // rationals
    LexZ2,     // integer pairs, lexicographic order
};

std::string group_kind_name(GroupKind k);

/// An element of an ordered value group. Exact arbitrary-precision
/// coordinates; one coordinate for DiscreteZ/DenseQ, two for LexZ2.
class GroupElement {
public:
    static GroupElement integer(GroupKind kind, Int n);
    static GroupElement rational(Rat q); // DenseQ
    static GroupElement pair(Int a, Int b); // LexZ2
    static GroupElement zero(GroupKind kind);

    GroupKind kind() const { return kind_; }

    /// First (and for scalar kinds, only) coordinate. Integral for
    /// DiscreteZ and LexZ2.
    const Rat& first() const { return first_; }
    /// Second coordinate; LexZ2 only.
    const Int& second() const { return second_; }

    bool is_zero() const { return first_ == 0 && second_ == 0; }
    bool is_nonneg() const;
    bool is_positive() const;

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-(const GroupElement& o) const;
    GroupElement operator-() const;
    /// n-fold sum of this element (n may be any integer).
    GroupElement scaled(const Int& n) const;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const;
    bool operator<=(const GroupElement& o) const;
    bool operator>(const GroupElement& o) const { return o < *this; }
    bool operator>=(const GroupElement& o) const { return o <= *this; }

    std::string str() const;

private:
    GroupElement(GroupKind kind, Rat first, Int second)
        : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

    GroupKind kind_;
    Rat first_;
    Int second_; // used by LexZ2 only, 0 otherwise
};

void require_same_kind(const GroupElement& a, const GroupElement& b, const char* op);

} // namespace ringforge
