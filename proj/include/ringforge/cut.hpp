#pragma once

#include "ringforge/group.hpp"

#include <optional>
#include <string>
#include <utility>

namespace ringforge {

/// An upward-closed subset of the nonnegative cone of a value group,
/// i.e. an ideal of the valuation domain presented by that group.
///
/// Cuts are normalized at construction so equality is structural:
///   - Closed(v) with v <= 0 becomes Full,
///   - Open(v) with v < 0 becomes Full,
///   - Open(v) in a discrete group becomes Closed(successor of v),
///   - Row(a) with a <= 0 becomes Full.
/// Row cuts exist only over LexZ2 and Open cuts survive only over DenseQ.
class Cut {
public:
    enum class Variant { Zero, Full, Closed, Open, Row };

    static Cut zero(GroupKind kind);
    static Cut full(GroupKind kind);
    static Cut closed(const GroupElement& v);
    static Cut open(const GroupElement& v);
    static Cut row(const Int& a);

    Variant variant() const { return variant_; }
    GroupKind kind() const { return kind_; }

    bool is_zero() const { return variant_ == Variant::Zero; }
    bool is_full() const { return variant_ == Variant::Full; }
    bool is_closed() const { return variant_ == Variant::Closed; }
    bool is_open() const { return variant_ == Variant::Open; }
    bool is_row() const { return variant_ == Variant::Row; }

    /// Boundary value; valid for Closed and Open cuts.
    const GroupElement& bound() const;
    /// First-coordinate bound; valid for Row cuts.
    const Int& row_bound() const;

    bool operator==(const Cut& o) const;
    bool operator!=(const Cut& o) const { return !(*this == o); }
    /// Arbitrary total order, for use as a map/set key.
    bool operator<(const Cut& o) const;

    std::string str() const;

private:
    Cut(GroupKind kind, Variant variant, GroupElement bound, Int row)
        : kind_(kind), variant_(variant), bound_(std::move(bound)), row_(std::move(row)) {}

    GroupKind kind_;
    Variant variant_;
    GroupElement bound_; // Closed/Open
    Int row_;            // Row
};

/// True iff gamma (a cone element) lies in C.
bool cut_member(const GroupElement& gamma, const Cut& c);

/// The ideal quotient (C : gamma) = { delta >= 0 : delta + gamma in C }.
Cut cut_quotient(const Cut& c, const GroupElement& gamma);

/// Smallest cut containing both; cuts over one group are totally ordered,
/// so this is the larger of the two.
Cut cut_sum(const Cut& c1, const Cut& c2);

/// Subset test; exact for all normalized variants.
bool cut_subset(const Cut& c1, const Cut& c2);

/// True with the minimum value iff the cut attains its infimum (Closed or
/// Full); Zero reports (true, nullopt) for the zero ideal; Open cuts over
/// DenseQ and Row cuts report false.
std::pair<bool, std::optional<GroupElement>> cut_is_principal(const Cut& c);

/// True iff gamma + delta in C implies gamma in C or delta in C. C must be
/// a proper cut (not Full).
bool cut_is_prime(const Cut& c);

struct CutFgResult {
    bool fg = false;
    std::optional<GroupElement> generator; // value of the generator mod A, when one exists
};

/// Decides whether B/A is a finitely generated ideal of D/A. Requires
/// A subset of B. In a valuation quotient a finitely generated ideal
/// containing A is either A itself or principal over A, so the verdict is
/// true iff B == A or B attains its minimum.
CutFgResult cut_fg_mod(const Cut& b, const Cut& a);

} // namespace ringforge
