#pragma once

#include "ringforge/cut.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ringforge {

/// Element of a valuation domain, represented by its leading term
/// c * t^gamma. Products, divisibility, annihilators and ideal membership
/// are all value-determined on this fragment; a genuine additive
/// cancellation raises AmbiguousCancellation instead of guessing a value.
class ValElement {
public:
    static ValElement zero(GroupKind kind);
    static ValElement term(Rat coeff, const GroupElement& value);
    /// Monic term t^value.
    static ValElement monic(const GroupElement& value) { return term(Rat(1), value); }

    GroupKind kind() const { return kind_; }
    bool is_zero() const { return zero_; }
    bool is_unit() const { return !zero_ && value_.is_zero(); }
    const Rat& coeff() const;
    const GroupElement& value() const;

    bool operator==(const ValElement& o) const;
    bool operator!=(const ValElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    ValElement(GroupKind kind, bool zero, Rat coeff, GroupElement value)
        : kind_(kind), zero_(zero), coeff_(std::move(coeff)), value_(std::move(value)) {}

    GroupKind kind_;
    bool zero_;
    Rat coeff_;
    GroupElement value_;
};

ValElement val_mul(const ValElement& x, const ValElement& y);
/// Leading-term sum. Throws AmbiguousCancellation when the values agree and
/// the coefficients cancel: the true value is not determined by leading terms.
ValElement val_add(const ValElement& x, const ValElement& y);

/// The ring R = D/A for a valuation domain D presented by a value group and
/// an ideal A given as a cut. A = Zero means R = D itself.
struct ValQuotient {
    ValQuotient(GroupKind kind, Cut modulus);

    GroupKind kind;
    Cut modulus;
};

/// Annihilator of the class of x in D/A, as a cut: (A : v(x)).
/// Returns Full for x = 0 and Zero when A = Zero and x != 0.
Cut ann_quotient(const ValQuotient& r, const ValElement& x);

enum class LambdaReason { NotFG, Periodic, ZeroOrUnit, DepthCap, NonCyclic };

struct LambdaValue {
    enum class Kind { Finite, Infinite, AtLeast };
    Kind kind = Kind::Infinite;
    int k = 0; // for Finite / AtLeast

    static LambdaValue finite(int k) { return {Kind::Finite, k}; }
    static LambdaValue infinite() { return {Kind::Infinite, 0}; }
    static LambdaValue at_least(int k) { return {Kind::AtLeast, k}; }
    bool operator==(const LambdaValue& o) const { return kind == o.kind && k == o.k; }
    std::string str() const;
};

std::string lambda_reason_name(LambdaReason r);

struct LambdaResult {
    LambdaValue value;
    std::vector<Cut> chain; // annihilator cuts visited, in order
    LambdaReason reason = LambdaReason::DepthCap;
};

/// Annihilator chain for the cyclic module R/xR. Counting convention: a
/// cyclic module always admits a finite 1-presentation, so lambda >= 1; the
/// result is Finite(k+1) exactly when the k-th annihilator (k counted from
/// 0) is the first one that is not finitely generated. A repeated
/// annihilator cut or a zero/free step gives Infinite; an exhausted depth
/// gives AtLeast(depth).
LambdaResult lambda_cyclic(const ValQuotient& r, const ValElement& x, int depth);

enum class ZClass { ZIsZero, ZProperNonzero, ZIsMax };
enum class ValVerdict { Coherent, LambdaDimTwo, LambdaDimAtMostTwoSelfFpInjective };

std::string zclass_name(ZClass z);
std::string val_verdict_name(ValVerdict v);

struct ValuationClassification {
    ZClass zclass = ZClass::ZIsZero;
    ValVerdict verdict = ValVerdict::Coherent;
    bool m_flat = false;
    bool self_fp_injective = false;
    bool coherent = false;
    std::optional<GroupElement> noncoherence_witness; // value g with (A:g) not f.g. mod A
};

/// Classification of R = D/A along the zero-divisor trichotomy:
/// Z = 0 (coherent), 0 != Z != M (lambda-dim exactly 2), Z = M (self
/// fp-injective, lambda-dim at most 2). Flatness of M and coherence are
/// decided by cut case analysis.
ValuationClassification classify_valuation_quotient(const ValQuotient& r);

} // namespace ringforge
