#include "ringforge/valuation.hpp"

#include <set>
#include <sstream>

namespace ringforge {

ValElement ValElement::zero(GroupKind kind) {
    return ValElement(kind, true, Rat(0), GroupElement::zero(kind));
}

ValElement ValElement::term(Rat coeff, const GroupElement& value) {
    if (coeff == 0)
        throw std::invalid_argument("ValElement::term: zero coefficient; use ValElement::zero");
    if (!value.is_nonneg())
        throw std::invalid_argument("ValElement::term: value must be nonnegative");
    return ValElement(value.kind(), false, std::move(coeff), value);
}

const Rat& ValElement::coeff() const {
    if (zero_) throw std::logic_error("ValElement::coeff: zero element");
    return coeff_;
}

const GroupElement& ValElement::value() const {
    if (zero_) throw std::logic_error("ValElement::value: zero element has no value");
    return value_;
}

bool ValElement::operator==(const ValElement& o) const {
    if (kind_ != o.kind_) return false;
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return coeff_ == o.coeff_ && value_ == o.value_;
}

std::string ValElement::str() const {
    if (zero_) return "0";
    std::ostringstream out;
    if (coeff_ != 1) {
        if (is_integral(coeff_)) out << rat_num(coeff_);
        else out << rat_num(coeff_) << "/" << rat_den(coeff_);
        out << "*";
    }
    out << "t^" << value_.str();
    return out.str();
}

ValElement val_mul(const ValElement& x, const ValElement& y) {
    if (x.kind() != y.kind()) throw KindMismatch("val_mul: group kinds differ");
    if (x.is_zero() || y.is_zero()) return ValElement::zero(x.kind());
    return ValElement::term(x.coeff() * y.coeff(), x.value() + y.value());
}

ValElement val_add(const ValElement& x, const ValElement& y) {
    if (x.kind() != y.kind()) throw KindMismatch("val_add: group kinds differ");
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.value() < y.value()) return x;
    if (y.value() < x.value()) return y;
    Rat c = x.coeff() + y.coeff();
    if (c == 0)
        throw AmbiguousCancellation("val_add: leading terms cancel; value undetermined");
    return ValElement::term(c, x.value());
}

ValQuotient::ValQuotient(GroupKind k, Cut m) : kind(k), modulus(std::move(m)) {
    if (modulus.kind() != kind)
        throw KindMismatch("ValQuotient: modulus kind differs from ring kind");
    if (modulus.is_full())
        throw std::invalid_argument("ValQuotient: modulus must be a proper ideal");
}

Cut ann_quotient(const ValQuotient& r, const ValElement& x) {
    if (x.kind() != r.kind) throw KindMismatch("ann_quotient: group kinds differ");
    if (x.is_zero()) return Cut::full(r.kind);
    return cut_quotient(r.modulus, x.value());
}

std::string LambdaValue::str() const {
    switch (kind) {
    case Kind::Finite: return "finite(" + std::to_string(k) + ")";
    case Kind::Infinite: return "infinite";
    case Kind::AtLeast: return "at-least(" + std::to_string(k) + ")";
    }
    return "?";
}

std::string lambda_reason_name(LambdaReason r) {
    switch (r) {
    case LambdaReason::NotFG: return "not-fg";
    case LambdaReason::Periodic: return "periodic";
    case LambdaReason::ZeroOrUnit: return "zero-or-unit";
    case LambdaReason::DepthCap: return "depth-cap";
    case LambdaReason::NonCyclic: return "non-cyclic";
    }
    return "?";
}

LambdaResult lambda_cyclic(const ValQuotient& r, const ValElement& x, int depth) {
    if (depth < 1) throw std::invalid_argument("lambda_cyclic: depth must be >= 1");
    LambdaResult res;
    std::set<Cut> seen;
    ValElement y = x;
    for (int k = 0; k < depth; ++k) {
        Cut ann = ann_quotient(r, y);
        res.chain.push_back(ann);
        if (ann.is_full() || ann == r.modulus) {
            // the class of y is zero or regular: the resolution ends in a free module
            res.value = LambdaValue::infinite();
            res.reason = LambdaReason::ZeroOrUnit;
            return res;
        }
        if (seen.count(ann)) {
            res.value = LambdaValue::infinite();
            res.reason = LambdaReason::Periodic;
            return res;
        }
        seen.insert(ann);
        CutFgResult fg = cut_fg_mod(ann, r.modulus);
        if (!fg.fg) {
            res.value = LambdaValue::finite(k + 1);
            res.reason = LambdaReason::NotFG;
            return res;
        }
        y = ValElement::monic(*fg.generator);
    }
    res.value = LambdaValue::at_least(depth);
    res.reason = LambdaReason::DepthCap;
    return res;
}

std::string zclass_name(ZClass z) {
    switch (z) {
    case ZClass::ZIsZero: return "Z=0";
    case ZClass::ZProperNonzero: return "0!=Z!=M";
    case ZClass::ZIsMax: return "Z=M";
    }
    return "?";
}

std::string val_verdict_name(ValVerdict v) {
    switch (v) {
    case ValVerdict::Coherent: return "coherent";
    case ValVerdict::LambdaDimTwo: return "lambda-dim-2";
    case ValVerdict::LambdaDimAtMostTwoSelfFpInjective: return "lambda-dim<=2-self-fp-injective";
    }
    return "?";
}

namespace {

/// True iff the residue ring D/A is a field, i.e. every nonzero class is a
/// unit: no cone value g > 0 lies outside A.
bool quotient_is_field(const Cut& a) {
    switch (a.variant()) {
    case Cut::Variant::Closed:
        switch (a.kind()) {
        case GroupKind::DiscreteZ:
            return a.bound() == GroupElement::integer(GroupKind::DiscreteZ, 1);
        case GroupKind::LexZ2:
            return a.bound() == GroupElement::pair(0, 1);
        case GroupKind::DenseQ:
            return false;
        }
        return false;
    case Cut::Variant::Open:
        return a.bound() == GroupElement::zero(a.kind()); // D/N
    default:
        return false;
    }
}

ValVerdict verdict_for(ZClass z) {
    switch (z) {
    case ZClass::ZIsZero: return ValVerdict::Coherent;
    case ZClass::ZProperNonzero: return ValVerdict::LambdaDimTwo;
    case ZClass::ZIsMax: return ValVerdict::LambdaDimAtMostTwoSelfFpInjective;
    }
    return ValVerdict::Coherent;
}

} // namespace

ValuationClassification classify_valuation_quotient(const ValQuotient& r) {
    const Cut& a = r.modulus;
    ValuationClassification out;

    // A class 0 != g-bar is a zero divisor iff (A : g) strictly contains A.
    // Case analysis over the normalized modulus variants:
    switch (a.variant()) {
    case Cut::Variant::Zero:
        // D itself: a domain with nonunits, so Z = 0 and Z != M.
        out.zclass = ZClass::ZIsZero;
        out.coherent = true;
        out.m_flat = true;               // M is a directed union of principal ideals
        out.self_fp_injective = false;   // positive values are regular
        break;

    case Cut::Variant::Closed:
        if (quotient_is_field(a)) {
            // residue field: no nonzero nonunits at all
            out.zclass = ZClass::ZIsZero;
            out.coherent = true;
            out.m_flat = true;
            out.self_fp_injective = true;
            break;
        }
        // A = vD principal: every 0 < g < v satisfies (A:g) = Closed(v-g) != A,
        // so every nonunit class is a zero divisor, and each annihilator is
        // principal mod A.
        out.zclass = ZClass::ZIsMax;
        out.coherent = true;
        out.m_flat = false;
        out.self_fp_injective = true;
        break;

    case Cut::Variant::Open: {
        if (quotient_is_field(a)) { // A = N over DenseQ
            out.zclass = ZClass::ZIsZero;
            out.coherent = true;
            out.m_flat = true;
            out.self_fp_injective = true;
            break;
        }
        // A = Open(v), v > 0, not prime, not finitely generated: every
        // nonunit class 0 < g <= v is a zero divisor with annihilator
        // Open(v-g), never finitely generated mod A.
        out.zclass = ZClass::ZIsMax;
        out.coherent = false;
        out.noncoherence_witness = a.bound();
        out.m_flat = true;
        out.self_fp_injective = true;
        break;
    }

    case Cut::Variant::Row: {
        if (a.row_bound() == 1) {
            // A = J prime: D/J is a (non-field) domain
            out.zclass = ZClass::ZIsZero;
            out.coherent = true;
            out.m_flat = true;
            out.self_fp_injective = false;
            break;
        }
        // A = Row(a0), a0 >= 2: classes with first coordinate in [1, a0) are
        // zero divisors with annihilator Row(a0 - g1), not finitely
        // generated; classes (0, k>0) are regular nonunits.
        out.zclass = ZClass::ZProperNonzero;
        out.coherent = false;
        out.noncoherence_witness = GroupElement::pair(1, 0);
        out.m_flat = true;
        out.self_fp_injective = false;
        break;
    }

    case Cut::Variant::Full:
        throw std::logic_error("classify_valuation_quotient: modulus cannot be Full");
    }

    out.verdict = verdict_for(out.zclass);
    return out;
}

} // namespace ringforge
