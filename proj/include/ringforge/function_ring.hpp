#pragma once

#include "ringforge/valuation.hpp"

#include <map>
#include <string>
#include <vector>

namespace ringforge {

/// Constraint on all tail indices (those without an explicit override) of a
/// finitely described submodule of S(I,D).
///
/// Uniform(C) constrains every index by the same cut. Arithmetic gives
/// index n the cut Closed(base + n*step); a zero step normalizes to
/// Uniform(Closed(base)). GeometricToLimit, over DenseQ only, gives index n
/// the cut Closed(limit + amp * 2^-n).
class TailRule {
public:
    enum class Kind { Uniform, Arithmetic, Geometric };

    static TailRule uniform(Cut c);
    static TailRule arithmetic(const GroupElement& base, const GroupElement& step);
    static TailRule geometric(const Rat& limit, const Rat& amp);

    Kind kind() const { return kind_; }
    GroupKind group() const;

    Cut cut_at(const Int& n) const;

    const Cut& uniform_cut() const;
    const GroupElement& base() const;
    const GroupElement& step() const;
    const Rat& limit() const;
    const Rat& amp() const;

    /// Tail quotient by a ring element: (cut_at(n) : x) for every n, staying
    /// inside the same rule family (a zero element collapses to
    /// Uniform(Full)).
    TailRule quotient_by(const ValElement& x) const;

    bool operator==(const TailRule& o) const;
    bool operator!=(const TailRule& o) const { return !(*this == o); }

    std::string str() const;

private:
    TailRule(Kind k, GroupKind g, Cut u, GroupElement base, GroupElement step, Rat limit, Rat amp);

    Kind kind_;
    GroupKind group_;
    Cut uniform_;
    GroupElement base_, step_;
    Rat limit_, amp_;
};

/// Element of S(I,D): constant on a cofinite subset of the (implicit,
/// countably infinite) index set, with finitely many overrides. Normalized:
/// no override equals the default.
class FunElement {
public:
    explicit FunElement(ValElement default_value, std::map<Int, ValElement> overrides = {});
    static FunElement constant(const ValElement& v);
    /// v * e_index: zero default, single override.
    static FunElement basis_term(const Int& index, const ValElement& v);

    GroupKind kind() const { return default_.kind(); }
    const ValElement& default_value() const { return default_; }
    const std::map<Int, ValElement>& overrides() const { return overrides_; }
    ValElement at(const Int& i) const;
    bool is_zero() const;

    bool operator==(const FunElement& o) const;
    bool operator!=(const FunElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    ValElement default_;
    std::map<Int, ValElement> overrides_;
};

FunElement fun_mul(const FunElement& f, const FunElement& g);
FunElement fun_add(const FunElement& f, const FunElement& g); // may throw AmbiguousCancellation
FunElement fun_scale(const ValElement& c, const FunElement& f);

/// Finitely described S-submodule: a cut constraining the constant part, a
/// tail rule for cofinitely many indices, and finitely many per-index
/// overrides. Normalized: no override equals the tail cut at its index.
class SubmoduleDescriptor {
public:
    SubmoduleDescriptor(Cut const_cut, TailRule tail, std::map<Int, Cut> overrides = {});

    GroupKind kind() const { return const_.kind(); }
    const Cut& const_cut() const { return const_; }
    const TailRule& tail() const { return tail_; }
    const std::map<Int, Cut>& overrides() const { return overrides_; }
    Cut cut_at(const Int& i) const;

    /// Semantic test: does this descriptor admit every element of S?
    bool is_full() const;

    bool operator==(const SubmoduleDescriptor& o) const;
    bool operator!=(const SubmoduleDescriptor& o) const { return !(*this == o); }

    std::string str() const;

private:
    Cut const_;
    TailRule tail_;
    std::map<Int, Cut> overrides_;
};

/// Membership of f in the submodule described by a: the default value must
/// satisfy the constant cut and every index constraint it is implicitly
/// subject to; overrides are checked index by index. Exact, including the
/// infinitely many tail indices (decided symbolically).
bool desc_member(const FunElement& f, const SubmoduleDescriptor& a);

/// Subset test between descriptors, exact on all tail-rule combinations.
bool desc_subset(const SubmoduleDescriptor& a, const SubmoduleDescriptor& b);

/// Semantic equality (mutual containment).
bool desc_equivalent(const SubmoduleDescriptor& a, const SubmoduleDescriptor& b);

/// Componentwise ideal quotient (A : x) = { f : f*x in A }.
SubmoduleDescriptor desc_quotient(const SubmoduleDescriptor& a, const FunElement& x);

/// The ring R = S/A. The modulus must be proper and decomposable:
/// const_cut != Full and const_cut contained in every index cut.
struct SRingQuotient {
    SRingQuotient(GroupKind kind, SubmoduleDescriptor modulus);

    GroupKind kind;
    SubmoduleDescriptor modulus;
};

/// Annihilator of the class of x in S/A, as a descriptor; equals the Full
/// descriptor exactly when x lies in A.
SubmoduleDescriptor ann_cyclic(const SRingQuotient& r, const FunElement& x);

struct DescFgResult {
    enum class Fail { None, ConstNotFg, IndexCutNotFg, InfinitelyManyIndices };

    bool fg = false;
    /// When fg: a finite generating set of B over A (constant-part
    /// generator, then one generator per exceptional index).
    std::vector<FunElement> generators;
    Fail fail = Fail::None;
    /// When !fg: failing indices; a non-exhaustive sample if infinitely_many.
    std::vector<Int> failing_indices;
    bool infinitely_many = false;
};

/// Decides whether B/A is a finitely generated submodule of S/A. Requires
/// A subset of B and A decomposable (a valid modulus). B/A is finitely
/// generated iff only finitely many indices exceed the cut forced by B's
/// constant part over A, the constant part is finitely generated mod A's,
/// and each exceptional index cut attains its minimum.
DescFgResult desc_fg_mod(const SubmoduleDescriptor& b, const SubmoduleDescriptor& a);

struct SLambdaResult {
    LambdaValue value;
    std::vector<SubmoduleDescriptor> chain;
    LambdaReason reason = LambdaReason::DepthCap;
};

/// Annihilator chain for the cyclic module R/xR over R = S/A; same counting
/// convention as lambda_cyclic. The chain continues only through cyclic
/// annihilators (no exceptional indices, principal constant cut); a finitely
/// generated but non-cyclic annihilator at step k stops the chain with
/// AtLeast(k+2), the sharp bound the chain has established.
SLambdaResult lambda_cyclic_s(const SRingQuotient& r, const FunElement& x, int depth);

/// The maximal-ideal cut N of D for each group kind.
Cut maximal_ideal_cut(GroupKind kind);

/// J(S) = SN as a descriptor: (N, Uniform(N)).
SubmoduleDescriptor jacobson_descriptor(GroupKind kind);

/// The maximal ideal M_0 = N*1 + sum_i D e_i of S.
SubmoduleDescriptor maximal_ideal_m0(GroupKind kind);
/// The maximal ideal M_i = D(1 - e_i) + N e_i of S.
SubmoduleDescriptor maximal_ideal_mi(GroupKind kind, const Int& i);

struct NamedExample {
    std::string name;
    SRingQuotient ring;
    std::map<std::string, FunElement> elements;

    const FunElement& element(const std::string& key) const;
};

/// The four reference rings: "dim3", "reduced", "noncoherent", "padic",
/// each with its distinguished elements.
NamedExample build_named_example(const std::string& name);

/// For the padic example: the class of p^k * 1.
FunElement padic_power_element(int k);

} // namespace ringforge
