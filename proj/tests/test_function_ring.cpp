#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringforge/function_ring.hpp"
#include "support.hpp"

using namespace ringforge;

namespace {

GroupElement zi(long n) { return GroupElement::integer(GroupKind::DiscreteZ, Int(n)); }
GroupElement qr(long p, long q) { return GroupElement::rational(Rat(Int(p), Int(q))); }
GroupElement lx(long a, long b) { return GroupElement::pair(Int(a), Int(b)); }

ValElement mono(const GroupElement& g) { return ValElement::monic(g); }

/// Random function-ring element with small support, never raising values
/// outside the cone.
FunElement rand_fun(GroupKind kind, std::mt19937_64& rng, bool allow_zero_default = true) {
    std::uniform_int_distribution<int> zero_pick(0, 3);
    ValElement def = (allow_zero_default && zero_pick(rng) == 0)
                         ? ValElement::zero(kind)
                         : mono(rf_test::rand_cone(kind, rng));
    std::map<Int, ValElement> ov;
    std::uniform_int_distribution<int> n_ov(0, 3);
    std::uniform_int_distribution<long> idx(0, 12);
    int k = n_ov(rng);
    for (int i = 0; i < k; ++i) {
        Int index(idx(rng));
        ValElement v = zero_pick(rng) == 0 ? ValElement::zero(kind)
                                           : mono(rf_test::rand_cone(kind, rng));
        ov.insert_or_assign(index, v);
    }
    return FunElement(def, std::move(ov));
}

} // namespace

TEST_CASE("named example descriptors match their construction") {
    auto dim3 = build_named_example("dim3");
    CHECK(dim3.ring.modulus.const_cut() == Cut::closed(lx(1, 1)));
    CHECK(dim3.ring.modulus.tail() == TailRule::uniform(Cut::row(1)));
    CHECK(dim3.ring.modulus.overrides().empty());
    CHECK(dim3.element("a1").default_value() == mono(lx(0, 1)));
    CHECK(dim3.element("b1").default_value() == mono(lx(1, 0)));

    auto reduced = build_named_example("reduced");
    CHECK(reduced.ring.modulus.const_cut() == Cut::zero(GroupKind::LexZ2));
    CHECK(reduced.ring.modulus.tail() == TailRule::uniform(Cut::closed(lx(0, 1))));

    auto nc = build_named_example("noncoherent");
    CHECK(nc.ring.modulus.const_cut() == Cut::closed(qr(2, 1)));
    CHECK(nc.ring.modulus.tail() == TailRule::geometric(Rat(1), Rat(1)));
    // index-n cut is Closed(1 + 2^-n)
    CHECK(nc.ring.modulus.cut_at(1) == Cut::closed(qr(3, 2)));
    CHECK(nc.ring.modulus.cut_at(3) == Cut::closed(qr(9, 8)));

    auto padic = build_named_example("padic");
    CHECK(padic.ring.modulus.const_cut() == Cut::zero(GroupKind::DiscreteZ));
    CHECK(padic.ring.modulus.cut_at(0) == Cut::zero(GroupKind::DiscreteZ));
    for (long n = 1; n <= 8; ++n)
        CHECK(padic.ring.modulus.cut_at(n) == Cut::closed(zi(n)));

    CHECK_THROWS_AS(build_named_example("nope"), std::invalid_argument);
}

TEST_CASE("desc_member on the dim3 ideal") {
    auto ex = build_named_example("dim3");
    const auto& a = ex.ring.modulus;
    CHECK(desc_member(ex.element("ab1"), a));
    CHECK_FALSE(desc_member(ex.element("b1"), a));
    CHECK(desc_member(FunElement::basis_term(1, mono(lx(1, 0))), a));
    CHECK(desc_member(FunElement(ValElement::zero(GroupKind::LexZ2)), a));
    CHECK_FALSE(desc_member(FunElement::basis_term(1, mono(lx(0, 5))), a));
}

TEST_CASE("ann_cyclic reproduces the dim3 annihilators") {
    auto ex = build_named_example("dim3");
    SubmoduleDescriptor ann_a = ann_cyclic(ex.ring, ex.element("a1"));
    // (0 : a1) = R b1
    CHECK(ann_a.const_cut() == Cut::closed(lx(1, 0)));
    CHECK(ann_a.tail() == TailRule::uniform(Cut::row(1)));
    CHECK(ann_a.overrides().empty());

    SubmoduleDescriptor ann_b = ann_cyclic(ex.ring, ex.element("b1"));
    // (0 : b1) = R a1 + sum_i R e_i
    CHECK(ann_b.const_cut() == Cut::closed(lx(0, 1)));
    CHECK(ann_b.tail() == TailRule::uniform(Cut::full(GroupKind::LexZ2)));
    CHECK(ann_b.overrides().empty());
}

TEST_CASE("ann_cyclic reproduces the reduced and noncoherent annihilators") {
    auto red = build_named_example("reduced");
    SubmoduleDescriptor ann = ann_cyclic(red.ring, red.element("a1"));
    CHECK(ann.const_cut() == Cut::zero(GroupKind::LexZ2));
    CHECK(ann.tail() == TailRule::uniform(Cut::full(GroupKind::LexZ2)));

    auto nc = build_named_example("noncoherent");
    SubmoduleDescriptor ann_nc = ann_cyclic(nc.ring, nc.element("a1"));
    // (0 : a1) = R b0 1 + sum_n R b_n e_n with index-n cut Closed(2^-n)
    CHECK(ann_nc.const_cut() == Cut::closed(qr(1, 1)));
    CHECK(ann_nc.tail() == TailRule::geometric(Rat(0), Rat(1)));
    CHECK(ann_nc.cut_at(4) == Cut::closed(qr(1, 16)));
}

TEST_CASE("desc_fg_mod verdicts for the examples") {
    auto ex = build_named_example("dim3");
    const auto& a = ex.ring.modulus;

    auto fg_a = desc_fg_mod(ann_cyclic(ex.ring, ex.element("a1")), a);
    REQUIRE(fg_a.fg);
    REQUIRE(fg_a.generators.size() == 1);
    CHECK(fg_a.generators[0] == FunElement::constant(mono(lx(1, 0)))); // b*1

    auto fg_b = desc_fg_mod(ann_cyclic(ex.ring, ex.element("b1")), a);
    CHECK_FALSE(fg_b.fg);
    CHECK(fg_b.infinitely_many);
    CHECK(fg_b.fail == DescFgResult::Fail::InfinitelyManyIndices);

    auto red = build_named_example("reduced");
    auto fg_red = desc_fg_mod(ann_cyclic(red.ring, red.element("a1")), red.ring.modulus);
    CHECK_FALSE(fg_red.fg);
    CHECK(fg_red.infinitely_many);

    auto nc = build_named_example("noncoherent");
    auto fg_nc = desc_fg_mod(ann_cyclic(nc.ring, nc.element("a1")), nc.ring.modulus);
    CHECK_FALSE(fg_nc.fg);
    CHECK(fg_nc.infinitely_many);
    // index 0 agrees with the constant part; every later index fails
    for (const Int& i : fg_nc.failing_indices) CHECK(i >= 1);
}

TEST_CASE("desc_fg_mod of A over A is the zero module") {
    for (const char* name : {"dim3", "reduced", "noncoherent", "padic"}) {
        auto ex = build_named_example(name);
        auto fg = desc_fg_mod(ex.ring.modulus, ex.ring.modulus);
        REQUIRE(fg.fg);
        CHECK(fg.generators.empty());
    }
}

TEST_CASE("lambda chains of the named examples") {
    auto ex = build_named_example("dim3");
    auto res = lambda_cyclic_s(ex.ring, ex.element("a1"), 8);
    CHECK(res.value == LambdaValue::finite(2));
    CHECK(res.reason == LambdaReason::NotFG);
    REQUIRE(res.chain.size() == 2);
    CHECK(res.chain[0].const_cut() == Cut::closed(lx(1, 0)));
    CHECK(res.chain[1].const_cut() == Cut::closed(lx(0, 1)));

    auto red = build_named_example("reduced");
    auto res_red = lambda_cyclic_s(red.ring, red.element("a1"), 8);
    CHECK(res_red.value == LambdaValue::finite(1));

    auto nc = build_named_example("noncoherent");
    auto res_nc = lambda_cyclic_s(nc.ring, nc.element("a1"), 8);
    CHECK(res_nc.value == LambdaValue::finite(1));
}

TEST_CASE("lambda chain on a unit and on an element of A") {
    auto ex = build_named_example("dim3");
    FunElement one = FunElement::constant(mono(lx(0, 0)));
    auto r1 = lambda_cyclic_s(ex.ring, one, 4);
    CHECK(r1.value == LambdaValue::infinite());
    CHECK(r1.reason == LambdaReason::ZeroOrUnit);

    auto r2 = lambda_cyclic_s(ex.ring, ex.element("ab1"), 4);
    CHECK(r2.value == LambdaValue::infinite());
    CHECK(r2.reason == LambdaReason::ZeroOrUnit);
}

TEST_CASE("padic annihilator formula: index-n cut Closed(max(0, n-k))") {
    auto ex = build_named_example("padic");
    for (int k = 0; k <= 12; ++k) {
        SubmoduleDescriptor ann = ann_cyclic(ex.ring, padic_power_element(k));
        CHECK(ann.const_cut() == Cut::zero(GroupKind::DiscreteZ));
        CHECK(ann.cut_at(0) == Cut::zero(GroupKind::DiscreteZ));
        for (long n = 1; n <= 12; ++n) {
            Cut expect = n > k ? Cut::closed(zi(n - k)) : Cut::full(GroupKind::DiscreteZ);
            REQUIRE(ann.cut_at(n) == expect);
        }
    }
}

TEST_CASE("membership is consistent with annihilators: f in (A:x) iff f*x in A") {
    std::mt19937_64 rng(41);
    for (const char* name : {"dim3", "reduced", "noncoherent", "padic"}) {
        auto ex = build_named_example(name);
        GroupKind kind = ex.ring.kind;
        for (int t = 0; t < 1000; ++t) {
            FunElement f = rand_fun(kind, rng);
            FunElement x = rand_fun(kind, rng, /*allow_zero_default=*/false);
            SubmoduleDescriptor ann = desc_quotient(ex.ring.modulus, x);
            REQUIRE(desc_member(f, ann) == desc_member(fun_mul(f, x), ex.ring.modulus));
        }
    }
}

TEST_CASE("quotient composition on descriptors: ((A:x):y) == (A:xy)") {
    std::mt19937_64 rng(43);
    for (const char* name : {"dim3", "reduced", "noncoherent", "padic"}) {
        auto ex = build_named_example(name);
        GroupKind kind = ex.ring.kind;
        for (int t = 0; t < 500; ++t) {
            FunElement x = rand_fun(kind, rng);
            FunElement y = rand_fun(kind, rng);
            SubmoduleDescriptor lhs = desc_quotient(desc_quotient(ex.ring.modulus, x), y);
            SubmoduleDescriptor rhs = desc_quotient(ex.ring.modulus, fun_mul(x, y));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("padic annihilators validated by sampled membership") {
    std::mt19937_64 rng(47);
    auto ex = build_named_example("padic");
    for (int k = 0; k <= 6; ++k) {
        FunElement pk = padic_power_element(k);
        SubmoduleDescriptor ann = ann_cyclic(ex.ring, pk);
        for (int t = 0; t < 300; ++t) {
            FunElement f = rand_fun(GroupKind::DiscreteZ, rng);
            REQUIRE(desc_member(f, ann) == desc_member(fun_mul(f, pk), ex.ring.modulus));
        }
    }
}

TEST_CASE("jacobson descriptor per kind") {
    auto j_lex = jacobson_descriptor(GroupKind::LexZ2);
    CHECK(j_lex.const_cut() == Cut::closed(lx(0, 1)));
    CHECK(j_lex.tail() == TailRule::uniform(Cut::closed(lx(0, 1))));

    auto j_z = jacobson_descriptor(GroupKind::DiscreteZ);
    CHECK(j_z.const_cut() == Cut::closed(zi(1)));
    CHECK(j_z.tail() == TailRule::uniform(Cut::closed(zi(1))));

    auto j_q = jacobson_descriptor(GroupKind::DenseQ);
    CHECK(j_q.const_cut() == Cut::open(qr(0, 1)));
    CHECK(j_q.tail() == TailRule::uniform(Cut::open(qr(0, 1))));
}

TEST_CASE("maximal ideals of S") {
    GroupKind k = GroupKind::LexZ2;
    FunElement one = FunElement::constant(mono(lx(0, 0)));
    FunElement e3 = FunElement::basis_term(3, mono(lx(0, 0)));
    FunElement one_minus_e3(mono(lx(0, 0)), {{Int(3), ValElement::zero(k)}});

    auto m0 = maximal_ideal_m0(k);
    CHECK_FALSE(desc_member(one, m0));
    CHECK(desc_member(e3, m0));

    auto m3 = maximal_ideal_mi(k, 3);
    CHECK(desc_member(one_minus_e3, m3));
    CHECK_FALSE(desc_member(e3, m3));
    CHECK_FALSE(desc_member(one, m3));

    // J(S) = SN sits inside both
    auto j = jacobson_descriptor(k);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 300; ++t) {
        FunElement f = rand_fun(k, rng);
        if (!desc_member(f, j)) continue;
        REQUIRE(desc_member(f, m0));
        REQUIRE(desc_member(f, m3));
    }
}

TEST_CASE("descriptor containment") {
    auto ex = build_named_example("dim3");
    auto ann_a = ann_cyclic(ex.ring, ex.element("a1"));
    CHECK(desc_subset(ex.ring.modulus, ann_a));
    CHECK_FALSE(desc_subset(ann_a, ex.ring.modulus));
    CHECK(desc_equivalent(ann_a, ann_a));

    auto nc = build_named_example("noncoherent");
    auto ann_nc = ann_cyclic(nc.ring, nc.element("a1"));
    CHECK(desc_subset(nc.ring.modulus, ann_nc));
    CHECK_FALSE(desc_subset(ann_nc, nc.ring.modulus));
}

TEST_CASE("improper or non-decomposable moduli are rejected") {
    GroupKind k = GroupKind::LexZ2;
    CHECK_THROWS_AS(SRingQuotient(k, SubmoduleDescriptor(Cut::full(k),
                                                         TailRule::uniform(Cut::full(k)))),
                    std::invalid_argument);
    // constant part not contained in an index cut
    CHECK_THROWS_AS(SRingQuotient(k, SubmoduleDescriptor(Cut::closed(lx(1, 0)),
                                                         TailRule::uniform(Cut::closed(lx(2, 0))))),
                    std::invalid_argument);
}

TEST_CASE("fun element arithmetic") {
    GroupKind k = GroupKind::DiscreteZ;
    FunElement f(mono(zi(1)), {{Int(2), mono(zi(3))}});
    FunElement g(mono(zi(2)), {{Int(2), mono(zi(0))}, {Int(5), ValElement::zero(k)}});
    FunElement fg = fun_mul(f, g);
    CHECK(fg.default_value() == mono(zi(3)));
    CHECK(fg.at(2) == mono(zi(3)));
    CHECK(fg.at(5).is_zero());
    CHECK(fg.at(7) == mono(zi(3)));
    // override equal to the default is normalized away
    CHECK(fg.overrides().count(2) == 0);

    FunElement sum = fun_add(f, FunElement::constant(mono(zi(4))));
    CHECK(sum.default_value() == mono(zi(1)));
    CHECK(sum.at(2) == mono(zi(3)));
}

TEST_CASE("fg certificates stay inside the submodule") {
    // an element with a unit override: the annihilator's cut at that index
    // is smaller than the one forced by the constant part
    GroupKind k = GroupKind::DiscreteZ;
    SRingQuotient r(k, SubmoduleDescriptor(Cut::closed(zi(2)),
                                           TailRule::uniform(Cut::closed(zi(2)))));
    FunElement x(mono(zi(1)), {{Int(3), mono(zi(0))}});
    SubmoduleDescriptor ann = ann_cyclic(r, x);
    CHECK(ann.const_cut() == Cut::closed(zi(1)));
    CHECK(ann.cut_at(3) == Cut::closed(zi(2)));
    CHECK(ann.cut_at(5) == Cut::closed(zi(1)));

    auto fg = desc_fg_mod(ann, r.modulus);
    REQUIRE(fg.fg);
    REQUIRE(!fg.generators.empty());
    for (const auto& g : fg.generators) {
        REQUIRE(desc_member(g, ann));
        // generators annihilate x
        REQUIRE(desc_member(fun_mul(g, x), r.modulus));
    }
    // the plain constant t^1*1 is not in the annihilator; the certificate
    // must carry an override at the exceptional index
    CHECK_FALSE(desc_member(FunElement::constant(mono(zi(1))), ann));
    CHECK(fg.generators[0].overrides().count(3) == 1);
}

TEST_CASE("fg generators are members across the named examples") {
    std::mt19937_64 rng(83);
    for (const char* name : {"dim3", "reduced", "noncoherent", "padic"}) {
        auto ex = build_named_example(name);
        for (int t = 0; t < 200; ++t) {
            FunElement x = rand_fun(ex.ring.kind, rng, false);
            SubmoduleDescriptor ann = ann_cyclic(ex.ring, x);
            auto fg = desc_fg_mod(ann, ex.ring.modulus);
            if (!fg.fg) continue;
            for (const auto& g : fg.generators) REQUIRE(desc_member(g, ann));
        }
    }
}

TEST_CASE("lambda chain stops with NonCyclic on a non-cyclic f.g. annihilator") {
    GroupKind k = GroupKind::DiscreteZ;
    SRingQuotient r(k, SubmoduleDescriptor(Cut::closed(zi(2)),
                                           TailRule::uniform(Cut::closed(zi(2)))));
    FunElement x(mono(zi(1)), {{Int(3), mono(zi(0))}});
    auto res = lambda_cyclic_s(r, x, 8);
    CHECK(res.value == LambdaValue::at_least(2));
    CHECK(res.reason == LambdaReason::NonCyclic);
}

TEST_CASE("lambda depth cap") {
    ValQuotient r(GroupKind::DiscreteZ, Cut::closed(zi(5)));
    auto res = lambda_cyclic(r, ValElement::monic(zi(2)), 1);
    CHECK(res.value == LambdaValue::at_least(1));
    CHECK(res.reason == LambdaReason::DepthCap);

    GroupKind k = GroupKind::DiscreteZ;
    SRingQuotient rs(k, SubmoduleDescriptor(Cut::closed(zi(2)),
                                            TailRule::uniform(Cut::closed(zi(2)))));
    auto res_s = lambda_cyclic_s(rs, FunElement::constant(mono(zi(1))), 1);
    CHECK(res_s.value == LambdaValue::at_least(1));
    CHECK(res_s.reason == LambdaReason::DepthCap);
}

TEST_CASE("quotient by a large value pushes geometric tails into Full") {
    auto nc = build_named_example("noncoherent");
    FunElement x = FunElement::constant(mono(qr(3, 2)));
    SubmoduleDescriptor ann = ann_cyclic(nc.ring, x);
    CHECK(ann.const_cut() == Cut::closed(qr(1, 2)));
    CHECK(ann.cut_at(0) == Cut::closed(qr(1, 2)));
    for (long n = 1; n <= 8; ++n) REQUIRE(ann.cut_at(n) == Cut::full(GroupKind::DenseQ));
    // e_n annihilates x-bar for every n >= 1
    for (long n = 1; n <= 8; ++n)
        REQUIRE(desc_member(FunElement::basis_term(n, mono(qr(0, 1))), ann));
    CHECK_FALSE(desc_member(FunElement::basis_term(0, mono(qr(0, 1))), ann));
    auto fg = desc_fg_mod(ann, nc.ring.modulus);
    CHECK_FALSE(fg.fg);
    CHECK(fg.infinitely_many);
}

TEST_CASE("arithmetic tails over lex pairs") {
    GroupKind k = GroupKind::LexZ2;
    // thresholds (0, n-3): the whole cone for n <= 3, proper afterwards
    TailRule t = TailRule::arithmetic(lx(0, -3), lx(0, 1));
    CHECK(t.cut_at(0) == Cut::full(k));
    CHECK(t.cut_at(3) == Cut::full(k));
    CHECK(t.cut_at(4) == Cut::closed(lx(0, 1)));
    CHECK(t.cut_at(10) == Cut::closed(lx(0, 7)));

    // thresholds (-1, n): never positive
    TailRule never = TailRule::arithmetic(lx(-1, 0), lx(0, 1));
    for (long n = 0; n <= 6; ++n) REQUIRE(never.cut_at(n) == Cut::full(k));

    // membership through a descriptor with a lex-arithmetic tail: the
    // default must clear every index cut, which grows without bound
    SubmoduleDescriptor d(Cut::zero(k), t);
    CHECK(desc_member(FunElement(ValElement::zero(k), {{Int(5), mono(lx(0, 2))}}), d));
    CHECK_FALSE(desc_member(FunElement::constant(mono(lx(0, 40))), d));
    // a first-coordinate bump clears every (0, n-3) threshold
    SubmoduleDescriptor d2(Cut::closed(lx(1, 0)), t);
    CHECK(desc_member(FunElement::constant(mono(lx(1, 0))), d2));
}

TEST_CASE("fg analysis with a single accidental agreement index") {
    GroupKind k = GroupKind::DenseQ;
    SRingQuotient r(k, SubmoduleDescriptor(Cut::closed(qr(2, 1)), TailRule::geometric(Rat(1), Rat(1))));
    // B agrees with the constant-forced cut only at n = 1
    SubmoduleDescriptor b(Cut::closed(qr(1, 1)), TailRule::geometric(Rat(1, 2), Rat(1)));
    REQUIRE(desc_subset(r.modulus, b));
    auto fg = desc_fg_mod(b, r.modulus);
    CHECK_FALSE(fg.fg);
    CHECK(fg.infinitely_many);
    // containment violations are rejected
    SubmoduleDescriptor small(Cut::closed(qr(1, 1)), TailRule::geometric(Rat(1), Rat(2)));
    CHECK_FALSE(desc_subset(r.modulus, small));
    CHECK_THROWS_AS(desc_fg_mod(small, r.modulus), std::invalid_argument);
}

TEST_CASE("ann_cyclic of an element of A is the full descriptor") {
    auto ex = build_named_example("dim3");
    CHECK(ann_cyclic(ex.ring, ex.element("ab1")).is_full());
    auto pad = build_named_example("padic");
    // p^2 e_2 lies in the padic modulus
    FunElement in_a = FunElement::basis_term(2, mono(zi(2)));
    REQUIRE(desc_member(in_a, pad.ring.modulus));
    CHECK(ann_cyclic(pad.ring, in_a).is_full());
}

TEST_CASE("fg verdicts agree with a membership oracle over generated modules") {
    // When desc_fg_mod reports generators G for B over A, the module A + S*G
    // has, at every index, the cut generated by A's cut and the finitely
    // many generator values. Membership in B must match membership in that
    // module pointwise; the cuts here are recomputed directly from the
    // generators, not through the finite-generation analysis.
    std::mt19937_64 rng(101);
    auto generated_cut = [](const SubmoduleDescriptor& a, const std::vector<FunElement>& gens,
                            const Int& i) {
        Cut c = a.cut_at(i);
        for (const auto& g : gens) {
            ValElement v = g.at(i);
            if (!v.is_zero()) c = cut_sum(c, Cut::closed(v.value()));
        }
        return c;
    };
    auto generated_const = [](const SubmoduleDescriptor& a, const std::vector<FunElement>& gens) {
        Cut c = a.const_cut();
        for (const auto& g : gens)
            if (!g.default_value().is_zero())
                c = cut_sum(c, Cut::closed(g.default_value().value()));
        return c;
    };

    int fg_cases = 0;
    for (const char* name : {"dim3", "reduced", "noncoherent", "padic"}) {
        auto ex = build_named_example(name);
        for (int t = 0; t < 400; ++t) {
            FunElement x = rand_fun(ex.ring.kind, rng, false);
            SubmoduleDescriptor ann = ann_cyclic(ex.ring, x);
            if (ann.is_full()) continue;
            auto fg = desc_fg_mod(ann, ex.ring.modulus);
            if (!fg.fg) continue;
            ++fg_cases;
            for (int s = 0; s < 60; ++s) {
                FunElement f = rand_fun(ex.ring.kind, rng);
                if (!desc_member(f, ann)) continue;
                // every member of B must lie in A + S*G, checked pointwise
                const ValElement& d = f.default_value();
                if (!d.is_zero())
                    REQUIRE(cut_member(d.value(), generated_const(ex.ring.modulus, fg.generators)));
                std::set<Int> probe;
                for (const auto& [i, v] : f.overrides()) probe.insert(i);
                for (const auto& g : fg.generators)
                    for (const auto& [i, v] : g.overrides()) probe.insert(i);
                for (int extra = 0; extra < 4; ++extra)
                    probe.insert(Int(std::uniform_int_distribution<long>(0, 20)(rng)));
                for (const Int& i : probe) {
                    ValElement fi = f.at(i);
                    if (fi.is_zero()) continue;
                    REQUIRE(cut_member(fi.value(), generated_cut(ex.ring.modulus, fg.generators, i)));
                }
            }
        }
    }
    CHECK(fg_cases > 0);
}

namespace {

/// Random tail rule with small parameters: every regime transition then
/// lies far below the explicit horizon used by the cross-checks.
TailRule rand_tail(GroupKind kind, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, kind == GroupKind::DenseQ ? 2 : 1);
    switch (pick(rng)) {
    case 0:
        return TailRule::uniform(rf_test::rand_cut(kind, rng));
    case 1: {
        GroupElement base = rf_test::rand_cone(kind, rng);
        std::uniform_int_distribution<int> sign(0, 2);
        if (sign(rng) == 0) base = -base;
        GroupElement step = rf_test::rand_cone_positive(kind, rng);
        return TailRule::arithmetic(base, step);
    }
    default: {
        std::uniform_int_distribution<long> l(-4, 8), a(1, 8);
        return TailRule::geometric(Rat(l(rng)), Rat(a(rng)));
    }
    }
}

SubmoduleDescriptor rand_descriptor(GroupKind kind, std::mt19937_64& rng) {
    TailRule tail = rand_tail(kind, rng);
    std::uniform_int_distribution<int> n_ov(0, 2);
    std::uniform_int_distribution<long> idx(0, 10);
    std::map<Int, Cut> ov;
    int k = n_ov(rng);
    for (int i = 0; i < k; ++i) ov.insert_or_assign(Int(idx(rng)), rf_test::rand_cut(kind, rng));
    return SubmoduleDescriptor(rf_test::rand_cut(kind, rng), tail, std::move(ov));
}

constexpr long kHorizon = 600;

} // namespace

TEST_CASE("desc_subset agrees with explicit evaluation over a large horizon") {
    std::mt19937_64 rng(103);
    for (GroupKind kind : rf_test::all_kinds()) {
        for (int t = 0; t < 400; ++t) {
            SubmoduleDescriptor a = rand_descriptor(kind, rng);
            SubmoduleDescriptor b = rand_descriptor(kind, rng);
            bool expl = cut_subset(a.const_cut(), b.const_cut());
            for (long n = 0; n <= kHorizon && expl; ++n)
                if (!cut_subset(a.cut_at(n), b.cut_at(n))) expl = false;
            REQUIRE(desc_subset(a, b) == expl);
        }
    }
}

TEST_CASE("desc_member agrees with explicit evaluation over a large horizon") {
    std::mt19937_64 rng(107);
    for (GroupKind kind : rf_test::all_kinds()) {
        for (int t = 0; t < 400; ++t) {
            SubmoduleDescriptor a = rand_descriptor(kind, rng);
            FunElement f = rand_fun(kind, rng);
            bool expl = true;
            if (!f.default_value().is_zero() &&
                !cut_member(f.default_value().value(), a.const_cut()))
                expl = false;
            for (long n = 0; n <= kHorizon && expl; ++n) {
                ValElement v = f.at(n);
                if (!v.is_zero() && !cut_member(v.value(), a.cut_at(n))) expl = false;
            }
            REQUIRE(desc_member(f, a) == expl);
        }
    }
}

TEST_CASE("desc_fg_mod exceptional analysis agrees with explicit evaluation") {
    std::mt19937_64 rng(109);
    int checked = 0;
    for (GroupKind kind : rf_test::all_kinds()) {
        for (int t = 0; t < 600; ++t) {
            // a valid modulus with zero constant part, then B = (A : x)
            // with a few cuts enlarged: keeps A inside B
            SubmoduleDescriptor a(Cut::zero(kind), rand_tail(kind, rng));
            SRingQuotient r(kind, a);
            FunElement x = rand_fun(kind, rng, false);
            SubmoduleDescriptor b = ann_cyclic(r, x);
            if (b.is_full()) continue;
            auto fg = desc_fg_mod(b, a);
            ++checked;

            const Cut& k = b.const_cut();
            std::vector<long> exceptional;
            for (long n = 0; n <= kHorizon; ++n)
                if (b.cut_at(n) != cut_sum(k, a.cut_at(n))) exceptional.push_back(n);

            if (fg.fg) {
                // finitely many exceptions, each attained or equal
                REQUIRE(exceptional.size() <= 24);
                for (long n : exceptional)
                    REQUIRE(cut_fg_mod(b.cut_at(n), a.cut_at(n)).fg);
                REQUIRE(cut_fg_mod(k, a.const_cut()).fg);
            } else if (fg.fail == DescFgResult::Fail::InfinitelyManyIndices) {
                REQUIRE(exceptional.size() > 24);
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("geometric cuts stay exact at large indices") {
    auto nc = build_named_example("noncoherent");
    Cut c = nc.ring.modulus.cut_at(200);
    REQUIRE(c.is_closed());
    Rat expected = Rat(1) + Rat(Int(1), Int(1) << 200);
    CHECK(c.bound().first() == expected);
    SubmoduleDescriptor ann = ann_cyclic(nc.ring, nc.element("a1"));
    CHECK(ann.cut_at(200).bound().first() == Rat(Int(1), Int(1) << 200));
}
