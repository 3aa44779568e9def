// Acceptance suite: one line per criterion, each with its pinned tolerance
// and time budget. Exit code is the number of failed criteria.

#include "ringforge/bezout.hpp"
#include "ringforge/function_ring.hpp"
#include "ringforge/oracle.hpp"
#include "ringforge/serialize.hpp"
#include "ringforge/smith.hpp"
#include "ringforge/valuation.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace ringforge;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt < budget_s;
    if (!in_budget) detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%2d] %-34s %s (%.3fs, budget %.0fs)%s%s\n", n, name.c_str(),
                pass ? "PASS" : "FAIL", dt, budget_s, detail.empty() ? "" : " -- ",
                detail.c_str());
}

GroupElement zi(long n) { return GroupElement::integer(GroupKind::DiscreteZ, Int(n)); }
GroupElement qq(const Rat& r) { return GroupElement::rational(r); }
GroupElement lx(long a, long b) { return GroupElement::pair(Int(a), Int(b)); }

bool expect(bool cond, const char* what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// -- 1 ----------------------------------------------------------------------
bool crit_dim3(std::string& detail) {
    auto ex = build_named_example("dim3");
    bool ok = true;

    SubmoduleDescriptor expected_ann_a(Cut::closed(lx(1, 0)), TailRule::uniform(Cut::row(1)));
    SubmoduleDescriptor expected_ann_b(Cut::closed(lx(0, 1)),
                                       TailRule::uniform(Cut::full(GroupKind::LexZ2)));

    SubmoduleDescriptor ann_a = ann_cyclic(ex.ring, ex.element("a1"));
    SubmoduleDescriptor ann_b = ann_cyclic(ex.ring, ex.element("b1"));
    ok &= expect(ann_a == expected_ann_a, "ann(a*1) != R b*1", detail);
    ok &= expect(ann_b == expected_ann_b, "ann(b*1) != R a*1 + sum R e_i", detail);

    auto fg_a = desc_fg_mod(ann_a, ex.ring.modulus);
    auto fg_b = desc_fg_mod(ann_b, ex.ring.modulus);
    ok &= expect(fg_a.fg, "ann(a*1) must be f.g.", detail);
    ok &= expect(fg_a.generators.size() == 1 &&
                     fg_a.generators[0] == FunElement::constant(ValElement::monic(lx(1, 0))),
                 "generator of ann(a*1) must be b*1", detail);
    ok &= expect(!fg_b.fg, "ann(b*1) must not be f.g.", detail);

    auto lam = lambda_cyclic_s(ex.ring, ex.element("a1"), 8);
    ok &= expect(lam.value == LambdaValue::finite(2), "lambda(R/R a*1) != 2", detail);
    return ok;
}

// -- 2 ----------------------------------------------------------------------
bool crit_reduced(std::string& detail) {
    auto ex = build_named_example("reduced");
    bool ok = true;
    SubmoduleDescriptor expected_ann(Cut::zero(GroupKind::LexZ2),
                                     TailRule::uniform(Cut::full(GroupKind::LexZ2)));
    SubmoduleDescriptor ann = ann_cyclic(ex.ring, ex.element("a1"));
    ok &= expect(ann == expected_ann, "ann(a*1) != sum R e_i", detail);
    ok &= expect(!desc_fg_mod(ann, ex.ring.modulus).fg, "ann(a*1) must not be f.g.", detail);
    ok &= expect(lambda_cyclic_s(ex.ring, ex.element("a1"), 8).value == LambdaValue::finite(1),
                 "lambda != 1", detail);
    return ok;
}

// -- 3 ----------------------------------------------------------------------
bool crit_noncoherent(std::string& detail) {
    auto ex = build_named_example("noncoherent");
    bool ok = true;
    SubmoduleDescriptor ann = ann_cyclic(ex.ring, ex.element("a1"));
    ok &= expect(ann.const_cut() == Cut::closed(qq(Rat(1))), "constant cut != closed:1", detail);
    for (long n = 1; n <= 16; ++n)
        ok &= expect(ann.cut_at(n) == Cut::closed(qq(pow2_inv(n))),
                     "index cut != closed:2^-n", detail);
    ok &= expect(!desc_fg_mod(ann, ex.ring.modulus).fg, "annihilator must not be f.g.", detail);
    // each localization D/(a b_n)D is coherent although the ring is not
    for (long n = 0; n <= 16; ++n) {
        ValQuotient local(GroupKind::DenseQ, Cut::closed(qq(Rat(1) + pow2_inv(n))));
        ok &= expect(classify_valuation_quotient(local).coherent, "localization not coherent",
                     detail);
    }
    return ok;
}

// -- 4 ----------------------------------------------------------------------
bool crit_padic(std::string& detail) {
    auto ex = build_named_example("padic");
    bool ok = true;
    std::mt19937_64 rng(4);
    for (int k = 0; k <= 12 && ok; ++k) {
        FunElement pk = padic_power_element(k);
        SubmoduleDescriptor ann = ann_cyclic(ex.ring, pk);
        ok &= expect(ann.cut_at(0) == Cut::zero(GroupKind::DiscreteZ), "index-0 cut != zero",
                     detail);
        for (long n = 1; n <= 12; ++n) {
            Cut expected =
                n > k ? Cut::closed(zi(n - k)) : Cut::full(GroupKind::DiscreteZ);
            ok &= expect(ann.cut_at(n) == expected, "index cut != closed:max(0,n-k)", detail);
        }
        // sampled membership against brute-force multiplication
        for (int t = 0; t < 200; ++t) {
            std::uniform_int_distribution<long> val(0, 14), idx(0, 13), pick(0, 3);
            ValElement d = pick(rng) == 0 ? ValElement::zero(GroupKind::DiscreteZ)
                                          : ValElement::monic(zi(val(rng)));
            std::map<Int, ValElement> ov;
            for (int j = 0, nn = (int)pick(rng); j < nn; ++j)
                ov.insert_or_assign(Int(idx(rng)), ValElement::monic(zi(val(rng))));
            FunElement f(d, std::move(ov));
            ok &= expect(desc_member(f, ann) == desc_member(fun_mul(f, pk), ex.ring.modulus),
                         "membership disagrees with multiplication", detail);
        }
    }
    return ok;
}

// -- 5 ----------------------------------------------------------------------
bool crit_hermite(std::string& detail) {
    long long bad = 0, total = 0;
    for (long m = 2; m <= 60; ++m) {
        ExactRing r = ExactRing::residue_auto(m);
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b) {
                HermiteCertificate c = hermite_pair(r, a, b);
                ++total;
                if (!verify_hermite(r, a, b, c.d, c.a1, c.b1, c.u, c.v).pass()) ++bad;
            }
    }
    if (bad) detail = std::to_string(bad) + "/" + std::to_string(total) + " certificates failed";
    return bad == 0;
}

// -- 6 ----------------------------------------------------------------------
bool crit_adequate(std::string& detail) {
    long long bad = 0, total = 0;
    for (long m = 2; m <= 60; ++m) {
        ExactRing r = ExactRing::residue_auto(m);
        FiniteRingTables tables(r);
        for (long a = 1; a < m; ++a)
            for (long b = 0; b < m; ++b) {
                AdequateFactorization f = adequate_factor(r, a, b);
                ++total;
                if (!verify_adequate(r, tables, a, b, f.r, f.s).pass()) ++bad;
            }
    }
    if (bad) detail = std::to_string(bad) + "/" + std::to_string(total) + " factorizations failed";
    return bad == 0;
}

// -- 7 ----------------------------------------------------------------------
bool crit_smith(std::string& detail) {
    long long bad = 0;
    for (const char* spec : {"Z", "Z/12", "Z/16", "Z/360"}) {
        ExactRing r = parse_exact_ring(spec);
        std::mt19937_64 rng(7);
        for (int t = 0; t < 1000; ++t) {
            std::uniform_int_distribution<int> dim(1, 4);
            Mat a(dim(rng), dim(rng));
            for (size_t i = 0; i < a.rows(); ++i)
                for (size_t j = 0; j < a.cols(); ++j) {
                    if (r.is_integers()) {
                        std::uniform_int_distribution<long> e(-50, 50);
                        a.at(i, j) = e(rng);
                    } else {
                        std::uniform_int_distribution<long> e(0, r.modulus().convert_to<long>() - 1);
                        a.at(i, j) = e(rng);
                    }
                }
            if (!verify_smith(r, a, smith_form(r, a)).pass()) ++bad;
        }
    }
    if (bad) detail = std::to_string(bad) + " certificates failed";
    return bad == 0;
}

// -- 8 ----------------------------------------------------------------------
bool crit_gh(std::string& detail) {
    long long bad = 0, total = 0;
    for (long m = 2; m <= 30; ++m) {
        ExactRing r = ExactRing::residue_auto(m);
        FiniteRingTables tables(r);
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b)
                for (long c = 0; c < m; ++c) {
                    if (int_gcd(int_gcd(Int(a), Int(b)), int_gcd(Int(c), Int(m))) != 1) continue;
                    ++total;
                    GhWitness w = gh_witness(r, a, b, c);
                    if (!verify_gh(r, tables, a, b, c, w.p, w.q).pass()) ++bad;
                }
    }
    if (bad) detail = std::to_string(bad) + "/" + std::to_string(total) + " witnesses failed";
    return bad == 0;
}

// -- 9 ----------------------------------------------------------------------
bool crit_minprime(std::string& detail) {
    for (long m = 2; m <= 200; ++m) {
        MinPrimeReport rep = unique_min_prime_report(ExactRing::residue_auto(m));
        if (rep.unique != rep.condition2) {
            detail = "criteria disagree at m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

// -- 10 ---------------------------------------------------------------------
bool crit_cut_laws(std::string& detail) {
    for (GroupKind k : {GroupKind::DiscreteZ, GroupKind::DenseQ, GroupKind::LexZ2}) {
        OracleReport rep = sample_cut_laws(k, 10000, 10);
        if (!rep.pass()) {
            detail = group_kind_name(k) + ": " + std::to_string(rep.failed) + " failures";
            return false;
        }
    }
    return true;
}

// -- 11 ---------------------------------------------------------------------
bool crit_classification(std::string& detail) {
    bool ok = true;

    auto d = classify_valuation_quotient(ValQuotient(GroupKind::DiscreteZ,
                                                     Cut::zero(GroupKind::DiscreteZ)));
    ok &= expect(d.zclass == ZClass::ZIsZero && d.coherent, "D: expected Z=0 and coherent",
                 detail);

    auto c5 = classify_valuation_quotient(ValQuotient(GroupKind::DiscreteZ, Cut::closed(zi(5))));
    ok &= expect(c5.zclass == ZClass::ZIsMax && c5.self_fp_injective && c5.coherent,
                 "D/closed:5: expected Z=M, self fp-injective, coherent", detail);

    auto row = classify_valuation_quotient(ValQuotient(GroupKind::LexZ2, Cut::row(2)));
    ok &= expect(row.zclass == ZClass::ZProperNonzero && row.verdict == ValVerdict::LambdaDimTwo &&
                     row.m_flat,
                 "D/row:2: expected 0!=Z!=M, lambda-dim-2, flat M", detail);

    auto open = classify_valuation_quotient(ValQuotient(GroupKind::DenseQ, Cut::open(qq(Rat(1)))));
    ok &= expect(!open.coherent && open.noncoherence_witness.has_value(),
                 "D/open:1: expected a noncoherence witness", detail);
    if (open.noncoherence_witness) {
        Cut w = cut_quotient(Cut::open(qq(Rat(1))), *open.noncoherence_witness);
        ok &= expect(!cut_fg_mod(w, Cut::open(qq(Rat(1)))).fg,
                     "D/open:1: witness annihilator must not be f.g.", detail);
    }
    return ok;
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion(1, "demo dim3 exact reproduction", 1, crit_dim3);
    criterion(2, "demo reduced exact reproduction", 1, crit_reduced);
    criterion(3, "demo noncoherent reproduction", 1, crit_noncoherent);
    criterion(4, "demo padic annihilator formula", 1, crit_padic);
    criterion(5, "hermite exhaustive m<=60", 10, crit_hermite);
    criterion(6, "adequate exhaustive m<=60", 30, crit_adequate);
    criterion(7, "smith 1000x4 random, verified", 10, crit_smith);
    criterion(8, "gh witnesses exhaustive m<=30", 30, crit_gh);
    criterion(9, "minimal-prime criterion m<=200", 10, crit_minprime);
    criterion(10, "cut-law property suite 3x10^4", 10, crit_cut_laws);
    criterion(11, "valuation trichotomy rings", 1, crit_classification);
    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures;
}
