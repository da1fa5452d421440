#include "lk/linkage.hpp"

namespace lk {

FPModule transpose(const FPModule& m) {
    FPModule mm = minimal_presentation(m);
    if (mm.pres().cols() == 0) return FPModule::zero_module(m.ring());  // Tr(free) = 0
    return FPModule(mm.pres().transpose_dual());
}

FPModule lambda_module(const FPModule& m) {
    FPModule tr = transpose(m);
    if (tr.gen_count() == 0) return FPModule::zero_module(m.ring());
    return syzygy_power(tr, 1);
}

FPModule cosyzygy(const FPModule& m) {
    const RingPtr& ring = m.ring();
    if (!ring_is_gorenstein(ring)) throw EngineError("cosyzygy requires a Gorenstein ring");
    FPModule mm = minimal_presentation(m);
    if (mm.gen_count() == 0 || is_free_module(mm)) return FPModule::zero_module(ring);
    HomDim dep = depth_of(mm);
    if (!dep.is_finite() || dep.value != ring_dim(ring))
        throw EngineError("cosyzygy requires a maximal Cohen-Macaulay module");
    FPModule rmod = FPModule::ring_module(ring);
    FPModule dual = minimal_presentation(hom_module(mm, rmod).mod);
    FPModule omega_dual = syzygy_power(dual, 1);
    return minimal_presentation(hom_module(omega_dual, rmod).mod);
}

LinkageReport is_horizontally_linked(const FPModule& m) {
    LinkageReport rep;
    rep.subject = "horizontal linkage";
    FPModule mm = minimal_presentation(m);

    StabilityReport st = trace_and_stability(mm);
    rep.verdict("stable", tri(st.stable), "trace = " + st.trace.to_string());

    FPModule tr = transpose(mm);
    bool ext1_vanishes = is_zero_module(ext_module(1, tr, FPModule::ring_module(m.ring())));
    rep.verdict("ext1_tr_vanishes", tri(ext1_vanishes));

    bool linked = st.stable && ext1_vanishes;
    rep.verdict("horizontally_linked", tri(linked));

    if (linked) {
        FPModule ll = lambda_module(lambda_module(mm));
        bool agree = modules_numerically_agree_up_to_shift(ll, mm);
        rep.verdict("lambda_lambda_numeric_agreement", tri(agree));
        if (!agree) rep.consistency = false;
    } else {
        rep.verdict("lambda_lambda_numeric_agreement", TriState::NotComputed);
    }
    return rep;
}

LinkageReport ideals_linked_by(const IdealHandle& i, const IdealHandle& j, const IdealHandle& c) {
    require_same_ring(i.ring(), j.ring(), "ideal linkage");
    require_same_ring(i.ring(), c.ring(), "ideal linkage");
    if (!i.contains(c)) throw EngineError("linkage precondition violated: c is not contained in I");
    if (!j.contains(c)) throw EngineError("linkage precondition violated: c is not contained in J");

    LinkageReport rep;
    rep.subject = "ideal linkage by c";
    rep.hyp("c_contained_in_I", TriState::True);
    rep.hyp("c_contained_in_J", TriState::True);

    IdealHandle cj = ideal_colon(c, j);
    IdealHandle ci = ideal_colon(c, i);
    rep.verdict("I_equals_c_colon_J", tri(cj.equals(i)), "(c:J) = " + cj.to_string());
    rep.verdict("J_equals_c_colon_I", tri(ci.equals(j)), "(c:I) = " + ci.to_string());

    // colon duality self-check: (c : (c : (c : J))) = (c : J) always
    IdealHandle c3 = ideal_colon(c, ideal_colon(c, cj));
    if (!c3.equals(cj)) throw EngineError("colon duality invariant failed");
    return rep;
}

LinkageReport geometric_link_report(const IdealHandle& i, const IdealHandle& j, bool unmixed_asserted) {
    LinkageReport linked = ideals_linked_by(i, j, ideal_zero(i.ring()));
    if (!linked.overall()) throw EngineError("geometric link report requires ideals linked by (0)");

    LinkageReport rep;
    rep.subject = "geometric linkage";
    rep.hyp("linked_by_zero", TriState::True);
    rep.hyp("unmixed_ring", unmixed_asserted ? TriState::True : TriState::NotComputed,
            "user-asserted, not verified");

    FPModule ri = FPModule::quotient_by_ideal(i);
    FPModule rj = FPModule::quotient_by_ideal(j);

    HomDim g = grade_of_ideal(ideal_sum(i, j));
    bool c2 = !g.is_finite() || g.value > 0;
    IdealHandle meet = ideal_intersection(i, j);
    bool c3 = meet.is_zero_ideal();
    bool c4 = is_zero_module(tor_module(1, ri, rj));
    bool c5 = is_zero_module(ext_module(1, ri, ri));
    bool c6 = is_zero_module(ext_module(1, rj, rj));

    rep.verdict("grade_sum_positive", tri(c2), "grade(I+J) = " + g.to_string());
    rep.verdict("intersection_zero", tri(c3), "I cap J = " + meet.to_string());
    rep.verdict("tor1_vanishes", tri(c4));
    rep.verdict("ext1_RI_RI_vanishes", tri(c5));
    rep.verdict("ext1_RJ_RJ_vanishes", tri(c6));
    rep.verdict("ass_disjoint", TriState::NotComputed, "equivalent to (ii)-(vi) over unmixed rings");

    rep.consistency = (c2 == c3) && (c3 == c4) && (c4 == c5) && (c5 == c6);
    return rep;
}

GorensteinIdealReport is_gorenstein_ideal(const IdealHandle& a) {
    if (a.is_unit()) throw EngineError("is_gorenstein_ideal: the unit ideal has no grade");
    const RingPtr& ring = a.ring();
    GorensteinIdealReport out;
    out.detail.subject = "Gorenstein ideal test";

    HomDim g = grade_of_ideal(a);
    out.grade = g;
    if (!g.is_finite()) throw EngineError("is_gorenstein_ideal: infinite grade on a proper ideal");
    out.detail.verdict("grade", TriState::True, g.to_string());

    FPModule ra = FPModule::quotient_by_ideal(a);
    HomDim dep = depth_of(ra);
    int dim_ra = hilbert_data(a).krull_dim;
    bool perfect = dep.is_finite() && dep.value == dim_ra;
    out.detail.verdict("quotient_cohen_macaulay", tri(perfect),
                       "depth = " + dep.to_string() + ", dim = " + std::to_string(dim_ra));

    FPModule rmod = FPModule::ring_module(ring);
    bool vanishing = true;
    int top = ring_dim(ring) + 1;
    for (int ii = 0; ii <= top; ++ii) {
        if (ii == g.value) continue;
        if (!is_zero_module(ext_module(ii, ra, rmod))) {
            vanishing = false;
            break;
        }
    }
    out.detail.verdict("ext_vanishes_off_grade", tri(vanishing));

    FPModule extg = ext_module(g.value, ra, rmod);
    bool cyclic = is_cyclic(extg);
    out.detail.verdict("ext_at_grade_cyclic", tri(cyclic));
    bool ann_ok = cyclic && annihilator(extg).equals(a);
    out.detail.verdict("ext_at_grade_annihilator_is_a", tri(ann_ok));

    out.verdict = perfect && vanishing && cyclic && ann_ok;
    return out;
}

LinkageReport verify_sum_theorem(const FPModule& m, const FPModule& n, const IdealHandle& c) {
    require_same_ring(m.ring(), n.ring(), "sum theorem");
    require_same_ring(m.ring(), c.ring(), "sum theorem");
    const RingPtr& ring = m.ring();

    LinkageReport rep;
    rep.subject = "sum of annihilators theorem (K = R)";

    bool gor = ring_is_gorenstein(ring);
    rep.hyp("ring_gorenstein", tri(gor));

    bool c_gor = false;
    if (gor) {
        auto gi = is_gorenstein_ideal(c);
        c_gor = gi.verdict;
        rep.hyp("c_gorenstein_ideal", tri(c_gor), "grade(c) = " + gi.grade.to_string());
    } else {
        rep.hyp("c_gorenstein_ideal", TriState::NotComputed);
    }

    FPModule mm = minimal_presentation(m), nn = minimal_presentation(n);
    IdealHandle ann_m = annihilator(mm), ann_n = annihilator(nn);
    bool c_ann = ann_m.contains(c) && ann_n.contains(c);
    rep.hyp("c_annihilates_M_and_N", tri(c_ann));

    bool linked = false, geometric = false;
    if (c_ann) {
        auto rq = GradedRing::quotient(ring, c.gens());
        FPModule mq = base_change(mm, rq), nq = base_change(nn, rq);
        LinkageReport hl = is_horizontally_linked(mq);
        bool lam_agree = modules_numerically_agree_up_to_shift(lambda_module(mq), minimal_presentation(nq));
        linked = hl.overall() && lam_agree;
        rep.hyp("M_linked_to_N_by_c", tri(linked),
                lam_agree ? "lambda M agrees with N over R/c" : "lambda M does not match N over R/c");

        if (linked) {
            IdealHandle am_q = annihilator(mq), an_q = annihilator(nq);
            try {
                LinkageReport geo = geometric_link_report(am_q, an_q);
                geometric = geo.overall();
                rep.hyp("annihilators_geometrically_linked_over_R_mod_c", tri(geometric));
            } catch (const EngineError& e) {
                rep.hyp("annihilators_geometrically_linked_over_R_mod_c", TriState::False, e.what());
            }
        } else {
            rep.hyp("annihilators_geometrically_linked_over_R_mod_c", TriState::NotComputed);
        }
    } else {
        rep.hyp("M_linked_to_N_by_c", TriState::NotComputed);
        rep.hyp("annihilators_geometrically_linked_over_R_mod_c", TriState::NotComputed);
    }

    if (!rep.hypotheses_hold() || !gor || !c_gor || !c_ann || !linked || !geometric) {
        rep.verdict("sum_is_gorenstein_ideal", TriState::NotComputed, "hypotheses failed");
        rep.verdict("grade_of_sum_is_grade_plus_one", TriState::NotComputed);
        rep.verdict("tensor_free_over_quotient_by_sum", TriState::NotComputed);
        return rep;
    }

    IdealHandle big = ideal_sum(ann_m, ann_n);
    auto gi = is_gorenstein_ideal(big);
    rep.verdict("sum_is_gorenstein_ideal", tri(gi.verdict), "A = " + big.to_string());

    HomDim gm = grade_of_module(mm);
    bool grade_ok = gm.is_finite() && gi.grade.is_finite() && gi.grade.value == gm.value + 1;
    rep.verdict("grade_of_sum_is_grade_plus_one", tri(grade_ok),
                "grade(A) = " + gi.grade.to_string() + ", grade(M) = " + gm.to_string());

    FPModule tens = tensor_product(mm, nn);
    bool free_ok = free_over(tens, big);
    rep.verdict("tensor_free_over_quotient_by_sum", tri(free_ok));
    return rep;
}

LinkageReport ext_tor_duality_check(const FPModule& m, int range) {
    const RingPtr& ring = m.ring();
    LinkageReport rep;
    rep.subject = "Ext/Tor duality lengths";

    bool gor1 = ring_is_gorenstein(ring) && ring_dim(ring) == 1;
    rep.hyp("ring_gorenstein_dimension_one", tri(gor1));

    FPModule mm = minimal_presentation(m);
    HomDim dep = depth_of(mm);
    bool mcm = dep.is_finite() && dep.value == ring_dim(ring);
    rep.hyp("M_maximal_cohen_macaulay", tri(mcm), "depth M = " + dep.to_string());
    if (!gor1 || !mcm) {
        for (int i = 1; i <= range; ++i)
            rep.verdict("length_equal_i" + std::to_string(i), TriState::NotComputed, "hypotheses failed");
        return rep;
    }

    FPModule lam = lambda_module(mm);
    for (int i = 1; i <= range; ++i) {
        FPModule t = tor_module(i, mm, lam);
        auto lt = certified_length(t);
        if (!lt) {
            rep.hyp("tor_finite_length_i" + std::to_string(i), TriState::False, "hypothesis not certified");
            rep.verdict("length_equal_i" + std::to_string(i), TriState::NotComputed);
            continue;
        }
        FPModule e = ext_module(i, mm, mm);
        auto le = certified_length(e);
        bool eq = le && *le == *lt;
        rep.verdict("length_equal_i" + std::to_string(i), tri(eq),
                    "len Ext = " + (le ? std::to_string(*le) : "inf") + ", len Tor = " + std::to_string(*lt));
    }
    return rep;
}

LinkageReport tor_shift_check(const FPModule& m, int n) {
    const RingPtr& ring = m.ring();
    LinkageReport rep;
    rep.subject = "syzygy-shift invariance of Tor_1(M, lambda M)";

    rep.hyp("ring_gorenstein_dimension_one", tri(ring_is_gorenstein(ring) && ring_dim(ring) == 1));
    FPModule mm = minimal_presentation(m);
    LinkageReport hl = is_horizontally_linked(mm);
    rep.hyp("M_horizontally_linked", tri(hl.overall()));

    FPModule lam = lambda_module(mm);
    if (lam.gen_count() == 0) {
        rep.hyp("tor1_M_lambdaM_zero", TriState::True, "lambda M = 0 (vacuous: M free)");
        rep.verdict("tor1_shifted_zero", TriState::True, "vacuous");
        return rep;
    }
    bool base = is_zero_module(tor_module(1, mm, lam));
    rep.hyp("tor1_M_lambdaM_zero", tri(base));
    if (!rep.hypotheses_hold()) {
        rep.verdict("tor1_shifted_zero", TriState::NotComputed, "hypotheses failed");
        return rep;
    }

    FPModule om = syzygy_power(mm, n);
    FPModule lam_om = lambda_module(om);
    if (lam_om.gen_count() == 0) {
        rep.verdict("tor1_shifted_zero", TriState::True, "vacuous: lambda Omega^n M = 0");
        return rep;
    }
    rep.verdict("tor1_shifted_zero", tri(is_zero_module(tor_module(1, om, lam_om))));
    return rep;
}

DepthScanResult depth_via_linked_syzygies(const FPModule& m, HdimSelector h, int nmax) {
    const RingPtr& ring = m.ring();
    DepthScanResult out;
    out.report.subject = h == HdimSelector::PD ? "depth detection (pd branch)" : "depth detection (G-dim branch)";

    FPModule mm = minimal_presentation(m);
    auto len = certified_length(mm);
    out.report.hyp("M_finite_length", tri(len.has_value()),
                   len ? "length = " + std::to_string(*len) : "dim R/Ann(M) > 0");

    HomDim base = h == HdimSelector::PD ? pd_of(mm) : gdim_suite(mm).gdim;
    bool base_infinite = base.kind == HomDim::Kind::Infinite;
    out.report.hyp("Hdim_M_infinite", tri(base_infinite), "H-dim(M) = " + base.to_string());

    if (!out.report.hypotheses_hold()) {
        out.report.verdict("inf_equals_depth", TriState::NotComputed, "hypotheses failed");
        return out;
    }

    for (int n = 0; n <= nmax; ++n) {
        FPModule x = lambda_module(syzygy_power(mm, n));
        if (x.gen_count() == 0) {
            out.per_n.push_back({n, "vacuous"});
            continue;
        }
        HomDim d = h == HdimSelector::PD ? pd_of(x) : gdim_suite(x).gdim;
        out.per_n.push_back({n, d.to_string()});
        if (d.kind == HomDim::Kind::Infinite && !out.inf_n) out.inf_n = n;
        if (h == HdimSelector::PD && d.is_finite() && d.value != n) {
            // pd(lambda Omega^n M), when finite, must equal n
            out.report.consistency = false;
            out.report.verdict("pd_equals_n_when_finite", TriState::False,
                               "n = " + std::to_string(n) + ", pd = " + d.to_string());
        }
    }
    int depth_r = ring_depth(ring);
    if (out.inf_n) {
        out.report.verdict("inf_equals_depth", tri(*out.inf_n == depth_r),
                           "inf = " + std::to_string(*out.inf_n) + ", depth R = " + std::to_string(depth_r));
    } else {
        out.report.verdict("inf_equals_depth", TriState::NotComputed,
                           "no infinite H-dim found for n <= " + std::to_string(nmax));
    }
    return out;
}

LinkageReport tor_nonvanishing_check(const FPModule& m, int n) {
    LinkageReport rep;
    rep.subject = "Tor_n(M, lambda Omega^n M) nonvanishing";
    FPModule mm = minimal_presentation(m);
    FPModule x = lambda_module(syzygy_power(mm, n));
    if (x.gen_count() == 0) {
        rep.hyp("lambda_omega_n_nonzero", TriState::False, "vacuous: lambda Omega^n M = 0");
        rep.verdict("tor_n_nonzero", TriState::NotComputed, "vacuous");
        return rep;
    }
    rep.hyp("lambda_omega_n_nonzero", TriState::True);
    rep.verdict("tor_n_nonzero", tri(!is_zero_module(tor_module(n, mm, x))));
    return rep;
}

}  // namespace lk
