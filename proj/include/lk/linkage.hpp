#pragma once

#include "lk/homology.hpp"

namespace lk {

// ---- operator calculus ----

// Tr M = coker of the dualized minimal presentation map
FPModule transpose(const FPModule& m);

// lambda M = Omega Tr M; zero exactly when M is free
FPModule lambda_module(const FPModule& m);

// Omega^{-1} M = (Omega(M*))*; requires a Gorenstein ring and M maximal
// Cohen-Macaulay. Free input is degenerate and yields the zero module.
FPModule cosyzygy(const FPModule& m);

// ---- reports ----

enum class TriState { True, False, NotComputed };
inline const char* tristate_name(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        default: return "not-computed";
    }
}
inline TriState tri(bool b) { return b ? TriState::True : TriState::False; }

struct ReportItem {
    std::string name;
    TriState status = TriState::NotComputed;
    std::string witness;
};

// Structured verdicts; hypothesis failures are recorded, never silently
// skipped, and conclusions are not evaluated under failed hypotheses.
struct LinkageReport {
    std::string subject;
    std::vector<ReportItem> hypotheses;
    std::vector<ReportItem> verdicts;
    bool consistency = true;

    void hyp(std::string name, TriState st, std::string witness = "") {
        hypotheses.push_back({std::move(name), st, std::move(witness)});
    }
    void verdict(std::string name, TriState st, std::string witness = "") {
        verdicts.push_back({std::move(name), st, std::move(witness)});
    }
    bool hypotheses_hold() const {
        for (const auto& h : hypotheses)
            if (h.status == TriState::False) return false;
        return true;
    }
    bool overall() const {
        if (!hypotheses_hold() || !consistency) return false;
        for (const auto& v : verdicts)
            if (v.status == TriState::False) return false;
        return true;
    }
};

// ---- theorem verifiers ----

// stable + Ext^1(Tr M, R) = 0, with the numeric lambda^2 M ~ M witness
LinkageReport is_horizontally_linked(const FPModule& m);

// I = (c : J) and J = (c : I); requires c inside I and J
LinkageReport ideals_linked_by(const IdealHandle& i, const IdealHandle& j, const IdealHandle& c);

// the five computable equivalent conditions for geometric linkage of a pair
// linked by (0); unmixedness is a caller-asserted flag, recorded not verified
LinkageReport geometric_link_report(const IdealHandle& i, const IdealHandle& j,
                                    bool unmixed_asserted = true);

struct GorensteinIdealReport {
    bool verdict = false;
    HomDim grade;
    LinkageReport detail;
};
// grade g, R/a perfect, Ext^i(R/a,R) = 0 for i != g, Ext^g cyclic with
// annihilator a
GorensteinIdealReport is_gorenstein_ideal(const IdealHandle& a);

// sum-of-annihilators theorem, specialized to K = R: under the linkage and
// geometric hypotheses, Ann(M)+Ann(N) is Gorenstein of grade(M)+1 and
// M (x) N is free over R/(Ann M + Ann N)
LinkageReport verify_sum_theorem(const FPModule& m, const FPModule& n, const IdealHandle& c);

// length Ext^i(M,M) = length Tor_i(M, lambda M) for 1 <= i <= range
LinkageReport ext_tor_duality_check(const FPModule& m, int range);

// Tor_1(Omega^n M, lambda Omega^n M) = 0 given Tor_1(M, lambda M) = 0
LinkageReport tor_shift_check(const FPModule& m, int n);

enum class HdimSelector { PD, GDIM };

struct DepthScanResult {
    LinkageReport report;
    std::optional<int> inf_n;
    std::vector<std::pair<int, std::string>> per_n;  // n -> H-dim or "vacuous"
};
// depth R = inf{ n : H-dim(lambda Omega^n M) = infinity } for finite-length M
// with H-dim(M) = infinity
DepthScanResult depth_via_linked_syzygies(const FPModule& m, HdimSelector h, int nmax);

// Tor_n(M, lambda Omega^n M) != 0 whenever lambda Omega^n M != 0
LinkageReport tor_nonvanishing_check(const FPModule& m, int n);

}  // namespace lk
