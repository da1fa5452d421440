#include "lk/run.hpp"

#include <chrono>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "lk/version.hpp"

namespace lk {

namespace {

using dsl::ArgKind;
using dsl::CheckStmt;
using dsl::Expr;
using dsl::ExprPtr;

struct Value {
    enum class Kind { Bool, Int, Dim, Ideal, Module, Report, Text } kind = Kind::Text;
    bool b = false;
    long long i = 0;
    HomDim d;
    std::optional<IdealHandle> ideal;
    std::optional<FPModule> mod;
    std::optional<LinkageReport> rep;
    std::optional<long long> aux;  // depth_scan: inf_n
    nlohmann::ordered_json data;   // structured payload for matrix-bearing checks
    std::string text;
};

struct Env {
    RunOptions opts;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, IdealHandle> ideals;
    std::map<std::string, FPModule> modules;
    RingPtr active;
    std::mt19937_64 rng;
};

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw EngineError("unknown monomial order '" + name + "' (use grevlex or lex)");
}

Polynomial parse_in(const RingPtr& ring, const std::string& text) {
    try {
        return ring->nf(poly_parse(ring->ctx(), text));
    } catch (const PolyParseError& e) {
        throw EngineError("bad polynomial '" + text + "': " + e.what());
    }
}

int auto_bound(const RingPtr& ring, const Env& env) {
    if (env.opts.bound >= 0) return env.opts.bound;
    return ring_dim(ring) + 2;
}

IdealHandle eval_ideal(Env& env, const Expr& e);

FPModule eval_module(Env& env, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Name: {
            auto it = env.modules.find(e.text);
            if (it == env.modules.end()) throw EngineError("unknown module '" + e.text + "'");
            return it->second;
        }
        case Expr::Kind::Quot: {
            auto it = env.ideals.find(e.quot_ideal);
            if (it == env.ideals.end()) throw EngineError("unknown ideal '" + e.quot_ideal + "'");
            return FPModule::quotient_by_ideal(it->second);
        }
        case Expr::Kind::Call: {
            if (e.text == "lambda") return lambda_module(eval_module(env, *e.args[0]));
            if (e.text == "syz")
                return syzygy_power(eval_module(env, *e.args[1]), static_cast<int>(e.args[0]->ival));
            if (e.text == "tr") return transpose(eval_module(env, *e.args[0]));
            if (e.text == "cosyz") return cosyzygy(eval_module(env, *e.args[0]));
            if (e.text == "k") {
                if (!env.active) throw EngineError("no active ring for k()");
                return FPModule::residue_field(env.active);
            }
            throw EngineError("unknown module function '" + e.text + "'");
        }
        default: throw EngineError("expected a module expression");
    }
}

IdealHandle eval_ideal(Env& env, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Name: {
            auto it = env.ideals.find(e.text);
            if (it == env.ideals.end()) throw EngineError("unknown ideal '" + e.text + "'");
            return it->second;
        }
        case Expr::Kind::Call: {
            if (e.text == "ideal") {
                if (!env.active) throw EngineError("no active ring for an ideal literal");
                std::vector<Polynomial> gens;
                for (const auto& a : e.args) gens.push_back(parse_in(env.active, a->text));
                return IdealHandle(env.active, std::move(gens));
            }
            if (e.text == "ann") return annihilator(eval_module(env, *e.args[0]));
            if (e.text == "sum") return ideal_sum(eval_ideal(env, *e.args[0]), eval_ideal(env, *e.args[1]));
            if (e.text == "intersect")
                return ideal_intersection(eval_ideal(env, *e.args[0]), eval_ideal(env, *e.args[1]));
            if (e.text == "colon")
                return ideal_colon(eval_ideal(env, *e.args[0]), eval_ideal(env, *e.args[1]));
            throw EngineError("unknown ideal function '" + e.text + "'");
        }
        default: throw EngineError("expected an ideal expression");
    }
}

std::string render_report(const LinkageReport& r) {
    std::ostringstream os;
    os << r.subject << ": " << (r.overall() ? "ok" : "failed");
    return os.str();
}

std::string numerics_line(const FPModule& m) {
    std::ostringstream os;
    FPModule mm = minimal_presentation(m);
    os << "gens " << mm.gen_count();
    auto len = certified_length(mm);
    os << ", length " << (len ? std::to_string(*len) : "inf");
    return os.str();
}

// one seeded random linked pair + Prop 3.1 battery; see the acceptance suite
// for the full-size version
LinkageReport battery_report(Env& env, int count) {
    if (!env.active) throw EngineError("no active ring for linked_pair_battery");
    const RingPtr& ring = env.active;
    const PolyCtx& ctx = ring->ctx();
    std::mt19937_64 rng(env.opts.seed);

    LinkageReport rep;
    rep.subject = "random linked-pair battery";
    int ok = 0, tried = 0, found = 0;
    IdealHandle zero = ideal_zero(ring);
    while (found < count && tried < 60 * count) {
        ++tried;
        // random homogeneous polynomial of degree 1 or 2
        auto rand_poly = [&](int deg) {
            auto monos = std_monomials(ring, deg);
            std::vector<Term> ts;
            for (const auto& mo : monos) {
                uint32_t c = static_cast<uint32_t>(rng() % 3);  // sparse-ish
                if (c) ts.push_back({mo, c});
            }
            return poly_normalize(ctx, std::move(ts));
        };
        std::vector<Polynomial> jg;
        jg.push_back(rand_poly(1 + static_cast<int>(rng() % 2)));
        if (rng() % 2) jg.push_back(rand_poly(1));
        IdealHandle j0(ring, std::move(jg));
        if (j0.is_unit() || j0.is_zero_ideal()) continue;
        IdealHandle i1 = ideal_colon(zero, j0);
        if (i1.is_unit() || i1.is_zero_ideal()) continue;
        IdealHandle j1 = ideal_colon(zero, i1);
        if (j1.is_unit() || j1.is_zero_ideal()) continue;
        ++found;
        LinkageReport geo = geometric_link_report(i1, j1);
        if (geo.consistency) ++ok;
    }
    rep.verdict("pairs_tested", tri(found >= count), std::to_string(found) + " pairs");
    rep.verdict("battery_consistent", tri(found > 0 && ok == found),
                std::to_string(ok) + "/" + std::to_string(found) + " consistent");
    return rep;
}

Value eval_check_value(Env& env, const Expr& call) {
    const std::string& h = call.text;
    Value v;
    auto as_bool = [&](bool b) {
        v.kind = Value::Kind::Bool;
        v.b = b;
        v.text = b ? "true" : "false";
        return v;
    };
    auto as_int = [&](long long i) {
        v.kind = Value::Kind::Int;
        v.i = i;
        v.text = std::to_string(i);
        return v;
    };
    auto as_dim = [&](HomDim d) {
        v.kind = Value::Kind::Dim;
        v.d = d;
        v.text = d.to_string();
        return v;
    };
    auto as_ideal = [&](IdealHandle i) {
        v.kind = Value::Kind::Ideal;
        v.text = i.to_string();
        v.ideal = std::move(i);
        return v;
    };
    auto as_report = [&](LinkageReport r) {
        v.kind = Value::Kind::Report;
        v.text = render_report(r);
        v.rep = std::move(r);
        return v;
    };
    auto as_text = [&](std::string s) {
        v.kind = Value::Kind::Text;
        v.text = std::move(s);
        return v;
    };

    if (h == "gb") {
        // the reduced Groebner basis of lift(I) + defining relations in the
        // ambient polynomial ring: the unique canonical form of the ideal
        IdealHandle i = eval_ideal(env, *call.args[0]);
        std::ostringstream os;
        os << "{";
        for (size_t k = 0; k < i.gb().size(); ++k) {
            if (k) os << ", ";
            os << poly_to_string(i.ring()->ctx(), i.gb()[k]);
        }
        os << "}";
        return as_text(os.str());
    }
    if (h == "nf") {
        IdealHandle i = eval_ideal(env, *call.args[1]);
        Polynomial f = parse_in(i.ring(), call.args[0]->text);
        return as_text(poly_to_string(i.ring()->ctx(), i.nf(f)));
    }
    if (h == "ann" || h == "sum" || h == "intersect" || h == "colon")
        return as_ideal(eval_ideal(env, call));
    if (h == "hilbert") {
        auto hd = hilbert_data(eval_ideal(env, *call.args[0]));
        std::ostringstream os;
        os << "numerator [";
        for (size_t k = 0; k < hd.numerator.size(); ++k) {
            if (k) os << ", ";
            os << hd.numerator[k];
        }
        os << "], dim " << hd.krull_dim << ", mult " << hd.multiplicity;
        Value val = as_text(os.str());
        val.data["numerator"] = hd.numerator;
        val.data["krull_dim"] = hd.krull_dim;
        val.data["multiplicity"] = hd.multiplicity;
        return val;
    }
    if (h == "dim") return as_int(hilbert_data(eval_ideal(env, *call.args[0])).krull_dim);
    if (h == "mult") return as_int(hilbert_data(eval_ideal(env, *call.args[0])).multiplicity);
    if (h == "grade") return as_dim(grade_of_ideal(eval_ideal(env, *call.args[0])));
    if (h == "homog") {
        if (!env.active) throw EngineError("no active ring");
        Polynomial f = parse_in(env.active, call.args[0]->text);
        auto di = degree_check(f);
        if (di.kind == DegreeInfo::Kind::Zero) return as_text("zero (degree indeterminate)");
        if (di.kind == DegreeInfo::Kind::Homogeneous)
            return as_text("homogeneous of degree " + std::to_string(di.degree));
        return as_text("inhomogeneous");
    }
    if (h == "ideal_eq")
        return as_bool(eval_ideal(env, *call.args[0]).equals(eval_ideal(env, *call.args[1])));
    if (h == "gorenstein") {
        auto rep = is_gorenstein_ideal(eval_ideal(env, *call.args[0]));
        Value val = as_report(rep.detail);
        val.b = rep.verdict;
        val.text = std::string(rep.verdict ? "Gorenstein" : "not Gorenstein") + ", grade " +
                   rep.grade.to_string();
        val.kind = Value::Kind::Report;
        if (!rep.verdict) {
            // make overall() reflect the composite verdict
            val.rep->consistency = val.rep->consistency && rep.verdict;
        }
        return val;
    }
    if (h == "gorenstein_ring") {
        if (!env.active) throw EngineError("no active ring");
        return as_bool(ring_is_gorenstein(env.active));
    }
    if (h == "betti") {
        FPModule m = eval_module(env, *call.args[0]);
        int b = call.args.size() > 1 ? static_cast<int>(call.args[1]->ival) : auto_bound(m.ring(), env);
        Resolution r = free_resolution(minimal_presentation(m), b);
        Value val = as_text(r.betti.to_string());
        nlohmann::ordered_json tbl = nlohmann::ordered_json::array();
        for (const auto& [key, beta] : r.betti.b) {
            nlohmann::ordered_json e;
            e["i"] = key.first;
            e["j"] = key.second;
            e["beta"] = beta;
            tbl.push_back(e);
        }
        val.data["betti"] = tbl;
        return val;
    }
    if (h == "res") {
        FPModule m = eval_module(env, *call.args[0]);
        int b = call.args.size() > 1 ? static_cast<int>(call.args[1]->ival) : auto_bound(m.ring(), env);
        Resolution r = free_resolution(minimal_presentation(m), b);
        std::ostringstream os;
        for (size_t j = 0; j < r.chain.size(); ++j) {
            if (j) os << " ; ";
            os << "d" << (j + 1) << " = " << r.chain[j].to_string();
        }
        Value val = as_text(os.str());
        nlohmann::ordered_json ds = nlohmann::ordered_json::array();
        for (const auto& d : r.chain) ds.push_back(matrix_json(d));
        val.data["differentials"] = ds;
        return val;
    }
    if (h == "hf") {
        FPModule m = eval_module(env, *call.args[0]);
        Numerics n = module_numerics(m, static_cast<int>(call.args[1]->ival),
                                     static_cast<int>(call.args[2]->ival));
        std::ostringstream os;
        for (size_t k = 0; k < n.hf.size(); ++k) {
            if (k) os << " ";
            os << n.hf[k];
        }
        Value val = as_text(os.str());
        val.data["lo"] = n.lo;
        val.data["hf"] = n.hf;
        val.data["finite_certified"] = n.finite_certified;
        return val;
    }
    if (h == "length") {
        auto len = certified_length(eval_module(env, *call.args[0]));
        if (!len) return as_dim(HomDim::infinite());
        return as_int(*len);
    }
    if (h == "depth") return as_dim(depth_of(eval_module(env, *call.args[0])));
    if (h == "pd") return as_dim(pd_of(eval_module(env, *call.args[0])));
    if (h == "gdim") return as_dim(gdim_suite(eval_module(env, *call.args[0])).gdim);
    if (h == "stable") return as_bool(trace_and_stability(eval_module(env, *call.args[0])).stable);
    if (h == "cyclic") return as_bool(is_cyclic(eval_module(env, *call.args[0])));
    if (h == "free") return as_bool(is_free_module(eval_module(env, *call.args[0])));
    if (h == "is_zero") return as_bool(is_zero_module(eval_module(env, *call.args[0])));
    if (h == "free_over")
        return as_bool(free_over(eval_module(env, *call.args[0]), eval_ideal(env, *call.args[1])));
    if (h == "ext" || h == "tor") {
        int i = static_cast<int>(call.args[0]->ival);
        FPModule a = eval_module(env, *call.args[1]);
        FPModule b = eval_module(env, *call.args[2]);
        FPModule r = h == "ext" ? ext_module(i, a, b) : tor_module(i, a, b);
        return as_text(numerics_line(r));
    }
    if (h == "ext_zero" || h == "tor_zero") {
        int i = static_cast<int>(call.args[0]->ival);
        FPModule a = eval_module(env, *call.args[1]);
        FPModule b = eval_module(env, *call.args[2]);
        FPModule r = h == "ext_zero" ? ext_module(i, a, b) : tor_module(i, a, b);
        return as_bool(is_zero_module(r));
    }
    if (h == "horizontally_linked") return as_report(is_horizontally_linked(eval_module(env, *call.args[0])));
    if (h == "linked")
        return as_report(ideals_linked_by(eval_ideal(env, *call.args[0]), eval_ideal(env, *call.args[1]),
                                          eval_ideal(env, *call.args[2])));
    if (h == "geolink")
        return as_report(geometric_link_report(eval_ideal(env, *call.args[0]), eval_ideal(env, *call.args[1])));
    if (h == "sum_theorem")
        return as_report(verify_sum_theorem(eval_module(env, *call.args[0]), eval_module(env, *call.args[1]),
                                            eval_ideal(env, *call.args[2])));
    if (h == "ext_tor_duality")
        return as_report(ext_tor_duality_check(eval_module(env, *call.args[0]),
                                               static_cast<int>(call.args[1]->ival)));
    if (h == "tor_shift")
        return as_report(tor_shift_check(eval_module(env, *call.args[0]), static_cast<int>(call.args[1]->ival)));
    if (h == "depth_scan") {
        FPModule m = eval_module(env, *call.args[0]);
        const std::string& w = call.args[1]->text;
        if (w != "pd" && w != "gdim") throw EngineError("depth_scan selector must be pd or gdim");
        HdimSelector sel = w == "pd" ? HdimSelector::PD : HdimSelector::GDIM;
        DepthScanResult r = depth_via_linked_syzygies(m, sel, static_cast<int>(call.args[2]->ival));
        Value val = as_report(r.report);
        if (r.inf_n) val.aux = *r.inf_n;
        std::ostringstream os;
        os << "inf = " << (r.inf_n ? std::to_string(*r.inf_n) : "not-found") << " [";
        for (size_t k = 0; k < r.per_n.size(); ++k) {
            if (k) os << ", ";
            os << "n=" << r.per_n[k].first << ": " << r.per_n[k].second;
        }
        os << "]";
        val.text = os.str();
        return val;
    }
    if (h == "tor_nonvanishing")
        return as_report(tor_nonvanishing_check(eval_module(env, *call.args[0]),
                                                static_cast<int>(call.args[1]->ival)));
    if (h == "linked_pair_battery")
        return as_report(battery_report(env, static_cast<int>(call.args[0]->ival)));
    throw EngineError("unknown check '" + h + "'");
}

bool compare_expect(Env& env, const Value& v, const Expr& expect) {
    switch (expect.kind) {
        case Expr::Kind::BoolLit:
            if (v.kind == Value::Kind::Bool) return v.b == expect.bval;
            if (v.kind == Value::Kind::Report) return v.rep->overall() == expect.bval;
            return false;
        case Expr::Kind::IntLit:
            if (v.kind == Value::Kind::Int) return v.i == expect.ival;
            if (v.kind == Value::Kind::Dim) return v.d.is_finite() && v.d.value == expect.ival;
            if (v.aux) return *v.aux == expect.ival;
            return false;
        case Expr::Kind::InfLit:
            return v.kind == Value::Kind::Dim && v.d.kind == HomDim::Kind::Infinite;
        default: {
            if (v.kind != Value::Kind::Ideal) return false;
            IdealHandle rhs = eval_ideal(env, expect);
            return v.ideal->equals(rhs);
        }
    }
}

std::string printed_check(const CheckStmt& c) {
    dsl::Script tmp;
    tmp.stmts.push_back(c);
    std::string s = dsl::print_script(tmp);
    while (!s.empty() && (s.back() == '\n' || s.back() == ';')) s.pop_back();
    return s;
}

CheckOutcome run_one_check(Env& env, const CheckStmt& c) {
    CheckOutcome out;
    out.check = printed_check(c);
    auto t0 = std::chrono::steady_clock::now();
    try {
        Value v = eval_check_value(env, *c.call);
        out.value = v.text;
        out.report = v.rep;
        out.data = v.data;
        if (c.expect) {
            out.status = compare_expect(env, v, *c.expect) ? "pass" : "fail";
        } else if (v.kind == Value::Kind::Report) {
            out.status = v.rep->overall() ? "pass" : "fail";
        } else if (v.kind == Value::Kind::Bool) {
            out.status = v.b ? "pass" : "fail";
        } else {
            out.status = "info";
        }
    } catch (const EngineError& e) {
        out.status = "error";
        out.value = e.what();
    }
    out.micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

int thread_budget(const RunOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    if (const char* env = std::getenv("LK_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

RunReport run_script(const dsl::Script& s, const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.engine_version = LK_VERSION;
    rep.opts = opts;

    Env env;
    env.opts = opts;
    env.rng.seed(opts.seed);

    bool stop = false;
    for (const auto& st : s.stmts) {
        if (stop) break;
        try {
            if (auto* r = std::get_if<dsl::RingDecl>(&st)) {
                std::vector<int32_t> weights = r->degrees;
                uint32_t p = r->prime.value_or(opts.prime);
                auto ring =
                    GradedRing::polynomial(r->vars, std::move(weights), p, order_from_name(opts.order));
                if (!r->quotient_polys.empty()) {
                    std::vector<Polynomial> rels;
                    for (const auto& txt : r->quotient_polys) rels.push_back(parse_in(ring, txt));
                    ring = GradedRing::quotient(ring, rels);
                }
                env.rings[r->name] = ring;
                env.active = ring;
            } else if (auto* d = std::get_if<dsl::IdealDecl>(&st)) {
                const RingPtr& ring = env.rings.at(d->ring);
                std::vector<Polynomial> gens;
                for (const auto& txt : d->polys) gens.push_back(parse_in(ring, txt));
                env.ideals.emplace(d->name, IdealHandle(ring, std::move(gens)));
            } else if (auto* m = std::get_if<dsl::ModuleDecl>(&st)) {
                const RingPtr& ring = env.rings.at(m->ring);
                if (m->kind == dsl::ModuleDecl::Kind::Coker) {
                    size_t rows = m->rows.size(), cols = m->rows[0].size();
                    for (const auto& row : m->rows)
                        if (row.size() != cols) throw EngineError("module rows have unequal lengths");
                    std::vector<std::vector<Polynomial>> ents(rows);
                    for (size_t r = 0; r < rows; ++r)
                        for (size_t c = 0; c < cols; ++c)
                            ents[r].push_back(parse_in(ring, m->rows[r][c]));
                    std::vector<int32_t> twists =
                        m->twists.empty() ? std::vector<int32_t>(rows, 0) : m->twists;
                    // column degrees inferred from the entries
                    std::vector<int32_t> cd(cols, 0);
                    for (size_t c = 0; c < cols; ++c) {
                        bool found = false;
                        for (size_t r = 0; r < rows; ++r) {
                            if (ents[r][c].is_zero()) continue;
                            int32_t deg;
                            if (!poly_is_homogeneous(ents[r][c], &deg))
                                throw EngineError("matrix entries must be homogeneous");
                            if (!found) cd[c] = deg + twists[r];
                            found = true;
                        }
                    }
                    PolyMatrix pm(ring, twists, cd);
                    for (size_t r = 0; r < rows; ++r)
                        for (size_t c = 0; c < cols; ++c) pm.set(r, c, ents[r][c]);
                    env.modules.emplace(m->name, FPModule(std::move(pm)));
                } else {
                    const IdealHandle& i = env.ideals.at(m->arg);
                    env.modules.emplace(m->name, m->kind == dsl::ModuleDecl::Kind::Quotient
                                                     ? FPModule::quotient_by_ideal(i)
                                                     : FPModule::ideal_as_module(i));
                }
            } else if (auto* o = std::get_if<dsl::SetStmt>(&st)) {
                if (o->key == "bound") env.opts.bound = std::atoi(o->value.c_str());
                else if (o->key == "fail_fast") env.opts.fail_fast = o->value == "true";
                else if (o->key == "seed") env.opts.seed = std::strtoull(o->value.c_str(), nullptr, 10);
                else throw EngineError("unknown option '" + o->key + "'");
            } else if (auto* c = std::get_if<dsl::CheckStmt>(&st)) {
                CheckOutcome oc = run_one_check(env, *c);
                bool bad = oc.status == "fail" || oc.status == "error";
                rep.results.push_back(std::move(oc));
                if (bad && env.opts.fail_fast) stop = true;
            } else if (auto* pb = std::get_if<dsl::ParBlock>(&st)) {
                int budget = thread_budget(env.opts);
                std::vector<CheckOutcome> outs(pb->checks.size());
                if (budget <= 1) {
                    for (size_t i = 0; i < pb->checks.size(); ++i) outs[i] = run_one_check(env, pb->checks[i]);
                } else {
                    std::vector<std::future<CheckOutcome>> futs;
                    for (const auto& chk : pb->checks)
                        futs.push_back(std::async(std::launch::async,
                                                  [&env, &chk]() { return run_one_check(env, chk); }));
                    for (size_t i = 0; i < futs.size(); ++i) outs[i] = futs[i].get();
                }
                bool bad = false;
                for (auto& oc : outs) {
                    bad |= oc.status == "fail" || oc.status == "error";
                    rep.results.push_back(std::move(oc));
                }
                if (bad && env.opts.fail_fast) stop = true;
            }
        } catch (const EngineError& e) {
            CheckOutcome oc;
            oc.check = "(declaration)";
            oc.status = "error";
            oc.value = e.what();
            rep.results.push_back(std::move(oc));
            stop = true;  // later statements depend on the failed declaration
        }
    }
    rep.total_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::ordered_json matrix_json(const PolyMatrix& m) {
    nlohmann::ordered_json j;
    j["row_twist"] = m.row_twist();
    j["col_deg"] = m.col_deg();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(poly_to_string(m.ring()->ctx(), m.at(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

namespace {

nlohmann::ordered_json report_item_json(const ReportItem& it) {
    nlohmann::ordered_json j;
    j["name"] = it.name;
    j["status"] = tristate_name(it.status);
    if (!it.witness.empty()) j["witness"] = it.witness;
    return j;
}

}  // namespace

nlohmann::ordered_json report_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = "lk-report/1";
    nlohmann::ordered_json meta;
    meta["engine_version"] = r.engine_version;
    meta["prime"] = r.opts.prime;
    meta["order"] = r.opts.order;
    meta["bound"] = r.opts.bound < 0 ? nlohmann::ordered_json("auto") : nlohmann::ordered_json(r.opts.bound);
    meta["seed"] = r.opts.seed;
    meta["fail_fast"] = r.opts.fail_fast;
    j["meta"] = meta;

    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    int pass = 0, fail = 0, info = 0, error = 0;
    for (const auto& oc : r.results) {
        nlohmann::ordered_json e;
        e["check"] = oc.check;
        e["status"] = oc.status;
        e["value"] = oc.value;
        if (!oc.data.is_null()) e["data"] = oc.data;
        if (oc.report) {
            nlohmann::ordered_json rj;
            rj["subject"] = oc.report->subject;
            rj["hypotheses"] = nlohmann::ordered_json::array();
            for (const auto& h : oc.report->hypotheses) rj["hypotheses"].push_back(report_item_json(h));
            rj["verdicts"] = nlohmann::ordered_json::array();
            for (const auto& v : oc.report->verdicts) rj["verdicts"].push_back(report_item_json(v));
            rj["consistency"] = oc.report->consistency;
            e["report"] = rj;
        }
        results.push_back(e);
        if (oc.status == "pass") ++pass;
        else if (oc.status == "fail") ++fail;
        else if (oc.status == "info") ++info;
        else ++error;
    }
    j["results"] = results;
    nlohmann::ordered_json summary;
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["info"] = info;
    summary["error"] = error;
    summary["exit_code"] = r.exit_code();
    j["summary"] = summary;

    nlohmann::ordered_json timing;
    timing["total_us"] = r.total_micros;
    nlohmann::ordered_json per = nlohmann::ordered_json::array();
    for (const auto& oc : r.results) per.push_back(oc.micros);
    timing["per_check_us"] = per;
    j["timing"] = timing;
    return j;
}

std::string report_text(const RunReport& r) {
    std::ostringstream os;
    os << "lk " << r.engine_version << "  (p = " << r.opts.prime << ", order = " << r.opts.order
       << ", seed = " << r.opts.seed << ")\n";
    for (const auto& oc : r.results) {
        os << "[" << oc.status << "] " << oc.check;
        if (!oc.value.empty()) os << "  ->  " << oc.value;
        os << "\n";
        if (oc.report) {
            for (const auto& h : oc.report->hypotheses) {
                os << "    hyp " << h.name << ": " << tristate_name(h.status);
                if (!h.witness.empty()) os << "  (" << h.witness << ")";
                os << "\n";
            }
            for (const auto& v : oc.report->verdicts) {
                os << "    " << v.name << ": " << tristate_name(v.status);
                if (!v.witness.empty()) os << "  (" << v.witness << ")";
                os << "\n";
            }
            if (!oc.report->consistency) os << "    CONSISTENCY FAILURE\n";
        }
    }
    int code = r.exit_code();
    os << "exit " << code << "\n";
    return os.str();
}

}  // namespace lk
