#include "lk/script.hpp"

#include <sstream>

namespace lk::dsl {

bool Expr::equals(const Expr& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::IntLit: return ival == o.ival;
        case Kind::BoolLit: return bval == o.bval;
        case Kind::InfLit: return true;
        case Kind::WordLit:
        case Kind::PolyLit:
        case Kind::Name: return text == o.text;
        case Kind::Quot: return quot_ring == o.quot_ring && quot_ideal == o.quot_ideal;
        case Kind::Call: {
            if (text != o.text || args.size() != o.args.size()) return false;
            for (size_t i = 0; i < args.size(); ++i)
                if (!args[i]->equals(*o.args[i])) return false;
            return true;
        }
    }
    return false;
}

namespace {

template <class T>
bool vec_eq(const std::vector<T>& a, const std::vector<T>& b) {
    return a == b;
}

bool stmt_eq(const Stmt& a, const Stmt& b) {
    if (a.index() != b.index()) return false;
    if (auto* r = std::get_if<RingDecl>(&a)) {
        const auto& s = std::get<RingDecl>(b);
        return r->name == s.name && vec_eq(r->vars, s.vars) && vec_eq(r->degrees, s.degrees) &&
               r->prime == s.prime && vec_eq(r->quotient_polys, s.quotient_polys);
    }
    if (auto* r = std::get_if<IdealDecl>(&a)) {
        const auto& s = std::get<IdealDecl>(b);
        return r->name == s.name && r->ring == s.ring && vec_eq(r->polys, s.polys);
    }
    if (auto* r = std::get_if<ModuleDecl>(&a)) {
        const auto& s = std::get<ModuleDecl>(b);
        return r->name == s.name && r->ring == s.ring && r->kind == s.kind && r->rows == s.rows &&
               vec_eq(r->twists, s.twists) && r->arg == s.arg;
    }
    if (auto* r = std::get_if<SetStmt>(&a)) {
        const auto& s = std::get<SetStmt>(b);
        return r->key == s.key && r->value == s.value;
    }
    if (auto* r = std::get_if<CheckStmt>(&a)) {
        const auto& s = std::get<CheckStmt>(b);
        if (!r->call->equals(*s.call)) return false;
        if (!r->expect != !s.expect) return false;
        return !r->expect || r->expect->equals(*s.expect);
    }
    const auto& p = std::get<ParBlock>(a);
    const auto& q = std::get<ParBlock>(b);
    if (p.checks.size() != q.checks.size()) return false;
    for (size_t i = 0; i < p.checks.size(); ++i) {
        if (!p.checks[i].call->equals(*q.checks[i].call)) return false;
        if (!p.checks[i].expect != !q.checks[i].expect) return false;
        if (p.checks[i].expect && !p.checks[i].expect->equals(*q.checks[i].expect)) return false;
    }
    return true;
}

}  // namespace

bool Script::equals(const Script& o) const {
    if (stmts.size() != o.stmts.size()) return false;
    for (size_t i = 0; i < stmts.size(); ++i)
        if (!stmt_eq(stmts[i], o.stmts[i])) return false;
    return true;
}

// ---- signatures ----

const std::map<std::string, CheckSig>& check_signatures() {
    using A = ArgKind;
    static const std::map<std::string, CheckSig> sigs = {
        {"gb", {{A::Ideal}, 1}},
        {"nf", {{A::Poly, A::Ideal}, 2}},
        {"ann", {{A::Module}, 1}},
        {"sum", {{A::Ideal, A::Ideal}, 2}},
        {"intersect", {{A::Ideal, A::Ideal}, 2}},
        {"colon", {{A::Ideal, A::Ideal}, 2}},
        {"dim", {{A::Ideal}, 1}},
        {"hilbert", {{A::Ideal}, 1}},
        {"mult", {{A::Ideal}, 1}},
        {"grade", {{A::Ideal}, 1}},
        {"homog", {{A::Poly}, 1}},
        {"ideal_eq", {{A::Ideal, A::Ideal}, 2}},
        {"gorenstein", {{A::Ideal}, 1}},
        {"gorenstein_ring", {{}, 0}},
        {"betti", {{A::Module, A::Int}, 1}},
        {"res", {{A::Module, A::Int}, 1}},
        {"hf", {{A::Module, A::Int, A::Int}, 3}},
        {"length", {{A::Module}, 1}},
        {"depth", {{A::Module}, 1}},
        {"pd", {{A::Module}, 1}},
        {"gdim", {{A::Module}, 1}},
        {"stable", {{A::Module}, 1}},
        {"cyclic", {{A::Module}, 1}},
        {"free", {{A::Module}, 1}},
        {"is_zero", {{A::Module}, 1}},
        {"free_over", {{A::Module, A::Ideal}, 2}},
        {"ext", {{A::Int, A::Module, A::Module}, 3}},
        {"tor", {{A::Int, A::Module, A::Module}, 3}},
        {"ext_zero", {{A::Int, A::Module, A::Module}, 3}},
        {"tor_zero", {{A::Int, A::Module, A::Module}, 3}},
        {"horizontally_linked", {{A::Module}, 1}},
        {"linked", {{A::Ideal, A::Ideal, A::Ideal}, 3}},
        {"geolink", {{A::Ideal, A::Ideal}, 2}},
        {"sum_theorem", {{A::Module, A::Module, A::Ideal}, 3}},
        {"ext_tor_duality", {{A::Module, A::Int}, 2}},
        {"tor_shift", {{A::Module, A::Int}, 2}},
        {"depth_scan", {{A::Module, A::Word, A::Int}, 3}},
        {"tor_nonvanishing", {{A::Module, A::Int}, 2}},
        {"linked_pair_battery", {{A::Int}, 1}},
    };
    return sigs;
}

const std::map<std::string, CheckSig>& ideal_fn_signatures() {
    using A = ArgKind;
    static const std::map<std::string, CheckSig> sigs = {
        {"ideal", {{}, 0}},  // variadic polynomials
        {"ann", {{A::Module}, 1}},
        {"sum", {{A::Ideal, A::Ideal}, 2}},
        {"intersect", {{A::Ideal, A::Ideal}, 2}},
        {"colon", {{A::Ideal, A::Ideal}, 2}},
    };
    return sigs;
}

const std::map<std::string, CheckSig>& module_fn_signatures() {
    using A = ArgKind;
    static const std::map<std::string, CheckSig> sigs = {
        {"lambda", {{A::Module}, 1}},
        {"syz", {{A::Int, A::Module}, 2}},
        {"tr", {{A::Module}, 1}},
        {"cosyz", {{A::Module}, 1}},
        {"k", {{}, 0}},
    };
    return sigs;
}

// ---- lexer ----

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End } kind = Kind::End;
    std::string text;
    Loc loc;
};

struct Lexer {
    const std::string& src;
    size_t i = 0;
    int line = 1, col = 1;
    std::vector<Token> toks;

    explicit Lexer(const std::string& s) : src(s) { run(); }

    void advance(size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    }

    void run() {
        while (i < src.size()) {
            char c = src[i];
            if (c == '#') {
                while (i < src.size() && src[i] != '\n') advance(1);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            Loc at{line, col};
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t b = i;
                while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                    advance(1);
                toks.push_back({Token::Kind::Ident, src.substr(b, i - b), at});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t b = i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
                toks.push_back({Token::Kind::Int, src.substr(b, i - b), at});
                continue;
            }
            if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
                advance(2);
                toks.push_back({Token::Kind::Punct, "==", at});
                continue;
            }
            static const std::string puncts = "=()[]{},;/^*+-";
            if (puncts.find(c) != std::string::npos) {
                advance(1);
                toks.push_back({Token::Kind::Punct, std::string(1, c), at});
                continue;
            }
            throw ScriptError(at, std::string("unexpected character '") + c + "'");
        }
        toks.push_back({Token::Kind::End, "", {line, col}});
    }
};

// ---- parser ----

struct Parser {
    std::vector<Token> toks;
    size_t p = 0;
    Script out;

    // symbol tables
    std::map<std::string, RingDecl> rings;
    std::map<std::string, std::string> ideal_ring, module_ring;
    std::string active_ring;

    const Token& cur() const { return toks[p]; }
    const Token& peek(size_t k = 1) const { return toks[std::min(p + k, toks.size() - 1)]; }
    Token eat() { return toks[p++]; }

    bool is_punct(const char* s) const { return cur().kind == Token::Kind::Punct && cur().text == s; }
    bool is_ident(const char* s) const { return cur().kind == Token::Kind::Ident && cur().text == s; }

    Token expect_punct(const char* s) {
        if (!is_punct(s)) throw ScriptError(cur().loc, "expected '" + std::string(s) + "'");
        return eat();
    }
    Token expect_ident() {
        if (cur().kind != Token::Kind::Ident) throw ScriptError(cur().loc, "expected a name");
        return eat();
    }
    long long expect_int() {
        if (cur().kind != Token::Kind::Int) throw ScriptError(cur().loc, "expected an integer");
        return std::stoll(eat().text);
    }

    void declare(const std::string& name, Loc loc) {
        if (rings.count(name) || ideal_ring.count(name) || module_ring.count(name))
            throw ScriptError(loc, "name '" + name + "' is already declared");
    }

    const RingDecl& ring_of(const std::string& obj, Loc loc) {
        auto ir = ideal_ring.find(obj);
        if (ir != ideal_ring.end()) return rings.at(ir->second);
        auto mr = module_ring.find(obj);
        if (mr != module_ring.end()) return rings.at(mr->second);
        throw ScriptError(loc, "'" + obj + "' is not declared");
    }

    // capture one polynomial literal as canonical text; validated against the
    // given variable list when provided
    std::string capture_poly(const std::vector<std::string>* vars) {
        std::string text;
        Loc at = cur().loc;
        auto is_poly_tok = [&]() {
            if (cur().kind == Token::Kind::Ident || cur().kind == Token::Kind::Int) return true;
            if (cur().kind != Token::Kind::Punct) return false;
            return cur().text == "^" || cur().text == "*" || cur().text == "+" || cur().text == "-";
        };
        bool prev_atom = false;
        while (is_poly_tok()) {
            const Token& t = cur();
            if (t.kind == Token::Kind::Punct) {
                if (t.text == "+" || t.text == "-") {
                    if (!text.empty()) text += ' ';
                    text += t.text;
                    if (!text.empty() && text != "-") text += ' ';
                    if (text == "- ") text = "-";  // unary minus stays tight
                    prev_atom = false;
                } else {
                    text += t.text;
                    prev_atom = false;
                }
            } else {
                if (prev_atom) break;  // two atoms without an operator: not one polynomial
                text += t.text;
                prev_atom = true;
            }
            eat();
        }
        if (text.empty()) throw ScriptError(at, "expected a polynomial");
        if (vars) {
            PolyCtx ctx{*vars, std::vector<int32_t>(vars->size(), 1), Fp(32003), MonomialOrder::grevlex()};
            try {
                poly_parse(ctx, text);
            } catch (const PolyParseError& e) {
                throw ScriptError(at, std::string("bad polynomial '") + text + "': " + e.what());
            }
        }
        return text;
    }

    std::vector<std::string> capture_polylist(const std::vector<std::string>* vars) {
        std::vector<std::string> out;
        if (is_punct(")")) return out;
        out.push_back(capture_poly(vars));
        while (is_punct(",")) {
            eat();
            out.push_back(capture_poly(vars));
        }
        return out;
    }

    ExprPtr parse_arg(ArgKind kind);

    ExprPtr parse_call(const std::string& head, Loc loc, const CheckSig& sig) {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Call;
        e->loc = loc;
        e->text = head;
        expect_punct("(");
        if (head == "ideal") {  // variadic polynomial list
            for (auto& s : capture_polylist(nullptr)) {
                auto a = std::make_shared<Expr>();
                a->kind = Expr::Kind::PolyLit;
                a->text = s;
                e->args.push_back(std::move(a));
            }
        } else {
            for (size_t i = 0; i < sig.args.size(); ++i) {
                if (i >= sig.min_arity && is_punct(")")) break;
                if (i) expect_punct(",");
                else if (is_punct(")") && sig.args.empty()) break;
                e->args.push_back(parse_arg(sig.args[i]));
            }
            if (e->args.size() < sig.min_arity)
                throw ScriptError(cur().loc, "'" + head + "' expects at least " +
                                                 std::to_string(sig.min_arity) + " arguments");
        }
        expect_punct(")");
        return e;
    }

    ExprPtr parse_ideal_expr() {
        Loc loc = cur().loc;
        const Token& t = cur();
        if (t.kind != Token::Kind::Ident) throw ScriptError(loc, "expected an ideal");
        auto fn = ideal_fn_signatures().find(t.text);
        if (fn != ideal_fn_signatures().end() && peek().kind == Token::Kind::Punct && peek().text == "(") {
            std::string head = eat().text;
            return parse_call(head, loc, fn->second);
        }
        std::string name = eat().text;
        if (!ideal_ring.count(name)) throw ScriptError(loc, "'" + name + "' is not a declared ideal");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Name;
        e->loc = loc;
        e->text = name;
        return e;
    }

    ExprPtr parse_module_expr() {
        Loc loc = cur().loc;
        if (cur().kind != Token::Kind::Ident) throw ScriptError(loc, "expected a module");
        auto fn = module_fn_signatures().find(cur().text);
        if (fn != module_fn_signatures().end() && peek().kind == Token::Kind::Punct && peek().text == "(") {
            std::string head = eat().text;
            return parse_call(head, loc, fn->second);
        }
        std::string name = eat().text;
        if (is_punct("/")) {
            eat();
            std::string ideal = expect_ident().text;
            if (!rings.count(name)) throw ScriptError(loc, "'" + name + "' is not a declared ring");
            if (!ideal_ring.count(ideal)) throw ScriptError(loc, "'" + ideal + "' is not a declared ideal");
            if (ideal_ring.at(ideal) != name)
                throw ScriptError(loc, "ideal '" + ideal + "' does not live in ring '" + name + "'");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Quot;
            e->loc = loc;
            e->quot_ring = name;
            e->quot_ideal = ideal;
            return e;
        }
        if (!module_ring.count(name)) throw ScriptError(loc, "'" + name + "' is not a declared module");
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Name;
        e->loc = loc;
        e->text = name;
        return e;
    }

    ExprPtr parse_expect_expr() {
        Loc loc = cur().loc;
        if (cur().kind == Token::Kind::Int) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::IntLit;
            e->loc = loc;
            e->ival = expect_int();
            return e;
        }
        if (is_ident("true") || is_ident("false")) {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::BoolLit;
            e->loc = loc;
            e->bval = eat().text == "true";
            return e;
        }
        if (is_ident("inf")) {
            eat();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::InfLit;
            e->loc = loc;
            return e;
        }
        return parse_ideal_expr();
    }

    CheckStmt parse_check() {
        Loc loc = cur().loc;
        std::string head = expect_ident().text;
        auto sig = check_signatures().find(head);
        if (sig == check_signatures().end())
            throw ScriptError(loc, "unknown check '" + head + "'");
        CheckStmt st;
        st.loc = loc;
        st.call = parse_call(head, loc, sig->second);
        if (is_punct("==")) {
            eat();
            st.expect = parse_expect_expr();
        }
        return st;
    }

    void parse_ring_decl() {
        Loc loc = eat().loc;  // 'ring'
        RingDecl d;
        d.loc = loc;
        d.name = expect_ident().text;
        declare(d.name, loc);
        expect_punct("=");
        if (!is_ident("poly")) throw ScriptError(cur().loc, "expected 'poly'");
        eat();
        expect_punct("(");
        if (!is_ident("vars")) throw ScriptError(cur().loc, "expected 'vars'");
        eat();
        d.vars.push_back(expect_ident().text);
        while (is_punct(",")) {
            eat();
            d.vars.push_back(expect_ident().text);
        }
        while (is_punct(";")) {
            eat();
            if (is_ident("degrees")) {
                eat();
                d.degrees.push_back(static_cast<int32_t>(expect_int()));
                while (is_punct(",")) {
                    eat();
                    d.degrees.push_back(static_cast<int32_t>(expect_int()));
                }
                if (d.degrees.size() != d.vars.size())
                    throw ScriptError(loc, "degree list does not match the variable list");
            } else if (is_ident("p")) {
                eat();
                expect_punct("=");
                d.prime = static_cast<uint32_t>(expect_int());
            } else {
                throw ScriptError(cur().loc, "expected 'degrees' or 'p'");
            }
        }
        expect_punct(")");
        if (is_punct("/")) {
            eat();
            if (!is_ident("ideal")) throw ScriptError(cur().loc, "expected 'ideal'");
            eat();
            expect_punct("(");
            d.quotient_polys = capture_polylist(&d.vars);
            expect_punct(")");
        }
        expect_punct(";");
        rings[d.name] = d;
        active_ring = d.name;
        out.stmts.push_back(d);
    }

    void parse_ideal_decl() {
        Loc loc = eat().loc;  // 'ideal'
        IdealDecl d;
        d.loc = loc;
        d.name = expect_ident().text;
        declare(d.name, loc);
        if (active_ring.empty()) throw ScriptError(loc, "no ring has been declared yet");
        d.ring = active_ring;
        expect_punct("=");
        expect_punct("(");
        d.polys = capture_polylist(&rings.at(d.ring).vars);
        expect_punct(")");
        expect_punct(";");
        ideal_ring[d.name] = d.ring;
        out.stmts.push_back(d);
    }

    void parse_module_decl() {
        Loc loc = eat().loc;  // 'module'
        ModuleDecl d;
        d.loc = loc;
        d.name = expect_ident().text;
        declare(d.name, loc);
        if (active_ring.empty()) throw ScriptError(loc, "no ring has been declared yet");
        d.ring = active_ring;
        expect_punct("=");
        if (is_ident("coker")) {
            eat();
            d.kind = ModuleDecl::Kind::Coker;
            expect_punct("[");
            const auto& vars = rings.at(d.ring).vars;
            while (true) {
                expect_punct("[");
                std::vector<std::string> row = capture_polylist(&vars);
                expect_punct("]");
                d.rows.push_back(std::move(row));
                if (is_punct(",")) {
                    eat();
                    continue;
                }
                break;
            }
            expect_punct("]");
            if (is_ident("twists")) {
                eat();
                expect_punct("[");
                while (true) {
                    bool neg = false;
                    if (is_punct("-")) {
                        eat();
                        neg = true;
                    }
                    int32_t v = static_cast<int32_t>(expect_int());
                    d.twists.push_back(neg ? -v : v);
                    if (is_punct(",")) {
                        eat();
                        continue;
                    }
                    break;
                }
                expect_punct("]");
                if (d.twists.size() != d.rows.size())
                    throw ScriptError(loc, "twist list does not match the row count");
            }
        } else if (is_ident("quotient") || is_ident("ideal_as_module")) {
            d.kind = cur().text == "quotient" ? ModuleDecl::Kind::Quotient : ModuleDecl::Kind::IdealAsModule;
            eat();
            Loc aloc = cur().loc;
            d.arg = expect_ident().text;
            if (!ideal_ring.count(d.arg)) throw ScriptError(aloc, "'" + d.arg + "' is not a declared ideal");
            d.ring = ideal_ring.at(d.arg);
        } else {
            throw ScriptError(cur().loc, "expected 'coker', 'quotient' or 'ideal_as_module'");
        }
        expect_punct(";");
        module_ring[d.name] = d.ring;
        out.stmts.push_back(d);
    }

    void parse_set() {
        Loc loc = eat().loc;  // 'set'
        SetStmt s;
        s.loc = loc;
        s.key = expect_ident().text;
        if (cur().kind == Token::Kind::Int || cur().kind == Token::Kind::Ident)
            s.value = eat().text;
        else
            throw ScriptError(cur().loc, "expected a value");
        expect_punct(";");
        out.stmts.push_back(s);
    }

    void parse_par() {
        Loc loc = eat().loc;  // 'par'
        ParBlock b;
        b.loc = loc;
        expect_punct("{");
        while (!is_punct("}")) {
            CheckStmt c = parse_check();
            expect_punct(";");
            b.checks.push_back(std::move(c));
        }
        expect_punct("}");
        out.stmts.push_back(std::move(b));
    }

    Script run() {
        while (cur().kind != Token::Kind::End) {
            if (is_ident("ring")) parse_ring_decl();
            else if (is_ident("ideal") && peek().kind == Token::Kind::Ident && peek(2).text == "=")
                parse_ideal_decl();
            else if (is_ident("module")) parse_module_decl();
            else if (is_ident("set")) parse_set();
            else if (is_ident("par")) parse_par();
            else {
                CheckStmt c = parse_check();
                expect_punct(";");
                out.stmts.push_back(std::move(c));
            }
        }
        return std::move(out);
    }
};

ExprPtr Parser::parse_arg(ArgKind kind) {
    Loc loc = cur().loc;
    switch (kind) {
        case ArgKind::Int: {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::IntLit;
            e->loc = loc;
            e->ival = expect_int();
            return e;
        }
        case ArgKind::Word: {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::WordLit;
            e->loc = loc;
            e->text = expect_ident().text;
            return e;
        }
        case ArgKind::Poly: {
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::PolyLit;
            e->loc = loc;
            e->text = capture_poly(nullptr);
            return e;
        }
        case ArgKind::Ideal: return parse_ideal_expr();
        case ArgKind::Module: return parse_module_expr();
    }
    throw ScriptError(loc, "internal: unknown argument kind");
}

}  // namespace

Script parse_script(const std::string& text) {
    Lexer lx(text);
    Parser ps;
    ps.toks = std::move(lx.toks);
    return ps.run();
}

// ---- printer ----

namespace {

void print_expr(const Expr& e, std::ostream& os) {
    switch (e.kind) {
        case Expr::Kind::IntLit: os << e.ival; break;
        case Expr::Kind::BoolLit: os << (e.bval ? "true" : "false"); break;
        case Expr::Kind::InfLit: os << "inf"; break;
        case Expr::Kind::WordLit:
        case Expr::Kind::PolyLit:
        case Expr::Kind::Name: os << e.text; break;
        case Expr::Kind::Quot: os << e.quot_ring << "/" << e.quot_ideal; break;
        case Expr::Kind::Call:
            os << e.text << "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) os << ", ";
                print_expr(*e.args[i], os);
            }
            os << ")";
            break;
    }
}

void print_check(const CheckStmt& c, std::ostream& os) {
    print_expr(*c.call, os);
    if (c.expect) {
        os << " == ";
        print_expr(*c.expect, os);
    }
    os << ";";
}

}  // namespace

std::string print_script(const Script& s) {
    std::ostringstream os;
    for (const auto& st : s.stmts) {
        if (auto* r = std::get_if<RingDecl>(&st)) {
            os << "ring " << r->name << " = poly(vars ";
            for (size_t i = 0; i < r->vars.size(); ++i) {
                if (i) os << ", ";
                os << r->vars[i];
            }
            if (!r->degrees.empty()) {
                os << "; degrees ";
                for (size_t i = 0; i < r->degrees.size(); ++i) {
                    if (i) os << ", ";
                    os << r->degrees[i];
                }
            }
            if (r->prime) os << "; p = " << *r->prime;
            os << ")";
            if (!r->quotient_polys.empty()) {
                os << " / ideal(";
                for (size_t i = 0; i < r->quotient_polys.size(); ++i) {
                    if (i) os << ", ";
                    os << r->quotient_polys[i];
                }
                os << ")";
            }
            os << ";\n";
        } else if (auto* d = std::get_if<IdealDecl>(&st)) {
            os << "ideal " << d->name << " = (";
            for (size_t i = 0; i < d->polys.size(); ++i) {
                if (i) os << ", ";
                os << d->polys[i];
            }
            os << ");\n";
        } else if (auto* m = std::get_if<ModuleDecl>(&st)) {
            os << "module " << m->name << " = ";
            if (m->kind == ModuleDecl::Kind::Coker) {
                os << "coker [";
                for (size_t r = 0; r < m->rows.size(); ++r) {
                    if (r) os << ", ";
                    os << "[";
                    for (size_t c = 0; c < m->rows[r].size(); ++c) {
                        if (c) os << ", ";
                        os << m->rows[r][c];
                    }
                    os << "]";
                }
                os << "]";
                if (!m->twists.empty()) {
                    os << " twists [";
                    for (size_t i = 0; i < m->twists.size(); ++i) {
                        if (i) os << ", ";
                        os << m->twists[i];
                    }
                    os << "]";
                }
            } else if (m->kind == ModuleDecl::Kind::Quotient) {
                os << "quotient " << m->arg;
            } else {
                os << "ideal_as_module " << m->arg;
            }
            os << ";\n";
        } else if (auto* o = std::get_if<SetStmt>(&st)) {
            os << "set " << o->key << " " << o->value << ";\n";
        } else if (auto* c = std::get_if<CheckStmt>(&st)) {
            print_check(*c, os);
            os << "\n";
        } else if (auto* pb = std::get_if<ParBlock>(&st)) {
            os << "par {\n";
            for (const auto& c : pb->checks) {
                os << "  ";
                print_check(c, os);
                os << "\n";
            }
            os << "}\n";
        }
    }
    return os.str();
}

}  // namespace lk::dsl
