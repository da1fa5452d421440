#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lk/ring.hpp"

// The .lk script language: declarations of rings, ideals and modules plus
// check commands. parse_script resolves names eagerly and reports every
// lexical, syntactic and name-resolution error with line and column;
// execution lives in run.hpp.
namespace lk::dsl {

struct Loc {
    int line = 0, col = 0;
};

struct ScriptError : std::runtime_error {
    Loc loc;
    ScriptError(Loc l, const std::string& msg)
        : std::runtime_error(std::to_string(l.line) + ":" + std::to_string(l.col) + ": " + msg), loc(l) {}
};

// argument kinds of the check vocabulary
enum class ArgKind { Int, Word, Poly, Ideal, Module };

struct Expr {
    enum class Kind {
        IntLit,    // 3
        BoolLit,   // true / false
        InfLit,    // inf
        WordLit,   // pd / gdim
        PolyLit,   // x^2*y + 3   (raw canonical text)
        Name,      // declared ideal or module
        Quot,      // R/I
        Call,      // f(args)
    } kind;
    Loc loc;
    long long ival = 0;
    bool bval = false;
    std::string text;                          // word, poly text, or name
    std::string quot_ring, quot_ideal;         // Quot
    std::vector<std::shared_ptr<Expr>> args;   // Call (head in text)

    bool equals(const Expr& o) const;
};
using ExprPtr = std::shared_ptr<Expr>;

struct RingDecl {
    Loc loc;
    std::string name;
    std::vector<std::string> vars;
    std::vector<int32_t> degrees;  // empty = all ones
    std::optional<uint32_t> prime;
    std::vector<std::string> quotient_polys;  // canonical text
};

struct IdealDecl {
    Loc loc;
    std::string name;
    std::string ring;  // resolved binding (active ring at declaration)
    std::vector<std::string> polys;
};

struct ModuleDecl {
    Loc loc;
    std::string name;
    std::string ring;
    enum class Kind { Coker, Quotient, IdealAsModule } kind = Kind::Coker;
    std::vector<std::vector<std::string>> rows;  // Coker: row-major polynomial strings
    std::vector<int32_t> twists;                 // Coker: optional generator degrees
    std::string arg;                             // Quotient / IdealAsModule: ideal name
};

struct SetStmt {
    Loc loc;
    std::string key, value;
};

struct CheckStmt {
    Loc loc;
    ExprPtr call;
    ExprPtr expect;  // null when no expectation
};

struct ParBlock {
    Loc loc;
    std::vector<CheckStmt> checks;
};

using Stmt = std::variant<RingDecl, IdealDecl, ModuleDecl, SetStmt, CheckStmt, ParBlock>;

struct Script {
    std::vector<Stmt> stmts;
    bool equals(const Script& o) const;
};

Script parse_script(const std::string& text);
std::string print_script(const Script& s);

// signature of a check command; max_arity < 0 means trailing args optional
struct CheckSig {
    std::vector<ArgKind> args;
    size_t min_arity;
};
const std::map<std::string, CheckSig>& check_signatures();
const std::map<std::string, CheckSig>& ideal_fn_signatures();
const std::map<std::string, CheckSig>& module_fn_signatures();

}  // namespace lk::dsl
