#pragma once

#include <string>
#include <vector>

namespace geo::dsl {

struct Expr {
    enum Kind { Call, Ref, Num, PointLit } kind = Num;
    std::string name;         // Call: builtin; Ref: binding or enum word
    double num = 0;           // Num
    double px = 0, py = 0;    // PointLit
    std::vector<Expr> args;   // Call
};

struct FreeDecl {
    enum Kind { Point, Scalar, Triangle, CyclicQuad, TangentialQuad, BicentricQuad } kind;
    std::vector<std::string> names;
    double lo = 0, hi = 0;        // point box / scalar interval
    double min_angle = 10;        // triangles
};

struct LetStmt {
    std::string name;
    Expr expr;
};

struct SolveStmt {
    std::string name;
    double lo = 0, hi = 1;
    Expr cond;
};

struct AssertStmt {
    Expr pred;            // always a Call on a predicate builtin
    std::string label;
};

struct Stmt {
    enum Kind { Free, Let, Solve, Assert } kind;
    FreeDecl free;
    LetStmt let;
    SolveStmt solve;
    AssertStmt assertion;
    int line = 0;
};

struct Script {
    std::vector<Stmt> stmts;
};

// parse failure with position and the expected-token hint
struct ParseError : std::runtime_error {
    int line, col;
    std::string expected;
    ParseError(int l, int c, const std::string& exp, const std::string& got)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": expected " + exp + ", got '" + got + "'"),
          line(l), col(c), expected(exp) {}
};

Script parse(const std::string& source);
std::string print(const Script& s);
bool structurally_equal(const Script& a, const Script& b);

// builtin signature table shared by the validator and the evaluator
struct BuiltinSig {
    const char* name;
    int min_arity;
    int max_arity;              // -1 = unbounded
    unsigned enum_mask;         // bit i set -> arg i is an enum word
};

const BuiltinSig* find_builtin(const std::string& name);
bool is_enum_word(const std::string& name);
bool is_reserved_word(const std::string& name);

}  // namespace geo::dsl
