#include <charconv>

#include "dsl/ast.hpp"

namespace geo::dsl {

namespace {

std::string fmt_num(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print_expr(const Expr& e, std::string& out) {
    switch (e.kind) {
        case Expr::Num:
            out += fmt_num(e.num);
            break;
        case Expr::Ref:
            out += e.name;
            break;
        case Expr::PointLit:
            out += "(";
            out += fmt_num(e.px);
            out += ", ";
            out += fmt_num(e.py);
            out += ")";
            break;
        case Expr::Call:
            out += e.name;
            out += "(";
            for (size_t i = 0; i < e.args.size(); ++i) {
                if (i) out += ", ";
                print_expr(e.args[i], out);
            }
            out += ")";
            break;
    }
}

}  // namespace

std::string print(const Script& s) {
    std::string out;
    for (const auto& st : s.stmts) {
        switch (st.kind) {
            case Stmt::Free: {
                out += "free ";
                const auto& d = st.free;
                switch (d.kind) {
                    case FreeDecl::Point:
                        out += "point " + d.names[0] + " in box(" + fmt_num(d.lo) + ", " +
                               fmt_num(d.hi) + ")";
                        break;
                    case FreeDecl::Scalar:
                        out += "scalar " + d.names[0] + " in (" + fmt_num(d.lo) + ", " +
                               fmt_num(d.hi) + ")";
                        break;
                    case FreeDecl::Triangle:
                        out += "triangle " + d.names[0] + " " + d.names[1] + " " + d.names[2];
                        if (d.min_angle != 10) out += " min_angle " + fmt_num(d.min_angle);
                        break;
                    case FreeDecl::CyclicQuad:
                    case FreeDecl::TangentialQuad:
                    case FreeDecl::BicentricQuad:
                        out += (d.kind == FreeDecl::CyclicQuad     ? "cyclic_quad "
                                : d.kind == FreeDecl::TangentialQuad ? "tangential_quad "
                                                                     : "bicentric_quad ");
                        out += d.names[0] + " " + d.names[1] + " " + d.names[2] + " " + d.names[3];
                        break;
                }
                break;
            }
            case Stmt::Let:
                out += st.let.name + " = ";
                print_expr(st.let.expr, out);
                break;
            case Stmt::Solve:
                out += "solve " + st.solve.name + " in (" + fmt_num(st.solve.lo) + ", " +
                       fmt_num(st.solve.hi) + ") st ";
                print_expr(st.solve.cond, out);
                out += " == 0";
                break;
            case Stmt::Assert:
                out += "assert ";
                print_expr(st.assertion.pred, out);
                if (!st.assertion.label.empty()) out += " \"" + st.assertion.label + "\"";
                break;
        }
        out += "\n";
    }
    return out;
}

}  // namespace geo::dsl
