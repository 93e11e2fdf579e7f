#include "dsl/ast.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace geo::dsl {

// One row per construction-language builtin. enum_mask marks argument
// positions that take bare keywords (senses, vertex tags, ...).
static const BuiltinSig kBuiltins[] = {
    // scalars
    {"dist", 2, 2, 0},
    {"ratio", 2, 2, 0},
    {"mul", 2, 2, 0},
    {"add", 2, 2, 0},
    {"sub", 2, 2, 0},
    {"side", 2, 2, 0},
    {"signed_power", 2, 2, 0},
    {"count", 1, 1, 0},
    {"radius_of", 1, 1, 0},
    // point / line / circle constructions
    {"line_through", 2, 2, 0},
    {"intersect_lines", 2, 2, 0},
    {"midpoint", 2, 2, 0},
    {"foot", 2, 2, 0},
    {"perpendicular", 2, 2, 0},
    {"parallel_line", 2, 2, 0},
    {"perp_bisector", 2, 2, 0},
    {"reflect_point", 2, 2, 0},
    {"reflect_line_line", 2, 2, 0},
    {"internal_bisector", 3, 3, 0},
    {"external_bisector", 3, 3, 0},
    {"circle_through", 3, 3, 0},
    {"circle_on_diameter", 2, 2, 0},
    {"circle_centered", 2, 2, 0},
    {"center_of", 1, 1, 0},
    {"antipode", 2, 2, 0},
    {"tangent_at", 2, 2, 0},
    {"tangency_point", 2, 2, 0},
    {"arc_midpoint_smaller", 3, 3, 0},
    {"arc_midpoint_opposite", 4, 4, 0},
    {"radical_axis", 2, 2, 0},
    {"radical_center", 3, 3, 0},
    {"homothety_center_external", 2, 2, 0},
    {"homothety_center_internal", 2, 2, 0},
    {"tangent_lines_from", 2, 2, 0},
    {"other_tangent_from", 3, 3, 0},
    {"common_tangents", 3, 3, 0b100},
    {"intersect_line_circle", 2, 2, 0},
    {"intersect_circles", 2, 2, 0},
    {"lc_near", 3, 3, 0},
    {"lc_other", 3, 3, 0},
    {"cc_near", 3, 3, 0},
    {"cc_other", 3, 3, 0},
    {"lerp", 3, 3, 0},
    {"rotate_about", 3, 3, 0},
    {"point_on_circle", 2, 2, 0},
    {"point_on_line", 3, 3, 0},
    {"line_at_angle", 2, 2, 0},
    // triangles
    {"triangle", 3, 3, 0},
    {"triangle_from_lines", 3, 3, 0},
    {"tri_a", 1, 1, 0},
    {"tri_b", 1, 1, 0},
    {"tri_c", 1, 1, 0},
    {"centroid", 1, 1, 0},
    {"circumcenter", 1, 1, 0},
    {"circumcircle", 1, 1, 0},
    {"orthocenter", 1, 1, 0},
    {"incenter", 1, 1, 0},
    {"incircle", 1, 1, 0},
    {"excenter", 2, 2, 0b10},
    {"excircle", 2, 2, 0b10},
    {"nine_point_center", 1, 1, 0},
    {"nine_point_circle", 1, 1, 0},
    {"medial", 1, 1, 0},
    {"orthic", 1, 1, 0},
    {"cevian_triangle", 2, 2, 0},
    {"pedal_triangle", 2, 2, 0},
    {"circumcevian_triangle", 2, 2, 0},
    {"symmedian_point", 1, 1, 0},
    {"spieker_center", 1, 1, 0},
    {"isogonal_conjugate", 2, 2, 0},
    {"isotomic_conjugate", 2, 2, 0},
    {"fermat_point", 2, 2, 0b10},
    {"feuerbach_point", 1, 1, 0},
    {"simson_line", 2, 2, 0},
    {"morley_triangle", 2, 2, 0b10},
    {"neuberg_point", 2, 2, 0},
    {"mixtilinear_circle", 3, 3, 0b110},
    {"mixtilinear_touch", 3, 3, 0b110},
    {"mixtilinear_side_touch", 4, 4, 0b1110},
    // tangency solver forms
    {"tangent_circle_lll", 6, 6, 0},
    {"tangent_circles_lll", 3, 3, 0},
    {"tangent_circle_llc", 7, 7, 0b100000},
    {"tangent_circles_llc", 6, 6, 0b100000},
    {"tangent_circles_llp", 5, 5, 0},
    {"tangent_circle_ppc", 5, 5, 0b100},
    {"tangent_circles_ppc", 4, 4, 0b100},
    {"tangent_circles_ccc", 6, 6, 0b101010},
    {"tangent_circles_ccc_any", 3, 3, 0},
    {"circle_tangent_at_through", 3, 3, 0},
    {"section9_line", 4, 4, 0},
    // complete quadrilaterals
    {"miquel_point", 4, 4, 0},
    {"miquel_mid", 4, 4, 0},
    {"gauss_line", 4, 4, 0},
    {"kantor_hervey", 4, 4, 0},
    {"kh_mid", 4, 4, 0},
    // conics
    {"conic_through5", 5, 5, 0},
    {"rectangular_hyperbola_through4", 4, 4, 0},
    {"conic_from_foci_sum", 3, 3, 0},
    {"conic_from_foci_diff", 3, 3, 0},
    {"parabola_from_focus_directrix", 2, 2, 0},
    {"intersect_conic_line", 2, 2, 0},
    {"conic_line_near", 3, 3, 0},
    {"conic_line_other", 3, 3, 0},
    {"intersect_conics", 2, 2, 0},
    {"pole", 2, 2, 0},
    {"polar", 2, 2, 0},
    {"conic_focus_near", 2, 2, 0},
    {"conic_focus_far", 2, 2, 0},
    {"inscribed_conic", 5, 5, 0},
    {"focal_line", 3, 3, 0},
    // list selection
    {"nth", 2, 2, 0},
    {"nearest", 2, 2, 0},
    {"farthest", 2, 2, 0},
    {"without", 2, 2, 0},
    {"without2", 3, 3, 0},
    {"concat", 2, 2, 0},
    {"smallest", 1, 1, 0},
    {"largest", 1, 1, 0},
    {"pick_through", 2, 2, 0},
    {"enclosing", 2, 2, 0},
    // predicates (residual-valued)
    {"collinear", 3, -1, 0},
    {"concurrent", 3, -1, 0},
    {"concyclic", 4, -1, 0},
    {"on", 2, 2, 0},
    {"parallel", 2, 2, 0},
    {"perpendicular_lines", 2, 2, 0},
    {"tangent_circles", 3, 3, 0b100},
    {"tangent_line_circle", 2, 2, 0},
    {"tangent_conic_line", 2, 2, 0},
    {"coaxial", 3, 3, 0},
    {"perspective", 2, 2, 0},
    {"coincide", 2, 2, 0},
    {"same_line", 2, 2, 0},
    {"equal", 2, 2, 0},
    {"equilateral", 3, 3, 0},
    {"circles_concurrent", 3, -1, 0},
    {"common_radical_center", 4, 4, 0},
    {"four_common_points", 3, 3, 0},
    {"second_common_on", 4, 4, 0},
    {"some_tangent", 3, 3, 0b100},
    {"meets_some", 2, 2, 0},
    {"some_parallel", 2, 2, 0},
};

static const char* kEnumWords[] = {
    "internal", "external", "any",     "first", "second",  "at_a",  "at_b",
    "at_c",     "in_kind",  "ex_kind", "side1", "side2",   "int_sel",
    "ext_a",    "ext_b",    "ext_c",   "ext_all",
};

static const char* kReserved[] = {
    "free", "point", "scalar", "cyclic_quad", "tangential_quad",
    "bicentric_quad", "in", "box", "st", "solve", "assert", "min_angle",
};

const BuiltinSig* find_builtin(const std::string& name) {
    for (const auto& b : kBuiltins)
        if (name == b.name) return &b;
    return nullptr;
}

bool is_enum_word(const std::string& name) {
    for (const char* w : kEnumWords)
        if (name == w) return true;
    return false;
}

bool is_reserved_word(const std::string& name) {
    for (const char* w : kReserved)
        if (name == w) return true;
    return is_enum_word(name);
}

static bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Num: return a.num == b.num;
        case Expr::Ref: return a.name == b.name;
        case Expr::PointLit: return a.px == b.px && a.py == b.py;
        case Expr::Call:
            if (a.name != b.name || a.args.size() != b.args.size()) return false;
            for (size_t i = 0; i < a.args.size(); ++i)
                if (!expr_equal(a.args[i], b.args[i])) return false;
            return true;
    }
    return false;
}

bool structurally_equal(const Script& a, const Script& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (size_t i = 0; i < a.stmts.size(); ++i) {
        const Stmt& x = a.stmts[i];
        const Stmt& y = b.stmts[i];
        if (x.kind != y.kind) return false;
        switch (x.kind) {
            case Stmt::Free:
                if (x.free.kind != y.free.kind || x.free.names != y.free.names ||
                    x.free.lo != y.free.lo || x.free.hi != y.free.hi ||
                    x.free.min_angle != y.free.min_angle)
                    return false;
                break;
            case Stmt::Let:
                if (x.let.name != y.let.name || !expr_equal(x.let.expr, y.let.expr)) return false;
                break;
            case Stmt::Solve:
                if (x.solve.name != y.solve.name || x.solve.lo != y.solve.lo ||
                    x.solve.hi != y.solve.hi || !expr_equal(x.solve.cond, y.solve.cond))
                    return false;
                break;
            case Stmt::Assert:
                if (x.assertion.label != y.assertion.label ||
                    !expr_equal(x.assertion.pred, y.assertion.pred))
                    return false;
                break;
        }
    }
    return true;
}

}  // namespace geo::dsl
