#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace geo {

enum class ErrKind {
    CoincidentPoints,
    ParallelLines,
    DegenerateRay,
    CollinearPoints,
    ConcentricCircles,
    CollinearCenters,
    PointsNotOnCircle,
    AntipodalAmbiguity,
    EqualRadiiExternalAtInfinity,
    PointInsideCircle,
    DegenerateTriangle,
    EquilateralDegenerate,
    PointOnSideLine,
    PointOnCircumcircle,
    ConjugateAtInfinity,
    PointNotOnCircumcircle,
    RootNotFound,
    DegeneratePointSet,
    DegenerateFamily,
    InvalidBranch,
    FocusOnDirectrix,
    IdenticalConics,
    UnstablePencil,
    DegenerateConic,
    ParabolicConic,
    AtInfinity,
    DegenerateDualPencil,
    NonRealMember,
    SharedFocusViolated,
    NoRealIntersection,
    NoSolution,
    IllConditioned,
    NoTangentCircle,
    ConcentricDegenerate,
    DegenerateQuadrilateral,
    CircumcentersNotConcyclic,
    NotConcyclic,
    NonConvexOrder,
    SamplerExhausted,
    NoSignChange,
    NoIntersection,
    ArityError,
    EmptySelection,
};

const char* err_name(ErrKind k);

// Construction failure. Carries an optional direction for the
// at-infinity cases so callers can branch on it.
class GeomError : public std::runtime_error {
public:
    GeomError(ErrKind kind, const std::string& what_arg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what_arg), kind_(kind) {}
    GeomError(ErrKind kind, const std::string& what_arg, double dx, double dy)
        : GeomError(kind, what_arg) {
        has_direction_ = true;
        direction_ = {dx, dy};
    }

    ErrKind kind() const { return kind_; }
    bool has_direction() const { return has_direction_; }
    std::array<double, 2> direction() const { return direction_; }

private:
    ErrKind kind_;
    bool has_direction_ = false;
    std::array<double, 2> direction_{0.0, 0.0};
};

inline const char* err_name(ErrKind k) {
    switch (k) {
        case ErrKind::CoincidentPoints: return "CoincidentPoints";
        case ErrKind::ParallelLines: return "ParallelLines";
        case ErrKind::DegenerateRay: return "DegenerateRay";
        case ErrKind::CollinearPoints: return "CollinearPoints";
        case ErrKind::ConcentricCircles: return "ConcentricCircles";
        case ErrKind::CollinearCenters: return "CollinearCenters";
        case ErrKind::PointsNotOnCircle: return "PointsNotOnCircle";
        case ErrKind::AntipodalAmbiguity: return "AntipodalAmbiguity";
        case ErrKind::EqualRadiiExternalAtInfinity: return "EqualRadiiExternalAtInfinity";
        case ErrKind::PointInsideCircle: return "PointInsideCircle";
        case ErrKind::DegenerateTriangle: return "DegenerateTriangle";
        case ErrKind::EquilateralDegenerate: return "EquilateralDegenerate";
        case ErrKind::PointOnSideLine: return "PointOnSideLine";
        case ErrKind::PointOnCircumcircle: return "PointOnCircumcircle";
        case ErrKind::ConjugateAtInfinity: return "ConjugateAtInfinity";
        case ErrKind::PointNotOnCircumcircle: return "PointNotOnCircumcircle";
        case ErrKind::RootNotFound: return "RootNotFound";
        case ErrKind::DegeneratePointSet: return "DegeneratePointSet";
        case ErrKind::DegenerateFamily: return "DegenerateFamily";
        case ErrKind::InvalidBranch: return "InvalidBranch";
        case ErrKind::FocusOnDirectrix: return "FocusOnDirectrix";
        case ErrKind::IdenticalConics: return "IdenticalConics";
        case ErrKind::UnstablePencil: return "UnstablePencil";
        case ErrKind::DegenerateConic: return "DegenerateConic";
        case ErrKind::ParabolicConic: return "ParabolicConic";
        case ErrKind::AtInfinity: return "AtInfinity";
        case ErrKind::DegenerateDualPencil: return "DegenerateDualPencil";
        case ErrKind::NonRealMember: return "NonRealMember";
        case ErrKind::SharedFocusViolated: return "SharedFocusViolated";
        case ErrKind::NoRealIntersection: return "NoRealIntersection";
        case ErrKind::NoSolution: return "NoSolution";
        case ErrKind::IllConditioned: return "IllConditioned";
        case ErrKind::NoTangentCircle: return "NoTangentCircle";
        case ErrKind::ConcentricDegenerate: return "ConcentricDegenerate";
        case ErrKind::DegenerateQuadrilateral: return "DegenerateQuadrilateral";
        case ErrKind::CircumcentersNotConcyclic: return "CircumcentersNotConcyclic";
        case ErrKind::NotConcyclic: return "NotConcyclic";
        case ErrKind::NonConvexOrder: return "NonConvexOrder";
        case ErrKind::SamplerExhausted: return "SamplerExhausted";
        case ErrKind::NoSignChange: return "NoSignChange";
        case ErrKind::NoIntersection: return "NoIntersection";
        case ErrKind::ArityError: return "ArityError";
        case ErrKind::EmptySelection: return "EmptySelection";
    }
    return "UnknownError";
}

}  // namespace geo
