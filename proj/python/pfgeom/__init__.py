"""Pfaffian constraint geometry.

Thin wrapper over the compiled core: covector fields and their integrability
classes, induced curvature of the constraint hyperplane field, constrained
geodesic integration, and the charged-particle example where the constrained
geodesics of the potential's bundle form reproduce the Lorentz force.
"""

from _pfgeom import (  # noqa: F401
    AdaptedFrame,
    AltTensor,
    CovectorFieldSpec,
    CurvatureReport,
    Error,
    GridSpec,
    IntegrabilityReport,
    IntegratorSettings,
    KinematicsSample,
    MetricSpec,
    NormalityReport,
    PointGeometry,
    Polynomial,
    RegionReport,
    Trajectory,
    adapted_frame,
    classify_region,
    constrained_geodesic_rhs,
    curvature_report,
    curvature_report_at,
    differential_split,
    differential_split_raw,
    em,
    frobenius_three_form,
    integrability_class_at_point,
    integrate,
    kinematics_decompose,
    line_of_curvature_integrate,
    metric_dual_unit,
    asymptotic_directions,
    normal_curvature_of_direction,
    normal_curve_rhs,
    normality_check,
    omega_decompose,
    run_acceptance,
    second_fundamental_restricted,
    tangent_projectors,
    wedge_product,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
