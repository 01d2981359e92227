"""Symmetric extensions of finite-dimensional operators.

Operators are `Operator(domain_frame, action)` with an orthonormal domain
frame F (d x k) and images `action` (d x k). Parameters are n x n matrices in
the defect frames of A at z.
"""

from ._symext import (
    Error,
    NotAdmissible,
    NotAnExtension,
    Operator,
    PreconditionViolation,
    RealPoint,
    SpecInfeasible,
    SpectrumHit,
    build_invertible_selfadjoint,
    cayley,
    check_invertibility,
    compressed_resolvent,
    default_grid,
    defect_frames,
    defect_numbers,
    extend,
    gen_symmetric,
    i_admissibility,
    recover_parameter,
    shtraus_resolvent,
    truncated_shift,
    verify,
    worked_example,
)

__all__ = [
    "Error",
    "NotAdmissible",
    "NotAnExtension",
    "Operator",
    "PreconditionViolation",
    "RealPoint",
    "SpecInfeasible",
    "SpectrumHit",
    "build_invertible_selfadjoint",
    "cayley",
    "check_invertibility",
    "compressed_resolvent",
    "default_grid",
    "defect_frames",
    "defect_numbers",
    "extend",
    "gen_symmetric",
    "i_admissibility",
    "recover_parameter",
    "shtraus_resolvent",
    "truncated_shift",
    "verify",
    "worked_example",
]
