"""pentalab: a computational projective-geometry laboratory.

Implements a one-parameter four-point construction and the polygon
iteration it generates, exact regularity certificates for pentagons over
the real quadratic field Q(sqrt5), and escape-time renders of the
iteration's behavior over the moduli space of pentagons.
"""

from .construction import (
    CrossAxisFrame,
    OrbitResult,
    cross_axis_frame,
    insert_vertex_pentagon,
    lambda_point,
    polygon_orbit,
    polygon_step,
    polygon_valid,
)
from .julia import (
    DEFAULT_WINDOW,
    JuliaConfig,
    PixelClass,
    RenderResult,
    RenderStats,
    classify_orbit,
    image_bytes,
    kernel_backend,
    render,
    stats_line,
    write_image,
)
from .moduli import (
    ALL_RELABELINGS,
    DIHEDRAL_RELABELINGS,
    STAR_RELABELINGS,
    ModuliPoint,
    PentagonClass,
    chordal_gap,
    classify,
    equivalent,
    moduli_coords,
    pentagon_from_moduli,
    reference_pentagons,
    relabel,
    residual_to_regular,
)
from .projective import (
    DegenerateConfiguration,
    HLine,
    HPoint,
    ProjMap,
    collinear,
    cross_ratio,
    dehomogenize,
    frame_map,
    general_position,
    join,
    meet,
    same_point,
    standard_basis,
    transfer_map,
)
from .scalars import (
    EXACT,
    FLOAT,
    INF,
    PHI,
    PSI,
    ExactField,
    FloatField,
    ProjParam,
    QSqrt5,
    field_by_name,
    format_exact,
    golden_constants,
    parse_exact,
    rational,
)
from .verify import VerifyReport, run_verification, same_vertex_sets

__version__ = "0.1.0"
