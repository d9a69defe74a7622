"""Combinatorics of critical portraits for the maps z -> d*z mod 1.

Validation of portraits, symbolic itineraries, the marked partitions and
abstract web they induce, a Levy-cycle diagnostic, untwisting equations and
deterministic SVG output.
"""

from .angles import (
    Angle,
    Arc,
    ArcSet,
    InvalidInput,
    OrbitDecomposition,
    angle_new,
    ccw_distance,
    cyclically_ordered,
    format_angle,
    linked_pair,
    md,
    orbit,
    orbit_set,
    parse_angle,
    unlinked,
    weakly_unlinked_right,
)
from .document import (
    DocumentError,
    PortraitDocument,
    RenderOptions,
    load_document,
    parse_document,
    serialize_document,
)
from .portrait import (
    AddressSystem,
    CriticalPortrait,
    CriticalSet,
    DegreeError,
    DuplicateAngleError,
    Itinerary,
    Kind,
    LinkedSetsError,
    MapToPointError,
    MarkedPartition,
    PartKind,
    Piece,
    PortraitError,
    RightUnlinkedError,
    address_left,
    address_right,
    build_address_system,
    build_fstar,
    build_jstar,
    check_gamma,
    decode_itinerary,
    equiv_l,
    gen_special_arguments,
    inverse_branch,
    itinerary_left,
    itinerary_right,
    l_classes,
    marked_set,
    parse_family,
    portrait_new,
    preferred_consistent,
    pullback_arcs,
    sim_gamma,
    verify_partitions,
)
from .render import RenderSpec, render_svg
from .twist import TwistSystem, solve_cycle_twists, solve_external_twist, solve_preperiodic_twist
from .web import (
    EdgeType,
    InternalEdge,
    LevyReport,
    LevyWitness,
    ObstructionError,
    Vertex,
    Web,
    WebMap,
    WebMapError,
    WebRay,
    build_web,
    build_web_map,
    check_levy,
    classify_edges,
    lift_classes,
    pullback_report,
    serialize_web,
)

__version__ = "0.1.0"

__all__ = [
    "AddressSystem",
    "Angle",
    "Arc",
    "ArcSet",
    "CriticalPortrait",
    "CriticalSet",
    "DegreeError",
    "DocumentError",
    "DuplicateAngleError",
    "EdgeType",
    "InternalEdge",
    "InvalidInput",
    "Itinerary",
    "Kind",
    "LevyReport",
    "LevyWitness",
    "LinkedSetsError",
    "MapToPointError",
    "MarkedPartition",
    "ObstructionError",
    "OrbitDecomposition",
    "PartKind",
    "Piece",
    "PortraitDocument",
    "PortraitError",
    "RenderOptions",
    "RenderSpec",
    "RightUnlinkedError",
    "TwistSystem",
    "Vertex",
    "Web",
    "WebMap",
    "WebMapError",
    "WebRay",
    "address_left",
    "address_right",
    "angle_new",
    "build_address_system",
    "build_fstar",
    "build_jstar",
    "build_web",
    "build_web_map",
    "ccw_distance",
    "check_gamma",
    "check_levy",
    "classify_edges",
    "cyclically_ordered",
    "decode_itinerary",
    "equiv_l",
    "format_angle",
    "gen_special_arguments",
    "inverse_branch",
    "itinerary_left",
    "itinerary_right",
    "l_classes",
    "lift_classes",
    "linked_pair",
    "load_document",
    "marked_set",
    "md",
    "orbit",
    "orbit_set",
    "parse_angle",
    "parse_document",
    "parse_family",
    "portrait_new",
    "preferred_consistent",
    "pullback_arcs",
    "pullback_report",
    "render_svg",
    "serialize_document",
    "serialize_web",
    "sim_gamma",
    "solve_cycle_twists",
    "solve_external_twist",
    "solve_preperiodic_twist",
    "unlinked",
    "verify_partitions",
    "weakly_unlinked_right",
    "__version__",
]
