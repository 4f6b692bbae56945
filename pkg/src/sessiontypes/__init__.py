"""Session types with intersection and union types.

Finite processes talk over one channel.  Session types describe the
channel, and subtyping is inclusion of the sets of compatible clients,
decided on normal forms.  Global types project onto their two roles.
"""

from .errors import (
    DomainError,
    ExplorationLimit,
    LimitError,
    NoTransition,
    ParseError,
    ProjectionError,
    RoleError,
    SessionTypeError,
    Untypeable,
)
from .generation import enumerate_processes, enumerate_types
from .lts import (
    TransitionSet,
    continuation,
    may,
    may_converge,
    must,
    must_converge,
    step,
    weak_closure,
)
from .normalize import (
    BOTTOM_NF,
    END_NF,
    IU,
    OI,
    TOP_NF,
    NormalForm,
    Shape,
    dual_nf,
    embed,
    join,
    meet,
    normalize,
    viable,
)
from .orthogonality import (
    DEFAULT_STATE_CAP,
    RefinementVerdict,
    SystemState,
    orthogonal,
    refines_bounded,
    stuck_state,
    system_step,
)
from .project import project, project_nf
from .semantics import dual, member, member_type
from .subtype import equivalent, subtype, subtype_nf
from .syntax import (
    BOTTOM,
    DEADLOCK,
    END,
    GEND,
    SUCCESS,
    TICK,
    TOP,
    Action,
    Bottom,
    Deadlock,
    End,
    ExternalChoice,
    GChoice,
    GEnd,
    GlobalType,
    GMessage,
    InternalChoice,
    Intersection,
    Prefix,
    Process,
    SessionType,
    Success,
    Tick,
    Top,
    TypePrefix,
    Union,
    inp,
    out,
    parse_global,
    parse_process,
    parse_type,
    render_global,
    render_process,
    render_type,
)
from .typecheck import canonical_type, check, typeable

__version__ = "0.1.0"

__all__ = [
    "Action",
    "BOTTOM",
    "BOTTOM_NF",
    "Bottom",
    "DEADLOCK",
    "DEFAULT_STATE_CAP",
    "Deadlock",
    "DomainError",
    "END",
    "END_NF",
    "End",
    "ExplorationLimit",
    "ExternalChoice",
    "GChoice",
    "GEND",
    "GEnd",
    "GMessage",
    "GlobalType",
    "IU",
    "InternalChoice",
    "Intersection",
    "LimitError",
    "NoTransition",
    "NormalForm",
    "OI",
    "ParseError",
    "Prefix",
    "Process",
    "ProjectionError",
    "RefinementVerdict",
    "RoleError",
    "SUCCESS",
    "SessionType",
    "SessionTypeError",
    "Shape",
    "Success",
    "SystemState",
    "TICK",
    "TOP",
    "TOP_NF",
    "Tick",
    "Top",
    "TransitionSet",
    "TypePrefix",
    "Union",
    "Untypeable",
    "canonical_type",
    "check",
    "continuation",
    "dual",
    "dual_nf",
    "embed",
    "enumerate_processes",
    "enumerate_types",
    "equivalent",
    "inp",
    "join",
    "may",
    "may_converge",
    "meet",
    "member",
    "member_type",
    "must",
    "must_converge",
    "normalize",
    "orthogonal",
    "out",
    "parse_global",
    "parse_process",
    "parse_type",
    "project",
    "project_nf",
    "refines_bounded",
    "render_global",
    "render_process",
    "render_type",
    "step",
    "stuck_state",
    "subtype",
    "subtype_nf",
    "system_step",
    "typeable",
    "viable",
    "weak_closure",
]
