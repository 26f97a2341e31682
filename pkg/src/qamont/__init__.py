"""Exact-arithmetic invariants and quasi-alternating classification of
Montesinos links."""

from .classify import (
    FlypeWitness,
    FoliationWitness,
    Rule,
    RuleCollisionError,
    Status,
    Verdict,
    classify,
    foliation_search,
)
from .certificate import (
    Certificate,
    ChainStep,
    build_certificate,
    from_text,
    to_text,
    verify_certificate,
)
from .diagram import (
    OracleLimitError,
    PlanarDiagram,
    det_oracle,
    pd_text,
    standard_diagram,
    tangle_diagram,
)
from .montesinos import (
    CanonicalForm,
    Closure,
    DiagramClass,
    MontesinosLink,
    RationalReduction,
    canonical,
    determinant,
    diagram_class,
    epsilon,
    equivalent,
    flype,
    normalize_input,
    reduce,
    reflect,
    to_rational,
)
from .notation import (
    LinkExpression,
    ParseError,
    format_link,
    parse_link,
    pretzel_to_montesinos,
    print_link,
    to_link,
)
from .rational import (
    cf_eval,
    cf_expand,
    floor_frac,
    flype_transform,
    hat,
    normalize_fraction,
)

__version__ = "0.1.0"
