"""Frobenius numbers, genus and Apéry sets of triples, with closed forms for
consecutive 2-step star numbers ``a*n*(n-2) + 1``."""

from .core import (
    AperySet,
    RepCount,
    Triple,
    apery_set,
    count_representations,
    frobenius,
    genus,
    is_member,
    validate_triple,
)
from .frame import (
    AperyFrame,
    FramePosition,
    frame_apery_values,
    frobenius_from_frame,
    genus_from_frame,
    traverse,
    validate_frame,
)
from .star import (
    CaseTag,
    StarParams,
    case_tag,
    closed_frobenius,
    closed_genus,
    frame_parameters,
    is_exceptional,
    star_number,
    star_triple,
    table_frame,
)

__version__ = "0.1.0"
