"""Reference caps built from dependent-set templates over a fixed frame.

Every template lives in AG(7,2) over the frame a1..a8 embedded as
a1 -> 0 and ai -> unit vector e_{i-1} (bit i-2) for i = 2..8, so a
dependent point's mask is just the XOR of its listed generators and
stays human-auditable.  Template tables are data: each label maps to
the tuple of generator index lists of its dependents.
"""

from __future__ import annotations

from dataclasses import dataclass

from .capset import Cap
from .decomp import ExtendedType
from .errors import UnknownLabelError
from .gf2 import Point, PointSet

FRAME_MASKS: tuple[int, ...] = (0, 1, 2, 4, 8, 16, 32, 64)

# label -> dependent generator lists (1-based indices into a1..a8)
_TEMPLATE_DEPENDENTS: dict[str, tuple[tuple[int, ...], ...]] = {
    "INDEPENDENT8": (),
    "R5": ((1, 2, 3, 4, 5),),
    "R7": ((1, 2, 3, 4, 5, 6, 7),),
    "T10_75_4": ((1, 2, 3, 4, 5, 6, 7), (4, 5, 6, 7, 8)),
    "T10_55_2": ((1, 2, 3, 4, 5), (4, 5, 6, 7, 8)),
    "T10_55_3": ((1, 2, 3, 4, 5), (3, 4, 5, 6, 7)),
    "T11_755_443": ((1, 2, 3, 4, 5, 6, 7), (4, 5, 6, 7, 8), (1, 2, 6, 7, 8)),
    "T11_555_333": ((1, 2, 3, 4, 5), (3, 4, 5, 6, 7), (1, 3, 4, 6, 8)),
    "T11_555_332": ((1, 2, 3, 4, 5), (3, 4, 5, 6, 7), (1, 2, 3, 7, 8)),
    "T12_7555": (
        (1, 2, 3, 4, 5, 6, 7),
        (4, 5, 6, 7, 8),
        (1, 2, 6, 7, 8),
        (1, 3, 5, 7, 8),
    ),
    "T12_5555_233333": (
        (1, 2, 3, 4, 5),
        (1, 2, 3, 7, 8),
        (3, 4, 5, 6, 7),
        (2, 3, 4, 6, 8),
    ),
    "T12_5555_233332": (
        (1, 2, 3, 4, 5),
        (1, 2, 3, 7, 8),
        (3, 4, 5, 6, 7),
        (2, 4, 6, 7, 8),
    ),
}

_EXPECTED_TYPES: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "INDEPENDENT8": ((), ()),
    "R5": ((5,), ()),
    "R7": ((7,), ()),
    "T10_75_4": ((7, 5), (4,)),
    "T10_55_2": ((5, 5), (2,)),
    "T10_55_3": ((5, 5), (3,)),
    "T11_755_443": ((7, 5, 5), (4, 4, 3)),
    "T11_555_333": ((5, 5, 5), (3, 3, 3)),
    "T11_555_332": ((5, 5, 5), (3, 3, 2)),
    "T12_7555": ((7, 5, 5, 5), (4, 4, 4, 3, 3, 3)),
    "T12_5555_233333": ((5, 5, 5, 5), (2, 3, 3, 3, 3, 3)),
    "T12_5555_233332": ((5, 5, 5, 5), (2, 3, 3, 3, 3, 2)),
}


@dataclass(frozen=True)
class TemplateId:
    """A known template label and the size of the cap it produces."""

    label: str
    size: int


TEMPLATES: tuple[TemplateId, ...] = tuple(
    TemplateId(label, len(FRAME_MASKS) + len(deps))
    for label, deps in _TEMPLATE_DEPENDENTS.items()
)

LABELS: tuple[str, ...] = tuple(t.label for t in TEMPLATES)


def _generator_mask(indices: tuple[int, ...], frame: tuple[int, ...]) -> int:
    acc = 0
    for i in indices:
        acc ^= frame[i - 1]
    return acc


def _require_label(label: str) -> tuple[tuple[int, ...], ...]:
    try:
        return _TEMPLATE_DEPENDENTS[label]
    except KeyError:
        raise UnknownLabelError(f"unknown template label {label!r}") from None


def instantiate(label: str) -> Cap:
    """Concrete cap in AG(7,2) for the given template label."""
    deps = _require_label(label)
    masks = list(FRAME_MASKS) + [_generator_mask(d, FRAME_MASKS) for d in deps]
    return Cap(PointSet(7, masks))


def generating_basis(label: str) -> tuple[Point, ...]:
    """The embedded frame a1..a8, the basis the template is written against."""
    _require_label(label)
    return tuple(Point(m, 7) for m in FRAME_MASKS)


def expected_extended_type(label: str) -> ExtendedType:
    """Extended type the template's generating basis is supposed to have."""
    _require_label(label)
    sizes, pairs = _EXPECTED_TYPES[label]
    return ExtendedType(sizes, pairs)


HIGHERDIM_FRAME_MASKS: tuple[int, ...] = (0, 1, 2, 4, 8, 16, 32, 64, 128)

_HIGHERDIM_DEPENDENTS: tuple[tuple[tuple[int, ...], ...], ...] = (
    ((1, 2, 3, 4, 5), (1, 2, 3, 6, 7), (1, 2, 3, 8, 9)),
    ((1, 2, 3, 4, 5), (1, 2, 3, 6, 7), (1, 2, 4, 6, 8)),
)


def higherdim_pair() -> tuple[Cap, Cap]:
    """Two 12-point caps of dimension 8 with equal extended types that are
    nevertheless not affinely equivalent: in the first, every frame point
    occurs in some dependence; in the second, the last one never does."""
    caps = []
    for deps in _HIGHERDIM_DEPENDENTS:
        masks = list(HIGHERDIM_FRAME_MASKS) + [
            _generator_mask(d, HIGHERDIM_FRAME_MASKS) for d in deps
        ]
        caps.append(Cap(PointSet(8, masks)))
    return caps[0], caps[1]


def higherdim_generating_basis() -> tuple[Point, ...]:
    return tuple(Point(m, 8) for m in HIGHERDIM_FRAME_MASKS)
