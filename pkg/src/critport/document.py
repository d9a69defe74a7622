"""Portrait documents: the JSON files the command line reads.

A document looks like::

    {
      "degree": 3,
      "fatou": [["1/4", "7/12"], ["3/4", "1/12"]],
      "julia": [],
      "gamma": ["13/36", "31/36"],
      "render": {"size": 480, "labels": true}
    }

``degree``, ``gamma`` and ``render`` are optional.  :func:`serialize_document`
writes exactly this layout, so a document in that layout survives
parse and serialize byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .angles import Angle, InvalidInput, parse_angle
from .portrait import CriticalPortrait, portrait_new

FIELDS = ("degree", "fatou", "julia", "gamma", "render")


class DocumentError(InvalidInput):
    """A document that cannot be parsed; the message names the line and field."""


@dataclass(frozen=True)
class RenderOptions:
    size: int = 480
    labels: bool = True


@dataclass(frozen=True)
class PortraitDocument:
    fatou: tuple[tuple[str, ...], ...]
    julia: tuple[tuple[str, ...], ...] = ()
    gamma: tuple[str, ...] | None = None
    degree: int | None = None
    render: RenderOptions | None = None

    def fatou_angles(self) -> list[list[Angle]]:
        return [[parse_angle(a) for a in s] for s in self.fatou]

    def julia_angles(self) -> list[list[Angle]]:
        return [[parse_angle(a) for a in s] for s in self.julia]

    def gamma_angles(self) -> frozenset[Angle] | None:
        if self.gamma is None:
            return None
        return frozenset(parse_angle(a) for a in self.gamma)

    def portrait(self) -> CriticalPortrait:
        """Validated portrait; raises a portrait error, including for a wrong ``degree``."""
        p = portrait_new(self.fatou_angles(), self.julia_angles())
        if self.degree is not None and self.degree != p.degree:
            raise InvalidInput(f"declared degree {self.degree} but the sets give {p.degree}")
        return p

    @property
    def render_options(self) -> RenderOptions:
        return self.render or RenderOptions()


def _line_of(text: str, needle: str) -> int:
    pos = text.find(needle)
    return text.count("\n", 0, pos) + 1 if pos >= 0 else 1


def _angle_list(value, name: str, text: str) -> tuple[str, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"line {_line_of(text, json.dumps(name))}: field {name}: expected a list")
    for a in value:
        if not isinstance(a, str):
            raise DocumentError(
                f"line {_line_of(text, json.dumps(a))}: field {name}: "
                f"angle {a!r} must be a \"p/q\" string"
            )
        try:
            parse_angle(a)
        except InvalidInput as exc:
            raise DocumentError(f"line {_line_of(text, json.dumps(a))}: field {name}: {exc}") from None
    return tuple(value)


def _family(value, name: str, text: str) -> tuple[tuple[str, ...], ...]:
    if not isinstance(value, list):
        raise DocumentError(f"line {_line_of(text, json.dumps(name))}: field {name}: expected a list of lists")
    return tuple(_angle_list(s, f"{name}[{i}]", text) for i, s in enumerate(value))


def parse_document(text: str) -> PortraitDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise DocumentError("line 1: a document is a JSON object")
    unknown = sorted(set(raw) - set(FIELDS))
    if unknown:
        raise DocumentError(
            f"line {_line_of(text, json.dumps(unknown[0]))}: unknown field {unknown[0]}"
        )
    for name in ("fatou", "julia"):
        if name not in raw:
            raise DocumentError(f"line 1: missing field {name}")

    degree = raw.get("degree")
    if degree is not None and (isinstance(degree, bool) or not isinstance(degree, int)):
        line = _line_of(text, '"degree"')
        raise DocumentError(f"line {line}: field degree: expected an integer")

    gamma = raw.get("gamma")
    if gamma is not None:
        gamma = _angle_list(gamma, "gamma", text)

    render = None
    if "render" in raw:
        opts = raw["render"]
        line = _line_of(text, '"render"')
        if not isinstance(opts, dict) or set(opts) - {"size", "labels"}:
            raise DocumentError(f"line {line}: field render: expected {{\"size\": int, \"labels\": bool}}")
        size = opts.get("size", RenderOptions.size)
        labels = opts.get("labels", RenderOptions.labels)
        if isinstance(size, bool) or not isinstance(size, int) or size <= 0:
            raise DocumentError(f"line {line}: field render.size: expected a positive integer")
        if not isinstance(labels, bool):
            raise DocumentError(f"line {line}: field render.labels: expected true or false")
        render = RenderOptions(size, labels)

    return PortraitDocument(
        fatou=_family(raw["fatou"], "fatou", text),
        julia=_family(raw["julia"], "julia", text),
        gamma=gamma,
        degree=degree,
        render=render,
    )


def load_document(path: str | Path) -> PortraitDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def serialize_document(doc: PortraitDocument) -> str:
    def family(sets):
        return json.dumps([list(s) for s in sets])

    lines = []
    if doc.degree is not None:
        lines.append(f'  "degree": {doc.degree}')
    lines.append(f'  "fatou": {family(doc.fatou)}')
    lines.append(f'  "julia": {family(doc.julia)}')
    if doc.gamma is not None:
        lines.append(f'  "gamma": {json.dumps(list(doc.gamma))}')
    if doc.render is not None:
        opts = {"size": doc.render.size, "labels": doc.render.labels}
        lines.append(f'  "render": {json.dumps(opts)}')
    return "{\n" + ",\n".join(lines) + "\n}\n"


def document_from_portrait(
    fatou, julia=(), gamma=None, degree: int | None = None, render: RenderOptions | None = None
) -> PortraitDocument:
    """Build a document from angle sets, keeping each set in the given order."""
    def fmt(s):
        return tuple(str(Angle(a)) for a in s)

    return PortraitDocument(
        fatou=tuple(fmt(s) for s in fatou),
        julia=tuple(fmt(s) for s in julia),
        gamma=None if gamma is None else fmt(sorted(Angle(g) for g in gamma)),
        degree=degree,
        render=render,
    )
