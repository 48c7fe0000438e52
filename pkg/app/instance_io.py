"""
Instance files and domain specs.

Instance file layout (see INSTANCE_FORMAT_GUIDE.md):

    # comment
    kind = real-space
    [distribution]
    1,1 1/4
    2,4 3/4
    [labels]
    01

Points are written per domain kind: comma-separated rationals for
real-line / real-space, a bitstring for cube, an integer for poset /
abstract. Every domain point appears in [distribution] (weight 0 allowed);
[labels] is one 0/1 string over the points in file order and is optional.
"""
from fractions import Fraction
from typing import List, Optional, Tuple

from app.classes import moment_curve_embed, parse_spec_string
from app.core import (
    FiniteDistribution, FiniteDomain, Labelling, abstract_domain, full_cube_domain, real_line_domain,
    real_space_domain,
)
from app.hardness import general_position_set, random_cube_domain
from app.utils.config.config_constants import KIND_ABSTRACT, KIND_CUBE, KIND_POSET, VALID_DOMAIN_KINDS
from app.utils.error_handler import SpecParseError
from app.utils.logger_config import get_logger

logger = get_logger()

SECTION_DISTRIBUTION = "[distribution]"
SECTION_LABELS = "[labels]"


# ========== PUNTOS ==========

def format_point(point, kind: str) -> str:
    if kind == KIND_CUBE:
        return "".join(str(int(b)) for b in point)
    if kind in (KIND_POSET, KIND_ABSTRACT):
        return str(int(point))
    return ",".join(str(c) for c in point)


def parse_point(text: str, kind: str):
    text = text.strip()
    try:
        if kind == KIND_CUBE:
            if any(ch not in "01" for ch in text):
                raise ValueError(text)
            return tuple(int(ch) for ch in text)
        if kind in (KIND_POSET, KIND_ABSTRACT):
            return int(text)
        return tuple(Fraction(c) for c in text.split(","))
    except ValueError:
        raise SpecParseError(f"cannot read a {kind} point from {text!r}")


# ========== ARCHIVOS DE INSTANCIA ==========

def write_instance(path: str, D: FiniteDistribution, f: Optional[Labelling] = None,
                   header: Optional[List[str]] = None) -> None:
    """Write D (and f, when given) in the instance format."""
    kind = D.domain.kind
    lines = [f"# {h}" for h in (header or [])]
    lines.append(f"kind = {kind}")
    lines.append(SECTION_DISTRIBUTION)
    for p, w in zip(D.domain.points, D.weights):
        lines.append(f"{format_point(p, kind)} {w}")
    if f is not None:
        lines.append(SECTION_LABELS)
        lines.append(f.as_string())
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    logger.info(f"✅ Instancia escrita en {path} ({len(D.domain)} puntos)")


def read_instance(path: str) -> Tuple[FiniteDistribution, Optional[Labelling]]:
    """
    Read an instance file.

    Raises:
        SpecParseError: unknown kind, malformed rows, or weights that do not sum to 1
    """
    with open(path, "r", encoding="utf-8") as fh:
        rows = [ln.split("#", 1)[0].strip() for ln in fh]
    rows = [r for r in rows if r]
    kind = None
    section = None
    points, weights, label_text = [], [], ""
    for row in rows:
        lowered = row.lower()
        if lowered in (SECTION_DISTRIBUTION, SECTION_LABELS):
            section = lowered
            continue
        if section is None:
            key, sep, value = row.partition("=")
            if not sep or key.strip() != "kind":
                raise SpecParseError(f"{path}: expected `kind = ...` before any section, got {row!r}")
            kind = value.strip()
            if kind not in VALID_DOMAIN_KINDS:
                raise SpecParseError(f"{path}: unknown domain kind {kind!r}")
        elif section == SECTION_DISTRIBUTION:
            parts = row.split()
            if len(parts) != 2:
                raise SpecParseError(f"{path}: expected `point weight`, got {row!r}")
            points.append(parse_point(parts[0], kind))
            try:
                weights.append(Fraction(parts[1]))
            except ValueError:
                raise SpecParseError(f"{path}: bad weight {parts[1]!r}")
        else:
            label_text += row
    if kind is None or not points:
        raise SpecParseError(f"{path}: missing kind or empty [distribution]")
    try:
        domain = FiniteDomain(tuple(points), kind)
        D = FiniteDistribution(domain, tuple(weights))
        f = Labelling.from_string(domain, label_text) if label_text else None
    except ValueError as exc:
        raise SpecParseError(f"{path}: {exc}")
    return D, f


# ========== SPECS DE DOMINIO ==========

def _require(params, key, spec) -> int:
    if key not in params:
        raise SpecParseError(f"domain spec {spec!r} needs {key}=")
    try:
        return int(params[key])
    except ValueError:
        raise SpecParseError(f"domain spec {spec!r}: {key} must be an integer")


def parse_domain_spec(spec: str) -> FiniteDomain:
    """
    line:size=N             N colinear points 1..N on the real line
    moment:n=D,size=N       (x, x², …, x^D) for x = 1..N (general position)
    psi:n=D,size=N          ψ_D(x) for x = 1..N (even/odd moment-curve embedding)
    cube:n=D,size=N,seed=S  N distinct random points of {0,1}^D
    cube-full:n=D           all of {0,1}^D
    range:n=N               abstract points 0..N−1
    poset:n=N               poset elements 0..N−1
    @path                   the domain of an instance file
    """
    spec = spec.strip()
    if spec.startswith("@"):
        return read_instance(spec[1:])[0].domain
    kind, params = parse_spec_string(spec)
    if kind == "line":
        return real_line_domain(range(1, _require(params, "size", spec) + 1))
    if kind == "moment":
        return general_position_set(_require(params, "n", spec), _require(params, "size", spec))
    if kind == "psi":
        n = _require(params, "n", spec)
        return real_space_domain(moment_curve_embed(x, n) for x in range(1, _require(params, "size", spec) + 1))
    if kind == "cube":
        return random_cube_domain(_require(params, "n", spec), _require(params, "size", spec),
                                  int(params.get("seed", 0)))
    if kind == "cube-full":
        return full_cube_domain(_require(params, "n", spec))
    if kind == "range":
        return abstract_domain(_require(params, "n", spec))
    if kind == "poset":
        return FiniteDomain(tuple(range(_require(params, "n", spec))), KIND_POSET)
    raise SpecParseError(f"unknown domain kind {kind!r} in {spec!r}")
