"""Colored point configurations: data model, file formats, generation.

A configuration is d+1 pairwise-disjoint color classes of n points each in
dimension d, with the whole union in general position.  Coordinates are
exact rationals; the JSON format stores them as strings ("7", "1/3",
"0.25") so that load(save(cfg)) round-trips bit for bit.

Formats
-------
JSON:   {"dimension": d, "colors": [[["x", "y"], ...], ...]}
plain:  one point per line: "color_index x1 x2 ... xd"
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationError, InputError, ParseError, ValidationError
from .geometry import (
    Point,
    format_rational,
    general_position_check,
    point,
    rational,
)

DISTRIBUTIONS = ("uniform-box", "gaussian", "moment-curve-perturbed")


@dataclass(frozen=True)
class ColoredConfiguration:
    dimension: int
    colors: tuple[tuple[Point, ...], ...]

    @property
    def n(self) -> int:
        return len(self.colors[0])

    @property
    def num_colors(self) -> int:
        return len(self.colors)

    def all_points(self) -> list[Point]:
        return [p for cls in self.colors for p in cls]

    def validate(self) -> "ColoredConfiguration":
        d = self.dimension
        if d < 1:
            raise ValidationError("dimension must be >= 1")
        if len(self.colors) != d + 1:
            raise ValidationError(
                f"expected {d + 1} color classes, got {len(self.colors)}",
                witness={"count": len(self.colors)},
            )
        sizes = [len(cls) for cls in self.colors]
        if min(sizes) == 0:
            raise ValidationError(
                "empty color class", witness={"sizes": sizes}
            )
        if len(set(sizes)) != 1:
            raise ValidationError(
                f"size mismatch: classes have sizes {sizes}",
                witness={"sizes": sizes},
            )
        seen: dict[Point, tuple[int, int]] = {}
        for ci, cls in enumerate(self.colors):
            for pi, p in enumerate(cls):
                if len(p) != d:
                    raise ValidationError(
                        f"point of dimension {len(p)} in dimension-{d} "
                        "configuration",
                        witness={"color": ci, "index": pi},
                    )
                if p in seen:
                    raise ValidationError(
                        "duplicate point across the union",
                        witness={
                            "first": seen[p],
                            "second": (ci, pi),
                            "point": [format_rational(c) for c in p],
                        },
                    )
                seen[p] = (ci, pi)
        violation = general_position_check(self.all_points(), d)
        if violation is not None:
            raise ValidationError(
                f"general position violated at indices {violation}",
                witness={"indices": list(violation)},
            )
        return self


def configuration(dimension: int, colors) -> ColoredConfiguration:
    cfg = ColoredConfiguration(
        dimension=dimension,
        colors=tuple(tuple(point(p) for p in cls) for cls in colors),
    )
    return cfg.validate()


@dataclass(frozen=True)
class GeneratorSpec:
    seed: int
    n: int
    d: int
    distribution: str = "uniform-box"
    jitter: int = 997  # denominator bound of the rational jitter

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise InputError("need n >= 1 and d >= 1")
        if self.distribution not in DISTRIBUTIONS:
            raise InputError(
                f"unknown distribution {self.distribution!r}; "
                f"choose one of {DISTRIBUTIONS}"
            )
        if self.jitter < 1:
            raise InputError("jitter denominator bound must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must fit in 64 unsigned bits")


def _sample_point(rng: random.Random, spec: GeneratorSpec, index: int) -> Point:
    d, den = spec.d, spec.jitter
    if spec.distribution == "uniform-box":
        # Integer lattice in [0, 1024) plus jitter with denominator `den`.
        return tuple(
            Fraction(rng.randrange(1024) * den + rng.randrange(den), den)
            for _ in range(d)
        )
    if spec.distribution == "gaussian":
        return tuple(
            Fraction(round(rng.gauss(0.0, 256.0) * den), den) for _ in range(d)
        )
    # moment-curve-perturbed: points near (t, t^2, ..., t^d) with the
    # parameter spread over the union; produces skewed order types.
    t = Fraction(index) + Fraction(rng.randrange(den), 2 * den)
    return tuple(
        t ** (k + 1) + Fraction(rng.randrange(den), 16 * den) for k in range(d)
    )


def generate(spec: GeneratorSpec, max_attempts: int = 64) -> ColoredConfiguration:
    """Deterministic for a fixed spec; resamples on degeneracy."""
    for attempt in range(max_attempts):
        rng = random.Random(f"{spec.seed}:{attempt}:{spec.distribution}")
        colors = []
        counter = 0
        for _ in range(spec.d + 1):
            cls = []
            for _ in range(spec.n):
                cls.append(_sample_point(rng, spec, counter))
                counter += 1
            colors.append(tuple(cls))
        cfg = ColoredConfiguration(dimension=spec.d, colors=tuple(colors))
        try:
            return cfg.validate()
        except ValidationError:
            continue
    raise GenerationError(
        f"no valid configuration after {max_attempts} attempts for {spec}"
    )


def _to_json_dict(cfg: ColoredConfiguration) -> dict:
    return {
        "dimension": cfg.dimension,
        "colors": [
            [[format_rational(c) for c in p] for p in cls]
            for cls in cfg.colors
        ],
    }


def save_configuration(cfg: ColoredConfiguration, fmt: str = "json") -> bytes:
    cfg.validate()
    if fmt == "json":
        text = json.dumps(_to_json_dict(cfg), sort_keys=True, separators=(",", ":"))
        return (text + "\n").encode()
    if fmt == "plain":
        lines = []
        for ci, cls in enumerate(cfg.colors):
            for p in cls:
                lines.append(
                    " ".join([str(ci)] + [format_rational(c) for c in p])
                )
        return ("\n".join(lines) + "\n").encode()
    raise InputError(f"unknown format {fmt!r}")


def _coord(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(
            f"coordinate {value!r} rejected: use exact strings or integers"
        )
    return rational(value)


def load_configuration(source, fmt: str = "json") -> ColoredConfiguration:
    if isinstance(source, bytes):
        text = source.decode()
    else:
        text = str(source)
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from exc
        try:
            dimension = int(data["dimension"])
            raw_colors = data["colors"]
            colors = tuple(
                tuple(tuple(_coord(c) for c in p) for p in cls)
                for cls in raw_colors
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad configuration structure: {exc}") from exc
    elif fmt == "plain":
        buckets: dict[int, list[Point]] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            try:
                ci = int(parts[0])
                coords = tuple(rational(tok) for tok in parts[1:])
            except (ValueError, InputError) as exc:
                raise ParseError(f"line {lineno}: {exc}") from exc
            if not coords:
                raise ParseError(f"line {lineno}: point has no coordinates")
            buckets.setdefault(ci, []).append(coords)
        if not buckets:
            raise ParseError("empty plain configuration")
        if sorted(buckets) != list(range(len(buckets))):
            raise ParseError(
                f"color indices must be 0..k, got {sorted(buckets)}"
            )
        dimension = len(next(iter(buckets.values()))[0])
        colors = tuple(tuple(buckets[i]) for i in sorted(buckets))
    else:
        raise InputError(f"unknown format {fmt!r}")
    cfg = ColoredConfiguration(dimension=dimension, colors=colors)
    return cfg.validate()
