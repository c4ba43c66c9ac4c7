"""End-to-end certification: validate, bound, sweep, report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from . import __version__
from .errors import HypothesisViolation, InvariantFailure, SequenceFormatError
from .field import Polynomial, RationalFunction
from .power_detect import PowerWitness
from .proof import BoundReport, binary_bound, general_bound, general_index_bound
from .recurrence import THEOREM1, THEOREM2, PowerSumSequence, term, validate
from .search import Catalogue, search_powers

COMPLETE_ALL_N = "complete-all-n"
COMPLETE_ABOVE_THRESHOLD = "complete-above-threshold"

M_RANGE_RULE = "2 <= m <= floor(deg G_n / 2)"


@dataclass(frozen=True)
class Certificate:
    sequence: PowerSumSequence
    theorem: int
    bound: BoundReport
    searched_range: Tuple[int, int]
    catalogue: Catalogue
    completeness: str
    tool_version: str = __version__
    timing: Dict[str, float] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.searched_range != (0, self.bound.index_bound):
            raise InvariantFailure("searched range does not match the bound report")
        if self.completeness == COMPLETE_ALL_N and self.theorem != 1:
            raise InvariantFailure("complete-all-n is reserved for theorem 1")

    def reverify(self) -> None:
        """Re-check every witness against a freshly computed ``G_n``."""
        for n, w in self.catalogue:
            if not w.verifies(term(self.sequence, n)):
                raise InvariantFailure(f"catalogued witness (n={n}, m={w.exponent}) does not verify")

    def to_text(self, include_timing: bool = False) -> dict:
        out = {
            "sequence": self.sequence.to_text(),
            "theorem": self.theorem,
            "bound": self.bound.to_text(),
            "searched_range": {"n": list(self.searched_range), "m": M_RANGE_RULE},
            "catalogue": [dict(n=n, **w.to_text()) for n, w in self.catalogue],
            "completeness": self.completeness,
            "tool_version": self.tool_version,
        }
        if include_timing:
            out["timing"] = dict(self.timing)
        return out


# JSON Schema of the certificate document (timing is optional).
_POLY = {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}}
_RAT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": [
        "sequence", "theorem", "bound", "searched_range", "catalogue", "completeness", "tool_version",
    ],
    "additionalProperties": False,
    "properties": {
        "sequence": {
            "type": "object",
            "required": ["coefficients", "roots"],
            "properties": {
                "coefficients": {
                    "type": "array",
                    "items": {
                        "anyOf": [
                            _RAT,
                            _POLY,
                            {
                                "type": "object",
                                "required": ["numerator", "denominator"],
                                "properties": {"numerator": _POLY, "denominator": _POLY},
                            },
                        ]
                    },
                },
                "roots": {"type": "array", "minItems": 2, "items": _POLY},
            },
        },
        "theorem": {"enum": [1, 2]},
        "bound": {
            "type": "object",
            "required": ["theorem", "index_bound", "exponent_threshold", "inputs"],
            "properties": {
                "theorem": {"enum": [1, 2]},
                "index_bound": {"type": "integer", "minimum": 0},
                "exponent_threshold": {"type": ["integer", "null"]},
                "inputs": {"type": "object"},
            },
        },
        "searched_range": {
            "type": "object",
            "required": ["n", "m"],
            "properties": {
                "n": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
                "m": {"type": "string"},
            },
        },
        "catalogue": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "exponent", "monic_root", "leading_coefficient"],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 0},
                    "exponent": {"type": "integer", "minimum": 2},
                    "monic_root": _POLY,
                    "leading_coefficient": _RAT,
                },
            },
        },
        "completeness": {"enum": [COMPLETE_ALL_N, COMPLETE_ABOVE_THRESHOLD]},
        "tool_version": {"type": "string"},
        "timing": {"type": "object"},
    },
}


def _fail(message: str, path, exc: Exception = None):
    raise SequenceFormatError(f"{message}{': ' + str(exc) if exc else ''}", field=path)


def parse_sequence(data, strict: bool = False) -> PowerSumSequence:
    """Build a sequence from the decoded JSON object, with field-level diagnostics."""
    if not isinstance(data, dict):
        _fail("sequence file must hold a JSON object", ())
    for key in ("coefficients", "roots"):
        if key not in data:
            _fail("missing required key", (key,))
        if not isinstance(data[key], list):
            _fail("expected a list", (key,))
    if not data["roots"]:
        _fail("roots list is empty", ("roots",))
    coeffs, roots = [], []
    for i, item in enumerate(data["coefficients"]):
        try:
            coeffs.append(RationalFunction.from_text(item))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            _fail("bad coefficient", ("coefficients", i), exc)
    for i, item in enumerate(data["roots"]):
        if not isinstance(item, list):
            _fail("root must be a coefficient list", ("roots", i))
        try:
            roots.append(Polynomial.from_text(item))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            _fail("bad root", ("roots", i), exc)
    try:
        seq = PowerSumSequence(tuple(coeffs), tuple(roots))
    except ValueError as exc:
        _fail("invalid sequence", (), exc)
    if strict:
        # simplicity and non-degeneracy are shared by both theorems
        result = validate(seq, THEOREM1)
        basic = [v for v in result.violations if v.startswith(("simple", "non-degenerate"))]
        if basic:
            raise HypothesisViolation("sequence rejected at load time", basic)
    return seq


def _load_json(path: Union[str, Path]):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFormatError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None


def load_sequence(path: Union[str, Path], strict: bool = False) -> PowerSumSequence:
    """Read a sequence file ``{"coefficients": [...], "roots": [...]}``.

    ``strict`` additionally rejects non-simple or degenerate sequences.
    """
    return parse_sequence(_load_json(path), strict=strict)


def load_polynomial(path: Union[str, Path]) -> Polynomial:
    """Read a polynomial file: a coefficient list or ``{"polynomial": [...]}``."""
    data = _load_json(path)
    if isinstance(data, dict):
        if "polynomial" not in data:
            _fail("missing required key", ("polynomial",))
        data = data["polynomial"]
    if not isinstance(data, list):
        _fail("polynomial must be a list of coefficient strings", ())
    try:
        return Polynomial.from_text(data)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        _fail("bad polynomial", (), exc)


def certify(seq: PowerSumSequence, workers: int = 1) -> Certificate:
    """Certify the complete perfect-power catalogue of ``seq``.

    Theorem 1 (binary) sequences get the full list of perfect powers in the
    whole sequence.  Theorem 2 sequences get the list below the index bound
    together with ``M*``: no term is an ``m``-th power for ``m > M*``.
    """
    t1 = validate(seq, THEOREM1)
    t2 = validate(seq, THEOREM2)
    start = time.perf_counter()
    if t1.passed:
        bound = binary_bound(seq)
        t_bound = time.perf_counter()
        catalogue = search_powers(seq, 0, bound.index_bound, workers=workers)
        theorem, completeness = 1, COMPLETE_ALL_N
    elif t2.passed:
        c = general_index_bound(seq)
        t_bound = time.perf_counter()
        catalogue = search_powers(seq, 0, c, workers=workers)
        bound = general_bound(seq, catalogue=catalogue)
        theorem, completeness = 2, COMPLETE_ABOVE_THRESHOLD
    else:
        raise HypothesisViolation(
            "sequence satisfies neither theorem",
            [f"theorem 1: {v}" for v in t1.violations] + [f"theorem 2: {v}" for v in t2.violations],
        )
    end = time.perf_counter()
    cert = Certificate(
        seq,
        theorem,
        bound,
        (0, bound.index_bound),
        catalogue,
        completeness,
        timing={"bound_seconds": t_bound - start, "search_seconds": end - t_bound},
    )
    cert.reverify()
    return cert


def emit_report(cert: Certificate, format: str = "json", include_timing: bool = False) -> str:
    """Serialize deterministically; witnesses are re-verified first.

    Timing is left out unless asked for, so repeated runs are byte-identical.
    """
    cert.reverify()
    if format == "json":
        return json.dumps(cert.to_text(include_timing), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    seq = cert.sequence
    lines = [
        f"powcert {cert.tool_version} certificate",
        f"sequence: G_n = {seq}",
        f"theorem applied: {cert.theorem}",
        f"index bound C: {cert.bound.index_bound}",
    ]
    if cert.bound.exponent_threshold is not None:
        lines.append(f"exponent threshold M*: {cert.bound.exponent_threshold}")
    lines.append(f"searched: 0 <= n <= {cert.searched_range[1]}, {M_RANGE_RULE}")
    lines.append(f"completeness: {cert.completeness}")
    if cert.completeness == COMPLETE_ALL_N:
        lines.append("claim: the catalogue lists every perfect power G_n = h^m (deg h >= 2) for all n")
    else:
        lines.append(
            f"claim: no G_n is an m-th power with deg h >= 2 for any m > {cert.bound.exponent_threshold}"
        )
    lines.append("")
    lines.append(f"catalogue ({len(cert.catalogue)} witnesses):")
    if cert.catalogue:
        lines.append(f"{'n':>6}  {'m':>3}  {'lc':>8}  monic root")
        for n, w in cert.catalogue:
            lc = w.to_text()["leading_coefficient"]
            lines.append(f"{n:>6}  {w.exponent:>3}  {lc:>8}  {w.monic_root}")
    else:
        lines.append("  (none)")
    if include_timing:
        lines.append("")
        for k, v in sorted(cert.timing.items()):
            lines.append(f"{k}: {v:.3f}")
    return "\n".join(lines) + "\n"


def _demo_sequences() -> Dict[str, PowerSumSequence]:
    x = Polynomial.x()
    return {
        # (x^n + 1)^2 = (x^2)^n + 2 x^n + 1^n: every term is a square.
        "counterexample": PowerSumSequence((1, 2, 1), (x**2, x, Polynomial.constant(1))),
        "binary-basic": PowerSumSequence((1, 1), (x**2, x + 1)),
    }


DEMOS = tuple(sorted(_demo_sequences()))


def demo_sequence(name: str) -> PowerSumSequence:
    seqs = _demo_sequences()
    if name not in seqs:
        raise KeyError(f"unknown demo {name!r}; available: {', '.join(DEMOS)}")
    return seqs[name]


def demo(name: str, workers: int = 1) -> Certificate:
    return certify(demo_sequence(name), workers=workers)


def spot_check_beyond(cert: Certificate, factor: int = 2, workers: int = 1) -> Catalogue:
    """Search ``(C, factor*C]``; for theorem 1 this must come back empty."""
    c = cert.bound.index_bound
    return search_powers(cert.sequence, c + 1, max(c + 1, factor * c), workers=workers)


__all__ = [
    "CERTIFICATE_SCHEMA",
    "COMPLETE_ABOVE_THRESHOLD",
    "COMPLETE_ALL_N",
    "Certificate",
    "DEMOS",
    "PowerWitness",
    "certify",
    "demo",
    "demo_sequence",
    "emit_report",
    "load_polynomial",
    "load_sequence",
    "parse_sequence",
    "search_powers",
    "spot_check_beyond",
]
