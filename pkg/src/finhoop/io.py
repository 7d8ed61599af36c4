"""Hoop, morphism and certificate documents; DOT export.

All documents are JSON written by one canonical serializer: sorted keys,
two-space indentation, each matrix row on its own line and flat integer
arrays on a single line.  Parsing a canonical file and writing it back
reproduces it byte for byte.  Labels are display-only.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Union

import numpy as np

from .core import FiniteHoop, HoopError, ValidationReport, Violation
from .decomposition import DecompositionCertificate, Leaf

__all__ = [
    "FormatError",
    "read_document",
    "dumps",
    "hoop_to_doc",
    "hoop_from_doc",
    "read_hoop",
    "write_hoop",
    "hoop_hash",
    "morphism_to_doc",
    "read_morphism",
    "certificate_to_doc",
    "read_certificate",
    "verify_certificate",
    "to_dot",
]

PathLike = Union[str, Path]


class FormatError(HoopError, ValueError):
    """A document that cannot be parsed into the expected shape."""


def _scalar(v) -> str:
    return json.dumps(v, ensure_ascii=False)


def _is_flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v)


def _emit(v: Any, depth: int) -> str:
    pad = "  " * depth
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f'{pad}  {_scalar(str(k))}: {_emit(v[k], depth + 1)}' for k in sorted(v)]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(v, (list, tuple)):
        v = list(v)
        if _is_flat(v):
            return "[" + ", ".join(_scalar(x) for x in v) + "]"
        rows = [f"{pad}  {_emit(x, depth + 1)}" for x in v]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    if isinstance(v, np.integer):
        return str(int(v))
    return _scalar(v)


def dumps(doc: dict) -> str:
    return _emit(doc, 0) + "\n"


def _load(text: str, where: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{where}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: top level must be an object")
    return doc


def read_document(path: PathLike) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return _load(text, str(path))


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer")
    return v


def int_list(v, what: str) -> list[int]:
    if not isinstance(v, list):
        raise FormatError(f"{what} must be an array")
    return [_int(x, what) for x in v]


# -- hoops -----------------------------------------------------------------

_HOOP_KEYS = {"size", "unit", "mul", "imp", "labels"}


def hoop_to_doc(hoop: FiniteHoop, labels: bool = True) -> dict:
    doc = {
        "size": hoop.size,
        "unit": hoop.unit,
        "mul": [list(r) for r in hoop.mul],
        "imp": [list(r) for r in hoop.imp],
    }
    if labels and hoop.labels is not None:
        doc["labels"] = list(hoop.labels)
    return doc


def hoop_from_doc(doc: dict, where: str = "hoop") -> FiniteHoop:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    extra = set(doc) - _HOOP_KEYS
    missing = {"size", "unit", "mul", "imp"} - set(doc)
    if missing or extra:
        raise FormatError(f"{where}: missing {sorted(missing)}, unexpected {sorted(extra)}")
    n = _int(doc["size"], "size")
    tables = []
    for name in ("mul", "imp"):
        rows = doc[name]
        if not isinstance(rows, list):
            raise FormatError(f"{where}: {name} must be a matrix")
        tables.append([int_list(r, f"{name} row") for r in rows])
    labels = doc.get("labels")
    if labels is not None and not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
        raise FormatError(f"{where}: labels must be an array of strings")
    try:
        return FiniteHoop(n, _int(doc["unit"], "unit"), tables[0], tables[1], labels)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def read_hoop(path: PathLike) -> FiniteHoop:
    return hoop_from_doc(read_document(path), str(path))


def write_hoop(hoop: FiniteHoop, path: PathLike) -> None:
    Path(path).write_text(dumps(hoop_to_doc(hoop)), encoding="utf-8")


def hoop_hash(hoop: FiniteHoop) -> str:
    """sha256 of the canonical serialization of the tables (labels excluded)."""
    return hashlib.sha256(dumps(hoop_to_doc(hoop, labels=False)).encode()).hexdigest()


# -- morphisms -------------------------------------------------------------

MORPHISM_KINDS = ("product", "homomorphism")


def morphism_to_doc(domain, codomain, table, kind: str = "product") -> dict:
    """``domain``/``codomain`` may be hoops (inlined) or path strings."""
    def side(h):
        return h if isinstance(h, str) else hoop_to_doc(h)
    return {"kind": kind, "domain": side(domain), "codomain": side(codomain),
            "map": [int(v) for v in table]}


def read_morphism(path: PathLike):
    """Return ``(kind, domain, codomain, map)``; relative hoop paths are
    resolved against the morphism file's directory."""
    doc = read_document(path)
    base = Path(path).parent
    kind = doc.get("kind", "product")
    if kind not in MORPHISM_KINDS:
        raise FormatError(f"{path}: kind must be one of {MORPHISM_KINDS}")
    if "map" not in doc:
        raise FormatError(f"{path}: missing map")
    ends = []
    for side in ("domain", "codomain"):
        v = doc.get(side)
        if v is None:
            ends.append(None)
        elif isinstance(v, str):
            ends.append(read_hoop(base / v))
        else:
            ends.append(hoop_from_doc(v, f"{path}:{side}"))
    return kind, ends[0], ends[1], int_list(doc["map"], "map")


# -- certificates ----------------------------------------------------------

def _tree_to_doc(t) -> dict:
    if isinstance(t, Leaf):
        return {"leaf": t.order}
    return {"left": _tree_to_doc(t.left), "morphism": list(t.morphism),
            "right": _tree_to_doc(t.right)}


def certificate_to_doc(cert: DecompositionCertificate, hoop: FiniteHoop) -> dict:
    return {
        "association": cert.association,
        "input_hash": hoop_hash(hoop),
        "iso_to_input": list(cert.iso_to_input),
        "leaves": cert.leaves,
        "strategy": cert.strategy,
        "tree": _tree_to_doc(cert.shape),
    }


def read_certificate(path: PathLike) -> dict:
    doc = read_document(path)
    for key in ("input_hash", "iso_to_input", "tree"):
        if key not in doc:
            raise FormatError(f"{path}: missing {key}")
    int_list(doc["iso_to_input"], "iso_to_input")
    _check_tree(doc["tree"], str(path))
    return doc


def _check_tree(t, where: str) -> None:
    if not isinstance(t, dict):
        raise FormatError(f"{where}: tree nodes must be objects")
    if set(t) == {"leaf"}:
        if _int(t["leaf"], "leaf") < 2:
            raise FormatError(f"{where}: MV-chain leaves have order >= 2")
        return
    if set(t) != {"left", "morphism", "right"}:
        raise FormatError(f"{where}: node must have left, morphism, right")
    int_list(t["morphism"], "morphism")
    _check_tree(t["left"], where)
    _check_tree(t["right"], where)


class _Eval:
    """Tables of an evaluated subtree, built without the library's products."""

    def __init__(self, mul, imp, unit):
        self.mul = np.asarray(mul, dtype=np.intp)
        self.imp = np.asarray(imp, dtype=np.intp)
        self.unit = unit
        self.leq = self.imp == unit

    @property
    def size(self):
        return len(self.mul)

    def meet(self, a, b):
        return self.mul[a, self.imp[a, b]]


def _chain(n: int) -> _Eval:
    top = n - 1
    i = np.arange(n)
    return _Eval(np.maximum(0, i[:, None] + i[None, :] - top),
                 np.minimum(top, top - i[:, None] + i[None, :]), top)


def _evaluate(t, problems: list) -> _Eval:
    if "leaf" in t:
        return _chain(t["leaf"])
    A = _evaluate(t["left"], problems)
    B = _evaluate(t["right"], problems)
    f = np.asarray(t["morphism"], dtype=np.intp)
    if f.shape != (B.size,) or (f < 0).any() or (f >= A.size).any():
        raise _Reject("morphism-shape", ())
    x, y = np.arange(B.size)[:, None], np.arange(B.size)[None, :]
    fm = A.meet(f[x], f[y])
    if f[B.unit] != A.unit or not ((A.mul[f[x], f[y]] == fm).all()
                                   and (f[B.mul] == fm).all()
                                   and (f[B.meet(x, y)] == fm).all()):
        problems.append(Violation("product-morphism", tuple(int(v) for v in f)))
    pairs = [(a, b) for b in range(B.size) for a in range(A.size) if A.leq[a, f[b]]]
    pos = {p: k for k, p in enumerate(pairs)}
    k = len(pairs)
    mul = np.empty((k, k), dtype=np.intp)
    imp = np.empty((k, k), dtype=np.intp)
    for s, (a, b) in enumerate(pairs):
        for r, (c, d) in enumerate(pairs):
            m = pos.get((A.mul[a, c], B.mul[b, d]))
            e = B.imp[b, d]
            w = pos.get((A.meet(f[e], A.imp[a, c]), e))
            if m is None or w is None:
                raise _Reject("product-not-closed", (s, r))
            mul[s, r], imp[s, r] = m, w
    return _Eval(mul, imp, pos[(A.unit, B.unit)])


class _Reject(Exception):
    def __init__(self, tag, witness):
        self.violation = Violation(tag, witness)


def verify_certificate(hoop: FiniteHoop, doc: dict) -> ValidationReport:
    """Re-evaluate the tree from scratch and check ``iso_to_input``."""
    problems: list[Violation] = []
    if doc.get("input_hash") != hoop_hash(hoop):
        problems.append(Violation("input-hash", ()))
    try:
        value = _evaluate(doc["tree"], problems)
    except _Reject as r:
        return ValidationReport(tuple(problems) + (r.violation,))
    iso = np.asarray(doc["iso_to_input"], dtype=np.intp)
    n = hoop.size
    if value.size != n or iso.shape != (n,) or sorted(iso.tolist()) != list(range(n)):
        problems.append(Violation("iso-not-bijective", ()))
        return ValidationReport(tuple(problems))
    m, i = hoop.mul_arr, hoop.imp_arr
    bad = (iso[value.mul] != m[iso[:, None], iso[None, :]]) | \
          (iso[value.imp] != i[iso[:, None], iso[None, :]])
    if bad.any():
        w = np.argwhere(bad)[0]
        problems.append(Violation("iso-not-homomorphic", (int(w[0]), int(w[1]))))
    if iso[value.unit] != hoop.unit:
        problems.append(Violation("iso-unit", ()))
    if "leaves" in doc and doc["leaves"] != _leaves(doc["tree"]):
        problems.append(Violation("leaf-list", ()))
    return ValidationReport(tuple(problems))


def _leaves(t) -> list[int]:
    if "leaf" in t:
        return [t["leaf"]]
    return _leaves(t["left"]) + _leaves(t["right"])


# -- DOT -------------------------------------------------------------------

def to_dot(hoop: FiniteHoop, name: str = "hoop") -> str:
    """Hasse diagram, bottom to top; idempotents drawn as double circles."""
    ids = set(hoop.idempotents)
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(hoop.size):
        shape = "doublecircle" if x in ids else "circle"
        lines.append(f"  {x} [label={json.dumps(hoop.label(x), ensure_ascii=False)}, shape={shape}];")
    for lo, hi in sorted(hoop.order.hasse_edges):
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
