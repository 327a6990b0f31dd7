"""
Algebra file format: UTF-8 JSON with exact rational coefficients.

    {
      "name": "L_{1,2}^{(3)}",
      "even_basis": ["a"],
      "odd_basis": ["α", "β"],
      "brackets": [
        {"left": "a", "right": "β", "value": [{"basis": "α", "coeff": "1"}]}
      ]
    }

Coefficients are "p" or "p/q" strings (integers are also accepted);
floating point is refused. Each unordered pair appears at most once with
left <= right in basis order (even block first). Parse problems are
collected and raised together; axiom failures are not parse problems.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .superalg import (
    LieSuperalgebra,
    SuperalgebraError,
    Vector,
    ZERO,
    format_scalar,
    to_scalar,
)


@dataclass
class FieldError:
    """A problem at one location of an algebra file."""

    path: str  # JSON path, e.g. "brackets[1].value[0].coeff"
    message: str
    line: int | None = None

    def __str__(self):
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.path} - {self.message}"


class AlgebraFileError(SuperalgebraError):
    """Raised when an algebra file cannot be parsed."""

    def __init__(self, source: str, errors: list[FieldError]):
        self.source = source
        self.errors = errors
        message = f"{source}: {len(errors)} error(s):\n"
        message += "\n".join(f"  - {e}" for e in errors)
        super().__init__(message)


def _coefficient(raw: Any) -> Any:
    if isinstance(raw, bool):
        raise ValueError(f"not a rational number: {raw!r}")
    if isinstance(raw, float):
        raise ValueError(f"floating point not accepted: {raw!r}")
    if not isinstance(raw, (str, int)):
        raise ValueError(f"coeff must be a rational string, got {type(raw).__name__}")
    return to_scalar(raw)


def _names(data: dict, key: str, errors: list[FieldError]) -> list[str]:
    raw = data.get(key)
    if not isinstance(raw, list) or not all(isinstance(x, str) and x for x in raw):
        errors.append(FieldError(key, "must be a list of non-empty strings"))
        return []
    return raw


def algebra_from_dict(data: Any, source: str = "<algebra>") -> LieSuperalgebra:
    """
    Build an algebra from a decoded algebra file.

    Raises:
        AlgebraFileError: Listing every field problem found
    """
    errors: list[FieldError] = []
    if not isinstance(data, dict):
        raise AlgebraFileError(source, [FieldError("$", "top level must be an object")])

    name = data.get("name")
    if not isinstance(name, str) or not name:
        errors.append(FieldError("name", "must be a non-empty string"))
    even = _names(data, "even_basis", errors)
    odd = _names(data, "odd_basis", errors)
    names = even + odd
    for label in sorted({x for x in names if names.count(x) > 1}):
        errors.append(FieldError("even_basis/odd_basis", f"duplicate basis name '{label}'"))
    if errors:
        raise AlgebraFileError(source, errors)
    if not names:
        raise AlgebraFileError(source, [FieldError("even_basis/odd_basis", "algebra must have m+n >= 1")])

    index = {label: k for k, label in enumerate(names)}
    m = len(even)
    brackets: dict[tuple[int, int], Vector] = {}
    raw_brackets = data.get("brackets", [])
    if not isinstance(raw_brackets, list):
        raise AlgebraFileError(source, [FieldError("brackets", "must be a list")])

    for b, rel in enumerate(raw_brackets):
        where = f"brackets[{b}]"
        if not isinstance(rel, dict):
            errors.append(FieldError(where, "must be an object"))
            continue
        left, right = rel.get("left"), rel.get("right")
        ok = True
        for side, label in (("left", left), ("right", right)):
            if label not in index:
                errors.append(FieldError(f"{where}.{side}", f"unknown basis name {label!r}"))
                ok = False
        if not ok:
            continue
        i, j = index[left], index[right]
        if i > j:
            errors.append(FieldError(where, f"left '{left}' must not come after right '{right}' in basis order"))
            continue
        if i == j and i < m:
            errors.append(FieldError(where, f"even square [{left},{left}] is zero and cannot be given"))
            continue
        if (i, j) in brackets:
            errors.append(FieldError(where, f"pair [{left},{right}] given more than once"))
            continue

        vector = [ZERO] * len(names)
        value = rel.get("value", [])
        if not isinstance(value, list):
            errors.append(FieldError(f"{where}.value", "must be a list"))
            continue
        seen = set()
        for t, term in enumerate(value):
            term_where = f"{where}.value[{t}]"
            if not isinstance(term, dict):
                errors.append(FieldError(term_where, "must be an object"))
                continue
            target = term.get("basis")
            if target not in index:
                errors.append(FieldError(f"{term_where}.basis", f"unknown basis name {target!r}"))
                continue
            if target in seen:
                errors.append(FieldError(f"{term_where}.basis", f"basis '{target}' repeated"))
                continue
            seen.add(target)
            try:
                vector[index[target]] = _coefficient(term.get("coeff"))
            except ValueError as e:
                errors.append(FieldError(f"{term_where}.coeff", str(e)))
        brackets[(i, j)] = tuple(vector)

    if errors:
        raise AlgebraFileError(source, errors)
    try:
        return LieSuperalgebra(name, tuple(even), tuple(odd), brackets)
    except SuperalgebraError as e:
        raise AlgebraFileError(source, [FieldError("$", str(e))]) from None


def loads_algebra(text: str, source: str = "<string>") -> LieSuperalgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(source, [FieldError("$", f"invalid JSON: {e.msg}", line=e.lineno)]) from None
    return algebra_from_dict(data, source)


def read_algebra(path: Path | str) -> LieSuperalgebra:
    """
    Read an algebra file.

    Raises:
        AlgebraFileError: For unreadable files, bad JSON or field problems
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise AlgebraFileError(str(path), [FieldError("$", f"cannot read file: {e}")]) from None
    return loads_algebra(text, str(path))


def algebra_to_dict(L: LieSuperalgebra) -> dict:
    return {
        "name": L.name,
        "even_basis": list(L.even_names),
        "odd_basis": list(L.odd_names),
        "brackets": [
            {
                "left": L.names[i],
                "right": L.names[j],
                "value": [
                    {"basis": L.names[k], "coeff": format_scalar(x)} for k, x in enumerate(value) if x
                ],
            }
            for (i, j), value in L.brackets.items()
        ],
    }


def dumps_algebra(L: LieSuperalgebra) -> str:
    return json.dumps(algebra_to_dict(L), ensure_ascii=False, indent=2) + "\n"


def write_algebra(L: LieSuperalgebra, path: Path | str) -> None:
    Path(path).write_text(dumps_algebra(L), encoding="utf-8")
