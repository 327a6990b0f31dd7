"""
Catalog accessor for the maximal-class Lie superalgebras and helpers.

Provides a stable API over the YAML catalog (data/catalog.yaml):
structure constants, builder parameters and the published multiplier
claims attached to each entry, plus the s-bucket placement.

Claims are data, never inputs: every computation here uses the
structure constants only.
"""

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml

from .homology import schur_multiplier, schur_multiplier_cochain_oracle
from .superalg import (
    LieSuperalgebra,
    SchemaError,
    Scalar,
    SuperalgebraError,
    direct_sum,
    format_scalar,
    to_scalar,
    validate as validate_axioms,
)

log = logging.getLogger(__name__)

CATALOG_PATH = Path(__file__).parent / "data" / "catalog.yaml"

KINDS = {"table", "abelian", "heisenberg_sum"}


# =========================================================================
# ERRORS
# =========================================================================


class CatalogError(SuperalgebraError):
    """Raised for unknown keys and invalid builder parameters."""

    pass


@dataclass
class CatalogProblem:
    """A validation problem in one catalog entry."""

    key: str
    field: str
    message: str

    def __str__(self):
        return f"entry '{self.key}': {self.field} - {self.message}"


class CatalogValidationError(SuperalgebraError):
    """Raised when the catalog data fails validation on load."""

    def __init__(self, problems: list[CatalogProblem]):
        self.problems = problems
        message = f"Catalog validation failed with {len(problems)} problem(s):\n"
        message += "\n".join(f"  - {p}" for p in problems)
        super().__init__(message)


# =========================================================================
# ENTRIES
# =========================================================================


@dataclass
class CatalogEntry:
    """One catalog algebra with its published claims."""

    key: str
    family: str
    kind: str  # "table", "abelian" or "heisenberg_sum"
    even: tuple[str, ...] = ()
    odd: tuple[str, ...] = ()
    brackets: list[dict] = field(default_factory=list)
    params: dict[str, Any] = field(default_factory=dict)  # builder defaults
    claimed_multiplier_dim: int | None = None
    claimed_multiplier_type: tuple[int, int] | None = None
    claimed_s_bucket: int | None = None
    note: str | None = None
    expect_nilpotent: bool = True
    expect_maximal_class: bool = False

    @property
    def dims(self) -> tuple[int, int]:
        """Graded dimensions at the default parameters."""
        if self.kind == "table":
            return (len(self.even), len(self.odd))
        return (self.params["m"], self.params["n"])

    @property
    def parameterized(self) -> bool:
        return "p" in self.params

    @property
    def tabulated(self) -> bool:
        return self.claimed_multiplier_dim is not None

    @property
    def claimed_type_label(self) -> str | None:
        if self.claimed_multiplier_type is None:
            return None
        a, b = self.claimed_multiplier_type
        return f"A({a}|{b})"

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogEntry":
        claims = data.get("claims") or {}
        claimed_type = claims.get("type")
        return cls(
            key=str(data["key"]),
            family=str(data.get("family", "")),
            kind=str(data["kind"]),
            even=tuple(str(x) for x in data.get("even") or ()),
            odd=tuple(str(x) for x in data.get("odd") or ()),
            brackets=list(data.get("brackets") or []),
            params=dict(data.get("params") or {}),
            claimed_multiplier_dim=claims.get("dim"),
            claimed_multiplier_type=tuple(claimed_type) if claimed_type else None,
            claimed_s_bucket=claims.get("s_bucket"),
            note=data.get("note"),
            expect_nilpotent=bool(data.get("expect_nilpotent", True)),
            expect_maximal_class=bool(data.get("expect_maximal_class", False)),
        )


def _coefficient(raw: Any, p: Scalar | None) -> Scalar:
    """Resolve a YAML coefficient: a rational, or "p" / "-p"."""
    if isinstance(raw, str) and raw.strip() in ("p", "-p"):
        if p is None:
            raise SchemaError(f"coefficient {raw!r} needs a parameter p")
        return p if raw.strip() == "p" else -p
    return to_scalar(raw)


def _positive_parameter(value: Any) -> Scalar:
    try:
        p = to_scalar(value)
    except ValueError as e:
        raise CatalogError(f"invalid parameter p: {e}") from None
    if p <= 0:
        raise CatalogError(f"parameter must satisfy p>0, got {format_scalar(p)}")
    return p


def abelian(m: int, n: int) -> LieSuperalgebra:
    """A(m|n) on x1..xm | ξ1..ξn."""
    if m < 0 or n < 0 or m + n < 1:
        raise CatalogError(f"A(m|n) needs m, n >= 0 and m+n >= 1, got ({m}|{n})")
    return LieSuperalgebra(
        f"A({m}|{n})",
        tuple(f"x{k}" for k in range(1, m + 1)),
        tuple(f"ξ{k}" for k in range(1, n + 1)),
    )


# =========================================================================
# ACCESSOR
# =========================================================================


class CatalogAccessor:
    """
    Abstraction layer over the YAML catalog.

    Validates the data on construction.

    Usage:
        catalog = CatalogAccessor()
        L = catalog.build("L_{2,2}^{(11)}", p="1/2")
        entry = catalog.entry("E^{22}")
        members = catalog.s_bucket_members(5)
    """

    def __init__(self, catalog_path: Path | None = None, validate: bool = True):
        """
        Load and optionally validate a catalog file.

        Args:
            catalog_path: Path to a catalog YAML file (default: packaged catalog)
            validate: If True, validate entries on load (default: True)

        Raises:
            CatalogValidationError: If validation is enabled and fails
        """
        self._path = catalog_path or CATALOG_PATH
        with open(self._path, encoding="utf-8") as f:
            self._data = yaml.safe_load(f) or {}

        self._entries: dict[str, CatalogEntry] = {}
        self._problems: list[CatalogProblem] = []
        for raw in self._data.get("entries", []):
            try:
                entry = CatalogEntry.from_dict(raw)
            except (KeyError, TypeError) as e:
                self._problems.append(CatalogProblem(str(raw.get("key", "?")), "entry", f"malformed: {e}"))
                continue
            if entry.key in self._entries:
                self._problems.append(CatalogProblem(entry.key, "key", "duplicate key"))
            self._entries[entry.key] = entry

        self._s_buckets: dict[int, list[str]] = {
            int(s): list(keys or []) for s, keys in (self._data.get("s_buckets") or {}).items()
        }

        if validate:
            problems = self.validate()
            if problems:
                raise CatalogValidationError(problems)

    # =========================================================================
    # VALIDATION
    # =========================================================================

    def validate(self) -> list[CatalogProblem]:
        """
        Check every entry: kind, basis names, bracket pairs, coefficients,
        builder defaults, axioms of the built algebra and s-bucket listing.

        Returns:
            List of problems (empty if valid)
        """
        problems = list(self._problems)
        for entry in self._entries.values():
            problems.extend(self._validate_entry(entry))
        problems.extend(self._validate_buckets())
        return problems

    def _validate_entry(self, entry: CatalogEntry) -> list[CatalogProblem]:
        problems = []

        def problem(field_name: str, message: str) -> None:
            problems.append(CatalogProblem(entry.key, field_name, message))

        if entry.kind not in KINDS:
            problem("kind", f"must be one of {sorted(KINDS)}, got '{entry.kind}'")
            return problems

        if entry.kind == "table":
            names = entry.even + entry.odd
            if len(set(names)) != len(names):
                problem("basis", f"duplicate basis names in {names}")
            seen = set()
            for rel in entry.brackets:
                left, right = rel.get("left"), rel.get("right")
                for label in (left, right, *(rel.get("value") or {})):
                    if label not in names:
                        problem("brackets", f"unknown basis name '{label}'")
                pair = frozenset((left, right))
                if pair in seen:
                    problem("brackets", f"pair [{left},{right}] given more than once")
                seen.add(pair)
                for raw in (rel.get("value") or {}).values():
                    try:
                        _coefficient(raw, to_scalar(1) if "p" in entry.params else None)
                    except (ValueError, SchemaError) as e:
                        problem("brackets", f"[{left},{right}]: {e}")
        else:
            for name in ("m", "n"):
                if not isinstance(entry.params.get(name), int):
                    problem("params", f"'{name}' default must be an integer")

        if "p" in entry.params:
            try:
                _positive_parameter(entry.params["p"])
            except CatalogError as e:
                problem("params", str(e))

        if not problems:
            try:
                report = validate_axioms(self.build(entry.key))
            except SuperalgebraError as e:
                problem("brackets", str(e))
            else:
                for violation in report.violations:
                    problem("brackets", f"axiom violated: {violation}")

        if entry.claimed_multiplier_type is not None and len(entry.claimed_multiplier_type) != 2:
            problem("claims", "type must be a pair [even, odd]")
        return problems

    def _validate_buckets(self) -> list[CatalogProblem]:
        problems = []
        listed: dict[str, int] = {}
        for s, keys in self._s_buckets.items():
            for key in keys:
                if key not in self._entries:
                    problems.append(CatalogProblem(key, "s_buckets", f"bucket {s} lists an unknown key"))
                listed[key] = s
        for entry in self._entries.values():
            if entry.claimed_s_bucket is not None and listed.get(entry.key) != entry.claimed_s_bucket:
                problems.append(
                    CatalogProblem(
                        entry.key,
                        "claims",
                        f"s_bucket {entry.claimed_s_bucket} disagrees with bucket listing {listed.get(entry.key)}",
                    )
                )
        return problems

    # =========================================================================
    # ENTRIES
    # =========================================================================

    def keys(self) -> list[str]:
        return list(self._entries)

    def entries(self) -> list[CatalogEntry]:
        return list(self._entries.values())

    def entry(self, key: str) -> CatalogEntry:
        try:
            return self._entries[key]
        except KeyError:
            raise CatalogError(f"unknown catalog key '{key}'") from None

    def build(self, key: str, **params: Any) -> LieSuperalgebra:
        """
        Construct the algebra of an entry.

        Args:
            key: Catalog key
            **params: p for the one-parameter families; m, n for "A" and
                      "H(1,0)+A". Omitted parameters take the entry defaults.

        Raises:
            CatalogError: Unknown key or invalid parameter
        """
        entry = self.entry(key)
        given = {k: v for k, v in params.items() if v is not None}
        unknown = set(given) - set(entry.params)
        if unknown:
            raise CatalogError(f"entry '{key}' takes no parameter(s) {sorted(unknown)}")
        values = {**entry.params, **given}

        if entry.kind == "abelian":
            return abelian(int(values["m"]), int(values["n"]))
        if entry.kind == "heisenberg_sum":
            return heisenberg_sum(self, int(values["m"]), int(values["n"]))

        p = _positive_parameter(values["p"]) if "p" in values else None
        table = {}
        for rel in entry.brackets:
            table[(rel["left"], rel["right"])] = {
                target: _coefficient(raw, p) for target, raw in rel["value"].items()
            }
        name = key if p is None else f"{key}(p={format_scalar(p)})"
        return LieSuperalgebra.from_table(name, entry.even, entry.odd, table)

    # =========================================================================
    # S-BUCKETS
    # =========================================================================

    @property
    def s_buckets(self) -> dict[int, list[str]]:
        return dict(self._s_buckets)

    def s_bucket_of(self, key: str) -> int | None:
        for s, keys in self._s_buckets.items():
            if key in keys:
                return s
        return None

    def s_bucket_members(self, s: int) -> list[str]:
        return list(self._s_buckets.get(s, []))


def heisenberg_sum(catalog: CatalogAccessor, m: int, n: int) -> LieSuperalgebra:
    """H(1,0) + A(m-3|n); for (3|0) this is H(1,0) itself."""
    if m < 3 or n < 0:
        raise CatalogError(f"H(1,0)+A(m-3|n) needs m >= 3 and n >= 0, got ({m}|{n})")
    heisenberg = catalog.build("H(1,0)")
    if m == 3 and n == 0:
        return heisenberg
    return direct_sum(heisenberg, abelian(m - 3, n))


@lru_cache(maxsize=1)
def default_catalog() -> CatalogAccessor:
    return CatalogAccessor()


def catalog_get(key: str, **params: Any) -> LieSuperalgebra:
    """Build a catalog algebra from the packaged catalog (see CatalogAccessor.build)."""
    return default_catalog().build(key, **params)


def catalog_list() -> list[CatalogEntry]:
    return default_catalog().entries()


# =========================================================================
# PARAMETER SCANS
# =========================================================================


@dataclass
class ScanRow:
    """Multiplier dims of a one-parameter family at one value of p."""

    p: Scalar
    dims: tuple[int, int]
    exceptional: bool = False
    oracle_dims: tuple[int, int] | None = None  # set for exceptional rows

    @property
    def confirmed(self) -> bool:
        return self.oracle_dims is None or self.oracle_dims == self.dims


def parameter_scan(key: str, values: Iterable[Any], catalog: CatalogAccessor | None = None) -> list[ScanRow]:
    """
    Multiplier dims of a p-family over the given values.

    The generic dims are the most frequent ones in the scan (first
    occurrence breaks ties). Rows with other dims are flagged as
    exceptional and recomputed with the cochain oracle.

    Raises:
        CatalogError: If the entry has no parameter p, or a value is not > 0
    """
    catalog = catalog or default_catalog()
    if not catalog.entry(key).parameterized:
        raise CatalogError(f"entry '{key}' is not a parameterized entry")

    rows = []
    for raw in values:
        p = _positive_parameter(raw)
        L = catalog.build(key, p=p)
        rows.append(ScanRow(p=p, dims=schur_multiplier(L).dims))
    if not rows:
        return rows

    generic = Counter(row.dims for row in rows).most_common(1)[0][0]
    for row in rows:
        if row.dims != generic:
            row.exceptional = True
            row.oracle_dims = schur_multiplier_cochain_oracle(catalog.build(key, p=row.p))
            log.info("%s: exceptional p=%s with dims %s", key, format_scalar(row.p), row.dims)
    return rows
