"""
Tests for the YAML catalog, its builders and parameter scans.
"""

import pytest
import yaml
from sympy import QQ

from superschur.catalog import (
    CatalogAccessor,
    CatalogError,
    CatalogValidationError,
    abelian,
    catalog_get,
    parameter_scan,
)
from superschur.superalg import is_maximal_class, is_nilpotent


class TestEntries:
    """Tests for entry loading and claims."""

    def test_all_entries_loaded(self, catalog):
        keys = catalog.keys()
        assert len(keys) == 19
        assert keys[0] == "L_{1,2}^{(1)}"
        assert {"E^{22}", "H(1,0)", "H(0,1)", "A", "H(1,0)+A", "L_{3,1}^{(1)}"} <= set(keys)

    def test_claims_are_data(self, catalog):
        entry = catalog.entry("E^{22}")
        assert entry.claimed_multiplier_dim == 6
        assert entry.claimed_type_label == "A(5|1)"
        assert entry.claimed_s_bucket == 5
        assert entry.tabulated

    def test_auxiliary_entries_untabulated(self, catalog):
        assert not catalog.entry("H(0,1)").tabulated
        assert catalog.entry("L_{3,1}^{(1)}").expect_nilpotent is False

    def test_expectations_match_structure(self, catalog):
        """expect_maximal_class and expect_nilpotent agree with the algebra."""
        for entry in catalog.entries():
            L = catalog.build(entry.key)
            assert is_nilpotent(L) == entry.expect_nilpotent, entry.key
            if entry.expect_maximal_class:
                assert is_maximal_class(L), entry.key

    def test_unknown_key(self, catalog):
        with pytest.raises(CatalogError, match="unknown catalog key"):
            catalog.entry("L_{9,9}")


class TestBuild:
    """Tests for building algebras with parameters."""

    def test_l22_11_parameter(self, catalog):
        """[α,β] = pa + pb with p = 2."""
        L = catalog.build("L_{2,2}^{(11)}", p="2")
        assert L.name == "L_{2,2}^{(11)}(p=2)"
        assert L.structure(2, 3) == (2, 2, 0, 0)

    def test_l22_12_default_parameter(self, catalog):
        """The entry default p = 1 gives [α,β] = a - b."""
        L = catalog.build("L_{2,2}^{(12)}")
        assert L.structure(2, 3) == (1, -1, 0, 0)

    def test_rational_parameter(self, catalog):
        L = catalog.build("L_{2,2}^{(11)}", p=QQ(1, 3))
        assert L.structure(2, 3) == (QQ(1, 3), QQ(1, 3), 0, 0)

    def test_parameter_must_be_positive(self, catalog):
        with pytest.raises(CatalogError, match="p>0"):
            catalog.build("L_{2,2}^{(11)}", p=0)
        with pytest.raises(CatalogError, match="p>0"):
            catalog.build("L_{2,2}^{(12)}", p="-1/2")

    def test_float_parameter_refused(self, catalog):
        with pytest.raises(CatalogError, match="floating point"):
            catalog.build("L_{2,2}^{(11)}", p=0.5)

    def test_unexpected_parameter(self, catalog):
        with pytest.raises(CatalogError, match="takes no parameter"):
            catalog.build("E^{22}", p=1)

    def test_abelian_builder(self, catalog):
        L = catalog.build("A", m=2, n=1)
        assert L.dims == (2, 1)
        assert L.names == ("x1", "x2", "ξ1")
        with pytest.raises(CatalogError):
            abelian(0, 0)

    def test_heisenberg_sum_builder(self, catalog):
        assert catalog.build("H(1,0)+A", m=3, n=0).name == "H(1,0)"
        L = catalog.build("H(1,0)+A", m=5, n=2)
        assert L.dims == (5, 2)
        assert L.name == "H(1,0)⊕A(2|2)"
        with pytest.raises(CatalogError, match="m >= 3"):
            catalog.build("H(1,0)+A", m=2, n=1)

    def test_catalog_get(self):
        assert catalog_get("H(0,1)").dims == (1, 1)


class TestBuckets:
    """Tests for the published s-bucket placement."""

    def test_bucket_of(self, catalog):
        assert catalog.s_bucket_of("E^{22}") == 5
        assert catalog.s_bucket_of("L_{1,2}^{(3)}") == 2
        assert catalog.s_bucket_of("H(1,0)") is None

    def test_bucket_members(self, catalog):
        assert catalog.s_bucket_members(8) == ["(D^{15}+A_{1,1})^2", "(D^{15}+A_{1,1})^4"]
        assert catalog.s_bucket_members(1) == []
        assert sorted(catalog.s_buckets) == list(range(1, 11))


class TestValidation:
    """Catalog files are validated on load."""

    @pytest.fixture
    def write_catalog(self, tmp_path):
        def write(entries, buckets=None):
            path = tmp_path / "catalog.yaml"
            path.write_text(
                yaml.safe_dump({"version": 1, "entries": entries, "s_buckets": buckets or {}}, allow_unicode=True),
                encoding="utf-8",
            )
            return path

        return write

    def test_valid_file(self, write_catalog):
        path = write_catalog(
            [
                {
                    "key": "H",
                    "kind": "table",
                    "even": ["e1", "e2", "e3"],
                    "odd": [],
                    "brackets": [{"left": "e1", "right": "e2", "value": {"e3": 1}}],
                }
            ]
        )
        assert CatalogAccessor(path).keys() == ["H"]

    def test_problems_collected(self, write_catalog):
        """Unknown names, floats and bucket mismatches are all reported."""
        path = write_catalog(
            [
                {
                    "key": "bad",
                    "kind": "table",
                    "even": ["a"],
                    "odd": ["α"],
                    "brackets": [
                        {"left": "α", "right": "α", "value": {"z": 1}},
                        {"left": "a", "right": "α", "value": {"α": 0.5}},
                    ],
                    "claims": {"dim": 1, "type": [1, 0], "s_bucket": 2},
                },
                {"key": "weird", "kind": "graph"},
            ],
            buckets={2: ["missing"]},
        )
        with pytest.raises(CatalogValidationError) as excinfo:
            CatalogAccessor(path)
        messages = [str(p) for p in excinfo.value.problems]
        assert any("unknown basis name 'z'" in m for m in messages)
        assert any("floating point" in m for m in messages)
        assert any("must be one of" in m for m in messages)
        assert any("bucket 2 lists an unknown key" in m for m in messages)
        assert any("disagrees with bucket listing" in m for m in messages)

    def test_axiom_violation_reported(self, write_catalog):
        """[α,β] = α is not parity homogeneous."""
        path = write_catalog(
            [
                {
                    "key": "inhomogeneous",
                    "kind": "table",
                    "even": ["a"],
                    "odd": ["α", "β"],
                    "brackets": [{"left": "α", "right": "β", "value": {"α": 1}}],
                }
            ]
        )
        with pytest.raises(CatalogValidationError, match="axiom violated"):
            CatalogAccessor(path)

    def test_validation_can_be_skipped(self, write_catalog):
        path = write_catalog([{"key": "weird", "kind": "graph"}])
        accessor = CatalogAccessor(path, validate=False)
        assert accessor.keys() == ["weird"]
        assert accessor.validate()

    def test_packaged_catalog_valid(self, catalog):
        assert catalog.validate() == []


class TestParameterScan:
    """Tests for scans of the one-parameter families."""

    def test_l22_11_exceptional_half(self, catalog):
        rows = parameter_scan("L_{2,2}^{(11)}", ["1/3", "1/2", "1", "2", "3"], catalog)
        assert [row.exceptional for row in rows] == [False, True, False, False, False]
        half = rows[1]
        assert half.p == QQ(1, 2)
        assert half.dims == (1, 1)
        assert half.oracle_dims == (1, 1)
        assert half.confirmed
        assert all(row.dims == (1, 0) for row in rows if not row.exceptional)

    def test_l22_12_constant(self, catalog):
        rows = parameter_scan("L_{2,2}^{(12)}", ["1/2", "1", "7/3"], catalog)
        assert not any(row.exceptional for row in rows)

    def test_empty_scan(self, catalog):
        assert parameter_scan("L_{2,2}^{(12)}", [], catalog) == []

    def test_not_parameterized(self, catalog):
        with pytest.raises(CatalogError, match="not a parameterized entry"):
            parameter_scan("E^{22}", ["1"], catalog)

    def test_bad_value(self, catalog):
        with pytest.raises(CatalogError, match="p>0"):
            parameter_scan("L_{2,2}^{(11)}", ["0"], catalog)
