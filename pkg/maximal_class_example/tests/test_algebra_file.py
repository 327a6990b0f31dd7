"""
Tests for reading and writing algebra files.
"""

import json

import pytest
from sympy import QQ

from superschur.algebra_file import (
    AlgebraFileError,
    algebra_from_dict,
    algebra_to_dict,
    dumps_algebra,
    loads_algebra,
    read_algebra,
    write_algebra,
)
from superschur.homology import schur_multiplier
from superschur.superalg import validate


def document(brackets, even=("a",), odd=("α", "β"), name="test"):
    return {"name": name, "even_basis": list(even), "odd_basis": list(odd), "brackets": brackets}


class TestRead:
    """Tests for the example files."""

    def test_l12_3(self, algebras_dir):
        L = read_algebra(algebras_dir / "l12_3.json")
        assert L.name == "L_{1,2}^{(3)}"
        assert L.dims == (1, 2)
        assert L.relations() == ["[a,β]=α"]

    def test_examples_match_catalog(self, catalog, algebras_dir):
        """The example files hold the catalog structure constants."""
        for filename, key, params in (
            ("e22.json", "E^{22}", {}),
            ("d15_4.json", "(D^{15}+A_{1,1})^4", {}),
            ("heisenberg.json", "H(1,0)", {}),
            ("l22_11_half.json", "L_{2,2}^{(11)}", {"p": "1/2"}),
        ):
            L = read_algebra(algebras_dir / filename)
            assert L.brackets == catalog.build(key, **params).brackets, filename

    def test_half_parameter_multiplier(self, algebras_dir):
        assert schur_multiplier(read_algebra(algebras_dir / "l22_11_half.json")).dims == (1, 1)

    def test_inhomogeneous_loads_but_fails_axioms(self, algebras_dir):
        """Axiom failures are not parse errors."""
        L = read_algebra(algebras_dir / "inhomogeneous.json")
        report = validate(L)
        assert not report.accepted
        assert not report.homogeneity_ok

    def test_missing_file(self, tmp_path):
        with pytest.raises(AlgebraFileError, match="cannot read file"):
            read_algebra(tmp_path / "absent.json")


class TestParseErrors:
    """Malformed files are rejected with located messages."""

    def test_float_string(self, algebras_dir):
        with pytest.raises(AlgebraFileError) as excinfo:
            read_algebra(algebras_dir / "float_coefficient.json")
        (error,) = excinfo.value.errors
        assert error.path == "brackets[0].value[0].coeff"
        assert "floating point not accepted" in error.message

    def test_float_number(self):
        doc = document([{"left": "α", "right": "α", "value": [{"basis": "a", "coeff": 0.5}]}])
        with pytest.raises(AlgebraFileError, match="floating point not accepted"):
            algebra_from_dict(doc)

    def test_invalid_json_line(self):
        text = '{\n  "name": "x",\n  "even_basis": [a]\n}'
        with pytest.raises(AlgebraFileError) as excinfo:
            loads_algebra(text)
        (error,) = excinfo.value.errors
        assert error.line == 3
        assert "invalid JSON" in error.message
        assert str(error).startswith("line 3: ")

    def test_errors_collected(self):
        """Every bad relation is reported, not only the first."""
        doc = document(
            [
                {"left": "z", "right": "α", "value": []},
                {"left": "a", "right": "a", "value": []},
                {"left": "β", "right": "α", "value": []},
                {"left": "α", "right": "α", "value": [{"basis": "a", "coeff": "1/0"}]},
            ]
        )
        with pytest.raises(AlgebraFileError) as excinfo:
            algebra_from_dict(doc, "doc.json")
        messages = [e.message for e in excinfo.value.errors]
        assert len(messages) == 4
        assert "unknown basis name 'z'" in messages[0]
        assert "even square" in messages[1]
        assert "must not come after" in messages[2]
        assert "zero denominator" in messages[3]
        assert str(excinfo.value).startswith("doc.json: 4 error(s)")

    def test_repeated_pair(self):
        doc = document(
            [
                {"left": "α", "right": "α", "value": [{"basis": "a", "coeff": "1"}]},
                {"left": "α", "right": "α", "value": [{"basis": "a", "coeff": "2"}]},
            ]
        )
        with pytest.raises(AlgebraFileError, match="given more than once"):
            algebra_from_dict(doc)

    def test_duplicate_names(self):
        with pytest.raises(AlgebraFileError, match="duplicate basis name 'a'"):
            algebra_from_dict(document([], even=("a",), odd=("a",)))

    def test_empty_algebra(self):
        with pytest.raises(AlgebraFileError, match="m\\+n >= 1"):
            algebra_from_dict(document([], even=(), odd=()))

    def test_top_level(self):
        with pytest.raises(AlgebraFileError, match="top level must be an object"):
            loads_algebra("[]")


class TestWrite:
    """Tests for serialization."""

    def test_exact_coefficients_written(self, catalog):
        L = catalog.build("L_{2,2}^{(11)}", p="1/2")
        data = algebra_to_dict(L)
        (relation,) = [b for b in data["brackets"] if (b["left"], b["right"]) == ("α", "β")]
        assert relation["value"] == [{"basis": "a", "coeff": "1/2"}, {"basis": "b", "coeff": "1/2"}]

    def test_unicode_kept(self, catalog):
        text = dumps_algebra(catalog.build("L_{1,2}^{(3)}"))
        assert '"α"' in text
        assert json.loads(text)["odd_basis"] == ["α", "β"]

    @pytest.mark.parametrize("key,params", [("(D^{15}+A_{1,1})^4", {}), ("L_{2,2}^{(11)}", {"p": "1/2"})])
    def test_written_file_reads_back(self, catalog, tmp_path, key, params):
        L = catalog.build(key, **params)
        path = tmp_path / "algebra.json"
        write_algebra(L, path)
        K = read_algebra(path)
        assert K.name == L.name
        assert K.brackets == L.brackets

    def test_zero_bracket_dropped(self):
        """A relation whose value is all zeros is not stored."""
        L = loads_algebra(json.dumps(document([{"left": "a", "right": "β", "value": [{"basis": "α", "coeff": "0"}]}])))
        assert L.brackets == {}
        assert algebra_to_dict(L)["brackets"] == []
        assert L.structure(0, 2) == (QQ(0), QQ(0), QQ(0))
