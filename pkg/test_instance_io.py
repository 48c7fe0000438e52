#!/usr/bin/env python3
"""
Pruebas de archivos de instancia y de specs de dominio.
"""
from fractions import Fraction

import pytest

from app.core import FiniteDistribution, Labelling, cube_domain, real_space_domain
from app.instance_io import format_point, parse_domain_spec, parse_point, read_instance, write_instance
from app.utils.error_handler import SpecParseError


def _write(tmp_path, text, name="inst.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestPoints:
    """Formato de puntos por tipo de dominio"""

    def test_real_space(self):
        assert format_point((Fraction(1, 2), Fraction(3)), "real-space") == "1/2,3"
        assert parse_point("1/2,3", "real-space") == (Fraction(1, 2), Fraction(3))

    def test_cube(self):
        assert format_point((1, 0, 1), "cube") == "101"
        assert parse_point("101", "cube") == (1, 0, 1)

    def test_bad_cube_point(self):
        with pytest.raises(SpecParseError):
            parse_point("102", "cube")

    def test_bad_rational(self):
        with pytest.raises(SpecParseError):
            parse_point("1,x", "real-line")


class TestInstanceFiles:
    """Lectura y escritura de instancias"""

    def test_write_then_read(self, tmp_path):
        S = real_space_domain([(1, 1), (2, 4), (3, 9)])
        D = FiniteDistribution(S, (Fraction(1, 4), Fraction(3, 4), Fraction(0)))
        f = Labelling.from_string(S, "010")
        path = str(tmp_path / "inst.txt")
        write_instance(path, D, f, header=["tres puntos"])
        D2, f2 = read_instance(path)
        assert D2 == D
        assert f2 == f

    def test_labels_are_optional(self, tmp_path):
        path = _write(tmp_path, "kind = cube\n[distribution]\n00 1/2\n11 1/2\n")
        D, f = read_instance(path)
        assert f is None
        assert D.domain == cube_domain([(0, 0), (1, 1)])

    def test_comments_and_blank_lines(self, tmp_path):
        path = _write(tmp_path, "# hola\n\nkind = poset  # tres\n[distribution]\n0 1/3\n1 1/3\n2 1/3\n[labels]\n011\n")
        D, f = read_instance(path)
        assert f.values == (0, 1, 1)
        assert D.weights == (Fraction(1, 3),) * 3

    @pytest.mark.parametrize("text", [
        "[distribution]\n0 1\n",
        "kind = torus\n[distribution]\n0 1\n",
        "kind = poset\n[distribution]\n0 1/2\n1 1/3\n",
        "kind = poset\n[distribution]\n0 half\n",
        "kind = poset\n[distribution]\n0\n",
        "kind = poset\n[distribution]\n0 1/2\n1 1/2\n[labels]\n0\n",
        "kind = poset\n",
    ])
    def test_malformed(self, tmp_path, text):
        with pytest.raises(SpecParseError):
            read_instance(_write(tmp_path, text))


class TestDomainSpecs:
    """Specs de dominio de la CLI"""

    def test_line(self):
        S = parse_domain_spec("line:size=5")
        assert len(S) == 5 and S.kind == "real-line"

    def test_moment(self):
        S = parse_domain_spec("moment:n=2,size=4")
        assert S.points[1] == (2, 4)

    def test_psi(self):
        assert len(parse_domain_spec("psi:n=2,size=6")) == 6

    def test_cube_is_seeded(self):
        assert parse_domain_spec("cube:n=6,size=10,seed=3") == parse_domain_spec("cube:n=6,size=10,seed=3")

    def test_full_cube_range_poset(self):
        assert len(parse_domain_spec("cube-full:n=3")) == 8
        assert parse_domain_spec("range:n=4").kind == "abstract"
        assert parse_domain_spec("poset:n=4").points == (0, 1, 2, 3)

    def test_from_file(self, tmp_path):
        path = _write(tmp_path, "kind = cube\n[distribution]\n00 1/2\n11 1/2\n")
        assert len(parse_domain_spec(f"@{path}")) == 2

    @pytest.mark.parametrize("spec", ["line", "line:size=x", "sphere:n=3", "moment:n=2"])
    def test_bad_specs(self, spec):
        with pytest.raises(SpecParseError):
            parse_domain_spec(spec)
