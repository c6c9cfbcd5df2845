from __future__ import annotations

from importlib.resources import files

import pytest

from ogpd.builders import fixtures, random_instance
from ogpd.fileformat import Document, FileFormatError, parse, serialize, single

KLEIN_OGQ = files("ogpd") / "data" / "klein.ogq"

SMALL = """\
groupoids:
  I:
    objects: [a, b]
    arrows: {t: [a, b], s: [b, a]}
    inverse: [[t, s]]
    compose: [[t, s, 'id:a'], [s, t, 'id:b']]
"""


def test_klein_file_matches_fixture():
    doc = parse(KLEIN_OGQ.read_text())
    fx = fixtures("klein_hlp")
    assert doc.groupoids["G"] == fx.G
    assert doc.functors["p"].mapping == fx.p.mapping
    assert doc.squares["square"].F.mapping == fx.square.F.mapping


def test_round_trip_of_fixtures():
    fx = fixtures("klein_hlp")
    doc = Document({"E": fx.E, "G": fx.G, "H": fx.H}, {"p": fx.p, "i": fx.i}, squares={"sq": fx.square})
    text = serialize(doc)
    again = parse(text)
    assert serialize(again) == text
    S = fixtures("example_vi").S
    assert parse(serialize(single(S, "S"))).groupoid() == S


@pytest.mark.parametrize("seed", range(5))
def test_round_trip_of_random_instances(seed):
    ri = random_instance(seed, with_interval=seed % 2 == 0)
    doc = Document({"G": ri.groupoid, "H": ri.functor.target}, {"theta": ri.functor})
    again = parse(serialize(doc))
    assert again.groupoids["G"] == ri.groupoid.relabel(written)
    assert again.functors["theta"].mapping == {written(a): written(b) for a, b in ri.functor.mapping.items()}


def written(a):
    """Ids that are not strings or integers come back as their string form."""
    return a if isinstance(a, (str, int)) else str(a)


def test_small_document():
    G = parse(SMALL).groupoid("I")
    assert len(G.arrows) == 4 and G.compose("t", "s") == "a"


def test_declared_identity_is_rejected():
    bad = SMALL.replace("arrows: {t: [a, b], s: [b, a]}", "arrows: {t: [a, b], s: [b, a], 'id:a': [a, a]}")
    with pytest.raises(FileFormatError) as err:
        parse(bad)
    assert err.value.line == 4


def test_errors_carry_position():
    bad = SMALL.replace("[t, s, 'id:a']", "[t, s, 'id:q']")
    with pytest.raises(FileFormatError) as err:
        parse(bad)
    assert err.value.line == 6 and err.value.column is not None
    assert "line 6" in str(err.value)


def test_duplicate_keys_are_rejected():
    with pytest.raises(FileFormatError, match="duplicate"):
        parse(SMALL + "  I:\n    objects: [c]\n")


def test_yaml_syntax_error():
    with pytest.raises(FileFormatError) as err:
        parse("groupoids: [\n")
    assert err.value.line is not None


def test_axiom_failure_needs_check():
    bad = SMALL.replace("[s, t, 'id:b']", "[s, t, 'id:a']")
    with pytest.raises(Exception):
        parse(bad)
    assert parse(bad, check=False).groupoids["I"] is not None


def test_actions_round_trip():
    from ogpd.action import canonical_action, random_action

    for act in (canonical_action(fixtures("klein_hlp").G), random_action(2)):
        doc = Document({"G": act.actor, "P": act.carrier}, actions={"act": act})
        again = parse(serialize(doc)).actions["act"]
        assert again.act == {(written(a), written(g)): written(b) for (a, g), b in act.act.items()}


def test_subgroupoid_section():
    text = SMALL + "subgroupoids:\n  ids:\n    of: I\n    arrows: ['id:a', 'id:b']\n"
    of, arrows = parse(text).subgroupoids["ids"]
    assert of == "I" and arrows == frozenset({"a", "b"})
