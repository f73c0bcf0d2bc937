import pathlib
import random

from basilica.cli import main
from basilica.element import equal, generator, parse_element, reduce
from basilica.render import render_diagram, render_element
from basilica.diagram import base_diagram
from basilica.words import random_element

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out.strip()


def test_eval_half_rotation(capsys):
    assert run(capsys, "eval", "--word", "d", "--angle", "0") == (0, "1/2")


def test_recognize_rejects_third_rotation(capsys):
    code, out = run(capsys, "recognize", "--pl", "0:1/3")
    assert code == 2
    assert out == "REJECT ArcNotPreserved {1/3,2/3}"


def test_reduce_identity_is_fixed(capsys):
    text = "[.,.,.,. ; .,.,.,. ; 0]"
    assert run(capsys, "reduce", "--element", text) == (0, text)


def test_parse_errors_exit_one(capsys):
    assert run(capsys, "reduce", "--element", "[junk]")[0] == 1
    assert run(capsys, "eval", "--word", "q", "--angle", "0")[0] == 1
    assert run(capsys, "eval", "--word", "d", "--angle", "1/5")[0] == 1


def test_compose_invert_word_pipeline(capsys):
    _, a = run(capsys, "word", "--word", "a b")
    _, ainv = run(capsys, "invert", "--element", a)
    code, out = run(capsys, "compose", "--element", a, "--element", ainv)
    assert code == 0
    assert parse_element(out) == reduce(parse_element("[.,.,.,. ; .,.,.,. ; 0]"))


def test_decompose_roundtrip_via_cli(capsys):
    _, e = run(capsys, "word", "--word", "g b' a")
    code, word = run(capsys, "decompose", "--element", e)
    assert code == 0
    _, back = run(capsys, "word", "--word", word)
    assert equal(parse_element(back), parse_element(e))


def test_tau_verbs(capsys):
    _, b = run(capsys, "word", "--word", "b")
    code, tp = run(capsys, "tau", "--element", b)
    assert (code, tp) == (0, "[.,(.,.) ; (.,.),. ; 0]")
    code, back = run(capsys, "tau", "--inverse", "--treepair", tp)
    assert code == 0
    assert equal(parse_element(back), generator("beta"))
    code, _ = run(capsys, "tau", "--element", "[.,(.,.,.),.,. ; .,.,.,(.,.,.) ; 5]")
    assert code == 2


def test_gap_and_abelianize(capsys):
    assert run(capsys, "abelianize", "--word", "a b a")[1] == "0"
    assert run(capsys, "abelianize", "--word", "a")[1] == "1"
    code, word = run(capsys, "gap", "--gap", "behind {5/12,7/12}")
    assert code == 0 and word
    code, img = run(capsys, "gap", "--gap", "central", "--word", "a")
    assert (code, img) == (0, "behind {1/6,5/6}")
    assert run(capsys, "gap", "--gap", "behind {1/6,1/3}")[0] == 2


def test_golden_random_element(capsys):
    golden = (DATA / "random_seed42_len8.txt").read_text().strip()
    assert run(capsys, "random", "--seed", "42", "--length", "8") == (0, golden)


def test_random_corpus_roundtrips():
    from basilica.membership import roundtrip

    rng = random.Random(61)
    for _ in range(20):
        e = reduce(random_element(rng.randrange(10 ** 6), rng.randrange(9)))
        assert roundtrip(e) == e


def test_render_base_diagram_counts():
    svg = render_diagram(base_diagram())
    assert svg.count('<path class="arc"') == 2
    assert svg.count('<circle class="boundary"') == 1
    assert svg.count('<circle class="dot"') == 0


def test_render_element_panels():
    svg = render_element(generator("alpha"))
    assert svg.count('<circle class="boundary"') == 2
    assert svg.count('<path class="arc"') == 6  # three arcs per panel
    assert svg.count('<circle class="dot"') == 2


def test_render_is_deterministic(capsys):
    one = render_element(generator("gamma"))
    two = render_element(generator("gamma"))
    assert one == two
    code, out = run(capsys, "render", "--diagram", ".,.,.,.")
    assert code == 0 and out.startswith("<svg")


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "out.svg"
    code = main(["render", "--diagram", ".,.,.,.", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_text() == render_diagram(base_diagram())
