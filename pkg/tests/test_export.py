from conftest import corpus
from gentlekit.export import ar_dot, quiver_dot
from gentlekit.lattices import ar_quiver
from gentlekit.plotting import draw_ar_quiver, draw_quiver


def test_quiver_dot(proto):
    dot = quiver_dot(proto)
    assert dot.startswith('digraph "prototype" {')
    assert dot.count("style=dotted, dir=none, constraint=false") == 8
    assert '"arrow:a1" -> "arrow:a9"' in dot


def test_ar_dot(proto):
    dot = ar_dot(ar_quiver(proto))
    assert dot.count("shape=box") == 7
    assert dot.count("shape=ellipse") == 8
    assert dot.count("style=dashed") == 8


def test_figures(tmp_path, proto):
    q = draw_quiver(proto, tmp_path / "q.png")
    a = draw_ar_quiver(ar_quiver(proto), tmp_path / "sub" / "ar.png")
    for p in (q, a):
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    draw_quiver(corpus("two_loop"), tmp_path / "loop.png")
