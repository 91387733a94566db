#!/usr/bin/env python3
"""Import the compiled extension module and spot-check its surface.

Build the module first (`cargo build -p parataxi-python`), then run this
script from anywhere; it copies the shared library next to a temp dir as
`parataxi.so` so the interpreter can import it by module name.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "debug" / "libparataxi.so",
        REPO / "target" / "release" / "libparataxi.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("build the extension first: cargo build -p parataxi-python")
    workdir = Path(tempfile.mkdtemp(prefix="parataxi-"))
    shutil.copy2(built[0], workdir / "parataxi.so")
    sys.path.insert(0, str(workdir))
    import parataxi

    return parataxi


def main():
    m = load_module()

    # Operators and the parabola partition.
    assert m.apply_op("lp", (0, 0)) == (1, 0)
    assert m.apply_op("lpp", (1, 0)) == (1, 3)
    assert m.tilde_op("lp") == "lpp"
    assert m.tilde_op("mr") == "mu"
    assert m.reflect_diag((3, -5)) == (-5, 3)
    assert m.parabola_index((0, 0)) == 0
    assert m.parabola_index((0, 2)) == 1
    assert m.stairway((0, 0), "lp", 4) == [(0, 0), (1, 0), (1, 3), (6, 3), (6, 10)]

    # Oracle.
    ball = m.ball_points(13)
    assert len(ball) == 1987
    assert ball[0] == (0, 0, 0)
    assert sum(1 for (_, _, d) in ball if d == 12) == 350
    assert m.pc_distance((0, 0), (1, 3), 5) == 2
    assert m.pc_distance((0, 0), (0, -5), 3) is None

    # Closed forms.
    assert m.ball_count(13) == 1987
    assert m.boundary_count(12) == 350
    assert m.width_sq(5) == 50
    dd = m.diameter_data(2)
    assert dd["q"] == (3, 1) and dd["p"] == (-2, 0) and dd["diam_sq"] == 26
    assert m.sequence("ball", 5) == [1, 5, 15, 37, 75, 135]
    assert m.sequence("diam_sq", 9) == [0, 4, 26, 106, 306, 680, 1384, 2500, 4122, 6570]

    # Cross-sections and the recursion.
    assert m.cross_section(9, 5) == [(-18, -12), (17, 23)]
    assert m.cross_section(9, -9) == [(0, 45)]
    assert m.cross_section(7, 4) == []
    assert m.neg_section(9, 5) == [(-18, -12)]
    assert m.neg_section_recursive(9, 5) == m.neg_section(9, 5)
    assert m.zf(3) == -4 and m.zf(-3) == 4
    assert m.zk(5, 3) == -8

    # Chords.
    hist = m.chord_histogram(6, (-6, -6))
    assert hist["counts"] == {2: 7, 4: 13, 6: 32, 8: 29, 10: 4}
    assert hist["total"] == 85
    assert m.pc_diameter(6) == 10
    assert m.antipode_count(6, (-6, -6)) == 4
    scan = m.parity_scan(3)
    assert scan["all_even"] is True and scan["witnesses"] == []

    # Rendering.
    svg = m.render_ball_svg(6, [6])
    assert svg.count("<circle") == 221 and svg.count('class="h0"') == 86
    assert m.render_chords_svg(6, (-6, -6)).count("<circle") == 86
    assert m.render_parabolas_svg(-2, 2, -6, 6).count("<path") == 5

    # Error mapping.
    try:
        m.ball_count(-1)
    except ValueError:
        pass
    else:
        raise AssertionError("negative radius should raise ValueError")

    print("smoke test passed: 24 bindings exercised")


if __name__ == "__main__":
    main()
