"""Regenerate the polytope files under fixtures/.

Run from the repository root: python3 scripts/make_fixtures.py
"""

from pathlib import Path

from latcayley import cayley_sum, dilate, from_vertices, minkowski_sum, save_polytope

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def P(*verts):
    return from_vertices(verts)


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    ex19_p1 = P((1, 0), (0, 1))
    ex19_p2 = P((1, 1), (-1, -1))
    ex24_p1 = P((0, 0), (1, 2))
    ex24_p2 = P((0, 0), (1, 0))
    polys = {
        "segment": P((0,), (3,)),
        "unit_square": P((0, 0), (1, 0), (0, 1), (1, 1)),
        "unit_cube": P((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1),
                       (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)),
        "simplex_2d": P((0, 0), (1, 0), (0, 1)),
        "simplex_3d": P((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)),
        "reeve": P((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)),
        "reeve_4": P((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 4)),
        "ex19_p1": ex19_p1,
        "ex19_p2": ex19_p2,
        "ex19_minkowski": minkowski_sum([ex19_p1, ex19_p2]),
        "ex19_cayley": cayley_sum([ex19_p1, ex19_p2]),
        "ex24_p1": ex24_p1,
        "ex24_p2": ex24_p2,
        "ex24_cayley": cayley_sum([ex24_p1, ex24_p2]),
        "double_simplex_2d": dilate(P((0, 0), (1, 0), (0, 1)), 2),
    }
    for name, poly in sorted(polys.items()):
        save_polytope(poly, FIXTURES / f"{name}.json", name=name)
        print(f"fixtures/{name}.json: dim {poly.dim}, {len(poly.vertices)} vertices")


if __name__ == "__main__":
    main()
