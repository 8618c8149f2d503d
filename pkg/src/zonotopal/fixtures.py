"""Standard test instances shared by the tests, the acceptance suite and the CLI."""
from __future__ import annotations

import random
from importlib import resources

from .errors import RankDeficient
from .exact import Mat, Rat
from .fileio import parse_automorphisms, parse_graph, parse_matrix
from .space import LinearSpace, from_graph, make


def data_text(name: str) -> str:
    return resources.files("zonotopal").joinpath("data", name).read_text(encoding="utf-8")


def data_path(name: str):
    return resources.files("zonotopal").joinpath("data", name)


def B2() -> LinearSpace:
    return parse_matrix(data_text("b2.mat"))


def U23() -> LinearSpace:
    return parse_matrix(data_text("u23.mat"))


def K3() -> LinearSpace:
    return from_graph(parse_graph(data_text("k3.graph")), "cographical")


def DT() -> LinearSpace:
    return from_graph(parse_graph(data_text("dt.graph")), "cographical")


def K4(mode: str) -> LinearSpace:
    return from_graph(parse_graph(data_text("k4.graph")), mode)


def automorphisms(name: str):
    return parse_automorphisms(data_text(f"{name}.aut"))


def uniform(r: int, n: int) -> LinearSpace:
    """Vandermonde realization of ``U_{r,n}``: every r columns independent."""
    rows = [[Rat(j) ** i for j in range(1, n + 1)] for i in range(r)]
    return make([str(j) for j in range(1, n + 1)], Mat.from_rows(rows, ncols=n))


def random_space(seed: int, r: int = 3, n: int = 6) -> LinearSpace:
    """Full-rank ``r x n`` matrix with small random rational entries."""
    rng = random.Random(seed)
    while True:
        rows = [[Rat(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(r)]
        try:
            return make([str(j) for j in range(1, n + 1)], Mat.from_rows(rows, ncols=n))
        except RankDeficient:
            continue


def corpus() -> dict[str, LinearSpace]:
    """Named instances: the four fixtures, U_{r,n} for n <= 6, K4 both ways, 20 random."""
    out = {"B2": B2(), "U23": U23(), "K3": K3(), "DT": DT()}
    for n in range(1, 7):
        for r in range(n + 1):
            out[f"U{r},{n}"] = uniform(r, n)
    out["K4-graphical"] = K4("graphical")
    out["K4-cographical"] = K4("cographical")
    for seed in range(20):
        out[f"random-{seed}"] = random_space(seed)
    return out
