import random
from fractions import Fraction
from pathlib import Path

import networkx as nx
from faker import Faker

from evpkit.numeric import LinearSystem
from evpkit.space import Instance, build_instance

fake = Faker()

DATA_DIR = Path(__file__).resolve().parents[2] / "data"
FLAGSHIP = DATA_DIR / "simplex_segment.json"


def random_rational(rng: random.Random, low: int = -5, high: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(low, high), rng.randint(1, max_den))


def create_labels(n: int, seed: int = 0) -> list[str]:
    fake.seed_instance(seed)
    return [f"{fake.word()}-{i}" for i in range(n)]


def create_metric(rng: random.Random, n: int) -> list[list[Fraction]]:
    """Shortest-path metric of a complete graph with random positive edge lengths."""
    graph = nx.complete_graph(n)
    for u, v in graph.edges():
        graph[u][v]["weight"] = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    lengths = dict(nx.all_pairs_dijkstra_path_length(graph))
    return [[Fraction(lengths[i][j]) if i != j else Fraction(0) for j in range(n)] for i in range(n)]


def create_cone(rng: random.Random, m: int, max_generators: int = 5) -> list[list[Fraction]]:
    """Generators of a pointed cone: all of them lie strictly on the positive side of a fixed w > 0."""
    w = [rng.randint(1, 3) for _ in range(m)]
    generators = [[Fraction(int(i == c)) for i in range(m)] for c in range(m)] if rng.random() < 0.3 else []
    target = rng.randint(1, max_generators)
    while len(generators) < target:
        g = [Fraction(rng.randint(-2, 3)) for _ in range(m)]
        if sum(a * b for a, b in zip(w, g)) > 0:
            generators.append(g)
    return generators


def create_directions(
    rng: random.Random, generators: list[list[Fraction]], max_vertices: int = 4
) -> list[list[Fraction]]:
    """Vertices of D drawn as nonzero nonnegative combinations of the cone generators."""
    m = len(generators[0])
    vertices = []
    for _ in range(rng.randint(1, max_vertices)):
        weights = [Fraction(rng.randint(0, 2), rng.randint(1, 2)) for _ in generators]
        if not any(weights):
            weights[rng.randrange(len(weights))] = Fraction(1)
        vertices.append([sum((w * g[c] for w, g in zip(weights, generators)), Fraction(0)) for c in range(m)])
    return vertices


def create_instance(
    seed: int,
    n: int | None = None,
    m: int | None = None,
    epsilon: Fraction | int = 1,
    max_points: int = 8,
    max_dim: int = 3,
) -> Instance:
    """A random valid instance: D lies in K and both sit on the positive side of one functional."""
    rng = random.Random(seed)
    n = rng.randint(1, max_points) if n is None else n
    m = rng.randint(1, max_dim) if m is None else m
    generators = create_cone(rng, m)
    vertices = create_directions(rng, generators)
    return build_instance(
        labels=create_labels(n, seed),
        dist=create_metric(rng, n),
        f=[[random_rational(rng) for _ in range(m)] for _ in range(n)],
        cone_generators=generators,
        d_vertices=vertices,
        epsilon=epsilon,
    )


def create_scalar_instance(
    seed: int, n: int | None = None, epsilon: Fraction | int = 1, max_points: int = 8
) -> Instance:
    """m = 1, K = [0, oo), D = {1}: the setting of the classical principle."""
    rng = random.Random(seed)
    n = rng.randint(1, max_points) if n is None else n
    return build_instance(
        labels=create_labels(n, seed),
        dist=create_metric(rng, n),
        f=[[random_rational(rng, -10, 10)] for _ in range(n)],
        cone_generators=[[1]],
        d_vertices=[[1]],
        epsilon=epsilon,
    )


def create_system(rng: random.Random, max_variables: int = 6, max_rows: int = 8) -> LinearSystem:
    """Small random equality system; roughly half of them are feasible by construction."""
    n = rng.randint(1, max_variables)
    rows = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(rng.randint(1, max_rows))]
    nonnegative = [rng.random() < 0.8 for _ in range(n)]
    if rng.random() < 0.5:
        point = [Fraction(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(n)]
        rhs = [sum((a * x for a, x in zip(row, point)), Fraction(0)) for row in rows]
    else:
        rhs = [Fraction(rng.randint(-4, 4)) for _ in rows]
    return LinearSystem.from_lists(rows, rhs, nonnegative)
