import math
import random

import pytest

import indpoly


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def test_smallest_paths():
    assert indpoly.independence_polynomial(1, []) == [1, 1]
    assert indpoly.independence_polynomial(2, [(0, 1)]) == [2, 1]
    assert indpoly.independence_polynomial(3, path_edges(3)) == [1, 3, 1]
    assert indpoly.independence_polynomial(4, path_edges(4)) == [3, 4, 1]


def test_star_and_forest():
    assert indpoly.independence_polynomial(4, [(0, 1), (0, 2), (0, 3)]) == [1, 3, 4, 1]
    # P2 + P1 is a forest: (1 + 2x)(1 + x).
    assert indpoly.independence_polynomial(3, [(0, 1)], forest=True) == [2, 3, 1]
    with pytest.raises(ValueError):
        indpoly.independence_polynomial(3, [(0, 1)])  # disconnected, no flag


def test_cycle_rejected():
    square = [(0, 1), (1, 2), (2, 3), (3, 0)]
    with pytest.raises(ValueError):
        indpoly.independence_polynomial(4, square)
    with pytest.raises(ValueError):
        indpoly.independence_polynomial(4, square, forest=True)


def test_record_counters():
    record = indpoly.compute_record(5, path_edges(5))
    assert record["coefficients"] == [1, 6, 5, 1]
    assert record["alpha"] == 3
    assert record["n"] == 5
    assert record["vertex_visits"] == 5
    assert record["edge_explorations"] == 4
    assert record["poly_mul_scalar_ops"] > 0
    assert record["polynomial"] == "x^3 + 6x^2 + 5x + 1"


def test_matches_brute_force_on_random_trees():
    rng = random.Random(20240814)
    for _ in range(25):
        n = rng.randrange(1, 15)
        edges = indpoly.random_tree(n, rng.getrandbits(63))
        assert indpoly.independence_polynomial(n, edges) == \
            indpoly.brute_force_polynomial(n, edges)


def test_evaluate_counts_independent_sets():
    # I(P_n; 1) follows the Fibonacci numbers.
    fib = [0, 1]
    for _ in range(60):
        fib.append(fib[-1] + fib[-2])
    for n in (1, 2, 3, 10, 50):
        assert indpoly.evaluate(n, path_edges(n), 1) == fib[n + 2]
    assert indpoly.evaluate(10, path_edges(10), 1) == 144


def test_independence_number():
    assert indpoly.independence_number(5, path_edges(5)) == 3
    star = [(0, i) for i in range(1, 10)]
    assert indpoly.independence_number(10, star) == 9


def test_big_coefficients_are_exact():
    # A star with 200 leaves: I = (1 + x)^200 + x, far beyond 64-bit range.
    star = [(0, i) for i in range(1, 201)]
    coeffs = indpoly.independence_polynomial(201, star)
    assert len(coeffs) == 201
    ascending = coeffs[::-1]
    for k in (0, 1, 2, 50, 100, 200):
        expected = math.comb(200, k) + (1 if k == 1 else 0)
        assert ascending[k] == expected
    assert indpoly.evaluate(201, star, 1) == 2**200 + 1


def test_closed_forms():
    assert indpoly.path_polynomial(5) == [1, 6, 5, 1]
    assert indpoly.star_polynomial(3) == [1, 3, 4, 1]
    for n in range(1, 30):
        assert indpoly.independence_polynomial(n, path_edges(n)) == \
            indpoly.path_polynomial(n)


def test_prufer_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(3, 12)
        seq = [rng.randrange(n) for _ in range(n - 2)]
        edges = indpoly.prufer_decode(seq, n)
        assert len(edges) == n - 1
        assert indpoly.prufer_encode(n, edges) == seq


def test_enumerate_trees():
    assert len(indpoly.enumerate_trees(2)) == 1
    assert len(indpoly.enumerate_trees(4)) == 16
    assert len(indpoly.enumerate_trees(6)) == 1296
    seen = {tuple(edges) for edges in indpoly.enumerate_trees(5)}
    assert len(seen) == 125


def test_edge_list_text():
    n, edges = indpoly.parse_edge_list("3\n0 1\n1 2\n")
    assert n == 3
    assert edges == [(0, 1), (1, 2)]
    assert indpoly.format_edge_list(n, edges) == "3\n0 1\n1 2\n"
    with pytest.raises(ValueError):
        indpoly.parse_edge_list("not a graph")
