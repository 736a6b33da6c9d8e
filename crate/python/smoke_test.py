"""Smoke test for the flagstone Python module.

Build and install first, e.g.

    pip install maturin
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl

then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import flagstone


def main():
    g = flagstone.join_of_cycles(2, 8)
    assert g.n == 8 and g.edge_count() == 24
    assert flagstone.is_d_leveled(g, 3)["is_leveled"]
    assert flagstone.edge_bound_odd(8, 2) == Fraction(24)
    assert flagstone.f_vector(g) == [1, 8, 24, 32, 16]
    h = flagstone.h_vector(flagstone.f_vector(g), 3)
    assert h == [1, 4, 6, 4, 1]
    assert flagstone.gamma_vector(h) == [1, 0, 0]

    c5 = flagstone.cycle(5)
    assert flagstone.gamma_vector(flagstone.h_vector(flagstone.f_vector(c5), 1)) == [1, 1]
    assert flagstone.Graph.from_graph6(c5.to_graph6()) == c5
    assert flagstone.Graph.from_edge_list(c5.to_edge_list()) == c5

    report = flagstone.verify_theorem_instance(g, 2)
    assert report["bounds"]["thm_odd"]["equality"]
    assert not report["potential_counterexample"]

    g1, g2, holds, equality = flagstone.gamma_check(8, 24, 2)
    assert (g1, g2, holds, equality) == (0, 0, True, True)

    value, in_window = flagstone.bollobas_lower_bound(10, 30, 2)
    assert in_window and value == Fraction(200, 9)

    k = flagstone.complete_multipartite([5, 5])
    part = flagstone.extract_partition(k, 2, Fraction(0))
    assert sorted(map(sorted, part["witness"]["parts"])) == [list(range(5)), list(range(5, 10))]

    search = flagstone.exhaustive_search(1, 4, 6)
    assert [s["max_edges"] for s in search["summaries"]] == [4, 5, 6]

    try:
        flagstone.Graph(3, [(0, 3)])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range edge accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
