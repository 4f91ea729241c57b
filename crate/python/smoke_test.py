"""Smoke test for the hamchain Python module.

Build and install first, e.g. `pip install ./crates/python`, then run
`python python/smoke_test.py`.
"""

import hamchain


def main():
    k4 = hamchain.Graph.builtin("k4")
    assert k4.vertex_count == 4 and k4.edge_count == 6 and k4.is_cubic()
    assert len(k4.hamilton_cycles()) == 3
    assert all(count == 2 for _, count in k4.edge_parity())

    first, second = k4.second_cycle("01")
    assert first != second and "01" in first and "01" in second

    tq = hamchain.Graph.builtin("tutte-quotient")
    assert len(tq.hamilton_cycles()) == 6
    assert tq.count_through(require=["e_x", "e_y"]) == 0

    table = tq.incidence("w", "v")
    assert table["pair_sums_even"] and table["uniform_parity"]
    assert sum(map(sum, table["multiplicity"])) == 6

    tri = hamchain.Graph(["a", "b", "c"], [("ab", "a", "b"), (None, "b", "c"), (None, "c", "a")])
    assert len(tri.hamilton_cycles()) == 1
    again = hamchain.Graph.from_json(tri.to_json())
    assert again.edge_count == 3

    assert hamchain.Graph.replacement(1).vertex_count == 30

    expected = {
        "chain-G": ("Infinite", None),
        "chain-H": ("Finite", 2),
        "chain-Hprime": ("Finite", 1),
        "chain-ladder": ("Finite", 2),
    }
    for name, count in expected.items():
        chain = hamchain.Chain.builtin(name)
        assert chain.count() == count, (name, chain.count())
        assert chain.consistent(1)
        reloaded = hamchain.Chain.from_json(chain.to_json())
        assert reloaded.count() == count

    report = hamchain.Chain.builtin("chain-H").analyze(certificates=4)
    assert report["result"]["count"] == {"tag": "Finite", "value": 2}
    assert hamchain.Chain.builtin("chain-G").end_degree() == 3

    try:
        hamchain.Graph.builtin("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown graph accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
