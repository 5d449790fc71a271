"""Smoke test for the catqm extension module. Run after `maturin develop`."""

import json

import catqm


def main():
    q = catqm.Shape("Q")
    assert q.dim == 2
    assert catqm.dim(catqm.Shape("Q*Q")) == (4, "4")
    assert catqm.dim(catqm.Shape("Q*Q"), "boolean") == (4, "1")

    s = catqm.Scalar("s")
    assert s * s * catqm.Scalar("2") == catqm.Scalar("1")

    base = catqm.BellBase()
    assert base.is_bell()
    for i in range(4):
        assert base.beta(i).is_unitary()

    for report in (base.teleport(), base.cnot_teleport(), base.swap()):
        assert json.loads(report)["verdict"] == "equal"

    h = catqm.Morphism(q, q, [["s", "s"], ["s", "-s"]])
    gate = json.loads(base.gate_teleport(h))
    assert gate["verdict"] == "equal"
    assert (h @ h.adjoint()) == catqm.Morphism.identity(q)

    born = json.loads(catqm.born("s*(1,1)"))
    assert [b["probability"] for b in born["branches"]] == ["1/2", "1/2"]

    rel = json.loads(catqm.rel_search())
    assert rel["candidates"] == 65536 and rel["bases"] == []

    laws = json.loads(catqm.lemmas("boolean", 1, 5))
    assert laws["passed"]

    try:
        catqm.Shape("Q**")
    except ValueError:
        pass
    else:
        raise AssertionError("bad shape accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
