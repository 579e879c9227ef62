"""Smoke test for the modan Python bindings.

Build first with `pip install --no-build-isolation ./crates/py` (or `maturin develop -m crates/py/Cargo.toml`).
"""

import json
import pathlib
import sys

import modan

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main() -> int:
    assert set(modan.fixture_names()) >= {"A1", "A2", "A3", "M2", "M2r2", "AD3"}

    a2 = modan.Workspace.fixture("A2")
    assert a2.module_dim is None
    assert a2.hochschild(qmax=3) == [2, 0, 0, 0]
    assert a2.derham(qmax=3) == [1, 0, 0, 0]

    m2 = modan.Workspace.from_file(str(FIXTURES / "M2.json"))
    assert m2.derham(qmax=2) == [0, 0, 0]
    assert len(m2.module_derivations()) > 0
    assert all(status != "fail" for _, status, _ in m2.check(qmax=2, seed=7))

    ad3 = modan.Workspace.from_json(modan.Workspace.fixture("AD3").to_json())
    rows = ad3.oracle(qmax=2)
    assert rows and all(primary == oracle for _, primary, oracle in rows)

    try:
        modan.Workspace.from_file(str(FIXTURES / "broken_associativity.json"))
    except (ValueError, RuntimeError) as e:
        print("broken file rejected:", e)
    else:
        raise AssertionError("broken file was accepted")

    try:
        a2.module_multipliers()
    except ValueError:
        pass
    else:
        raise AssertionError("module query on an algebra-only workspace succeeded")

    print(json.dumps({"A2": a2.hochschild(), "multipliers(A2)": len(a2.multipliers())}))
    print("smoke test ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
