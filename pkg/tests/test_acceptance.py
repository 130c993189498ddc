"""The eight acceptance criteria, each an exact identity, with their runtime budgets.

Every criterion prints a single PASS/FAIL line to the terminal.
"""

import time

import pytest

from orbicheck import suites


def _perk12(cfg):
    ctx = suites.Context(cfg)
    rep = suites.VerificationReport()
    rep.extend(suites.suite_perk12(ctx))
    return rep


def _orthogonal_and_ledger(cfg):
    rep = suites.run("orthogonal", cfg)
    rep.extend(c for c in suites.run("groups", cfg).checks if c.id == "grp-stabilizer-identity")
    return rep


CRITERIA = [
    ("1 fusion ring", lambda cfg: suites.run("fusion", cfg), 120, {
        "fus-labels": "6561",
        "fus-vector-addition": "0",
        "fus-exponent3": "0",
        "fus-commutative": "0",
        "fus-quadratic": "0",
        "fus-bilinearity": "0",
        "fus-nondegenerate": "0",
        "fus-singular": "2132",
        "fus-decomposition": "(True, 4, 224)",
        "fus-k12-minus": "224",
    }),
    ("2 lattices", lambda cfg: suites.run("lattice", cfg), 300, {
        "lat-leech-even-unimodular": "(1, True)",
        "lat-leech-min": "4",
        "lat-leech-norm4": "196560",
        "lat-leech-theta": None,
        "lat-index-LC": "729",
        "lat-k12-det": "729",
        "lat-k12-short": "(4, 756)",
        "lat-tau-discriminant": "True",
    }),
    ("3 h = eps s on K12 + K12", _perk12, 10, {
        "perk12-h-leech": "(True, True)",
        "perk12-h-lc": "True",
        "perk12-h-swap": "(True, True)",
        "perk12-h-tau": "True",
        "perk12-codes": "(True, True)",
    }),
    ("4 extension geometry", lambda cfg: suites.run("extension", cfg), 60, {
        "ext-two-extensions": "2",
        "ext-Ssharp-order": "6561",
        "ext-graph": "{1}",
        "ext-eta-q": "0",
        "ext-phi": "([2187, 2187, 2187], True)",
    }),
    ("5 orthogonal group", _orthogonal_and_ledger, 600, {
        "orth-order": "40607874478080",
        "orth-omega-index": None,
        "orth-minus-one": "(True, False)",
        "orth-transitive": "(2132, 2132)",
        "orth-line-stabilizer": "(20303937239040, 1066, 19046845440)",
        "orth-direct-product": "(False, True)",
        "grp-stabilizer-identity": "20303937239040",
    }),
    ("6 characters", lambda cfg: suites.run("characters", cfg), 60, {
        "ch-Vsharp-qm1": "1",
        "ch-Vsharp-q0": "0",
        "ch-Vsharp-q1": "196884",
        "ch-Vsharp-q2": "21493760",
        "ch-Vsharp-J": None,
        "ch-components-q1": "(65664, 65610)",
        "ch-twisted-lowest": "2",
        "ch-fock-twisted": None,
    }),
    ("7 group orders", lambda cfg: suites.run("groups", cfg), 1, {
        "grp-H1-3part": "3^20",
        "grp-H2-3part": "3^20",
        "grp-H12-3part": "3^20",
        "grp-H12-divides-H1": "True",
        "grp-H12-divides-H2": "True",
        "grp-dim-2A": "196884",
        "grp-dim-2B": "196884",
        "grp-ising-mod3": "1",
    }),
    ("8 twist coefficients", lambda cfg: suites.run("twistcoef", cfg), 30, {
        "tw-c00": None,
        "tw-conj": "True",
        "tw-real": "True",
        "tw-symmetric": "True",
    }),
]


@pytest.mark.parametrize("name,runner,limit,required", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, runner, limit, required, capsys):
    cfg = suites.make_config({"order": 5, "twist_order": 8})
    t0 = time.perf_counter()
    report = runner(cfg)
    elapsed = time.perf_counter() - t0
    by_id = {c.id: c for c in report.checks}
    problems = [f"missing {k}" for k in required if k not in by_id]
    problems += [f"{c.id}: {c.computed} != {c.expected}" for c in report.checks if c.status != "pass"]
    problems += [f"{k}: {by_id[k].computed} != {v}" for k, v in required.items()
                 if k in by_id and v is not None and by_id[k].computed != v]
    if elapsed > limit:
        problems.append(f"runtime {elapsed:.1f}s over {limit}s")
    with capsys.disabled():
        status = "PASS" if not problems else "FAIL"
        print(f"\n[acceptance] {status} criterion {name} ({len(report.checks)} checks, {elapsed:.1f}s)")
    assert not problems, problems
