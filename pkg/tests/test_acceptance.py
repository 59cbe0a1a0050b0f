"""Acceptance criteria 1-9, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Criteria 3, 4 and 5 require every printed identity to hold in its literal
reading; the catalog records the misprinted lines as literal records that
fail, so those criteria fail. Their corrected readings are asserted
separately by the ``*_errata`` tests.
"""

from __future__ import annotations

import io
import shlex
import sys
import time
from pathlib import Path

import pytest

from balpoly.cli import main as cli_main
from balpoly.dsl import eval_identity, load_corpus, mutants, parse, parse_text, render
from balpoly.dsl.errors import DslError
from balpoly.identities import get_record, suite_records, verify
from balpoly.sequences import (
    balancing_explicit,
    balancing_poly,
    binet_value,
    fibonacci,
    lucas,
    lucas_balancing_explicit,
    lucas_balancing_poly,
)
from balpoly.series import (
    FAMILIES,
    check_functional_equation,
    egf_expand,
    family_term,
    functional_equation,
    ogf_expand,
)

ROOT = Path(__file__).resolve().parent
REPORT = ROOT.parent / "reports" / "fibonacci-eps.txt"

RESULTS: dict[int, tuple[bool, str]] = {}


def _record(number, ok, detail, seconds, budget):
    if seconds > budget:
        ok = False
        detail += f"; over budget ({seconds:.1f}s > {budget}s)"
    RESULTS[number] = (ok, detail)
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}  [{seconds:.2f}s]"
    print(line, flush=True)
    return ok


def _run_ids(ids, n_range):
    """Verify each id over n_range; returns (literal failures, all reports)."""
    reports = [verify(i, {"n": n_range}) for i in ids]
    failed = [f"{r.id} (n={r.counterexample['params']['n']})" for r in reports if not r.holds]
    return failed, reports


def _errata_of(ids):
    out = []
    for i in ids:
        try:
            out.append(get_record(i + "/errata").id)
        except KeyError:
            pass
    return out


# 1


def criterion_1():
    start = time.perf_counter()
    bad = [n for n in range(1, 129)
           if balancing_explicit(n) != balancing_poly(n)
           or lucas_balancing_explicit(n) != lucas_balancing_poly(n)]
    binet_bad = []
    for n in range(65):
        for fam, poly in (("B", balancing_poly(n)), ("C", lucas_balancing_poly(n))):
            v = binet_value(fam, n)
            if v.v != 0 or v.u != poly:
                binet_bad.append((fam, n))
    ok = not bad and not binet_bad
    detail = "explicit forms match n=1..128, Binet matches n=0..64" if ok else \
        f"explicit mismatches {bad[:5]}, Binet mismatches {binet_bad[:5]}"
    return _record(1, ok, detail, time.perf_counter() - start, 5)


# 2


def criterion_2():
    start = time.perf_counter()
    bad = []
    for fam in FAMILIES:
        expected = [family_term(fam, n) for n in range(64)]
        if ogf_expand(fam, 63).terms() != expected:
            bad.append(f"ogf {fam}")
        if egf_expand(fam, 63).terms() != expected:
            bad.append(f"egf {fam}")
    for name in ("B2-C2", "B-C1"):
        lhs, rhs = functional_equation(name, 32)
        if not check_functional_equation(lhs, rhs, 32):
            bad.append(f"functional equation {name}")
    ok = not bad
    detail = "12 closed forms x 64 coefficients, 2 functional equations to order 32" if ok else \
        f"mismatches: {', '.join(bad)}"
    return _record(2, ok, detail, time.perf_counter() - start, 10)


# 3

OGF_IDS = [f"thm-ogf-{i}" for i in range(1, 6)] + [f"thm-ogf-sum-{i}" for i in range(1, 5)]
EGF_IDS = [f"thm-egf-{i}" for i in range(1, 6)] + [f"thm-egf-scaled-{i}" for i in range(1, 5)]


def criterion_3():
    start = time.perf_counter()
    f1, _ = _run_ids(OGF_IDS, (1, 64))
    f2, _ = _run_ids(EGF_IDS, (1, 32))
    failed = f1 + f2
    ok = not failed
    detail = "18 theorem identities hold" if ok else \
        f"{18 - len(failed)}/18 hold as printed; fail: {', '.join(failed)}"
    return _record(3, ok, detail, time.perf_counter() - start, 60)


# 4

CHEB_IDS = [f"cor-cheb-sum-{i}" for i in range(1, 5)] + [f"cor-cheb-binom-{i}" for i in range(1, 10)]


def criterion_4():
    start = time.perf_counter()
    f1, _ = _run_ids(["lemma-bal-cheb-B", "lemma-bal-cheb-C"], (1, 64))
    f2, _ = _run_ids(CHEB_IDS, (1, 32))
    f3, _ = _run_ids(["remark-cheb-V", "remark-cheb-W"], (0, 32))
    failed = f1 + f2 + f3
    ok = not failed
    detail = "lemma, 13 corollary identities and V/W remark hold" if ok else \
        f"lemma {'holds' if not f1 else 'FAILS'}, remark {'holds' if not f3 else 'FAILS'}; " \
        f"{13 - len(f2)}/13 corollary identities hold as printed; fail: {', '.join(failed)}"
    return _record(4, ok, detail, time.perf_counter() - start, 30)


# 5

FIB_IDS = [f"cor-fib-sum-{i}" for i in range(1, 5)] + [f"cor-fib-binom-{i}" for i in range(1, 10)]


def criterion_5():
    start = time.perf_counter()
    f1, _ = _run_ids(["lemma-fib-half-B", "lemma-fib-half-C"], (0, 200))
    f2, _ = _run_ids(FIB_IDS, (1, 64))
    eps = [verify(i, {"n": (0, 48), "s": (1, 12)}) for i in ("lemma-fib-eps-B", "lemma-fib-eps-C")]
    f3 = [f"{r.id} ({', '.join(f'{k}={v}' for k, v in r.counterexample['params'].items())})"
          for r in eps if not r.holds]
    failed = f1 + f2 + f3
    ok = not failed
    detail = "x=1/2 lemma, 13 corollary identities and eps lemma hold" if ok else \
        f"x=1/2 lemma {'holds' if not f1 else 'FAILS'}; {13 - len(f2)}/13 corollary identities " \
        f"hold as printed; fail: {', '.join(failed)}"
    return _record(5, ok, detail, time.perf_counter() - start, 30)


# 6


def _run_cli(cmd):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(shlex.split(cmd), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def criterion_6():
    start = time.perf_counter()
    problems = []
    _, fresh, _ = _run_cli("verify --suite fibonacci-eps --n-max 16 --s-max 8 --no-timing")
    committed = REPORT.read_text() if REPORT.exists() else ""
    if fresh != committed:
        problems.append("committed report is stale or missing")
    verdicts = {}
    for line in committed.splitlines():
        if line.startswith(" "):
            continue
        verdict, rid = line.split()[:2]
        verdicts[rid] = verdict
        if verdict not in ("HOLDS", "FAILS"):
            problems.append(f"{rid}: {verdict}")
        if verdict == "FAILS" and "witness" not in line:
            problems.append(f"{rid}: FAILS without witness")
    corollaries = [r.id for r in suite_records("fibonacci-eps") if r.id.startswith("cor-")]
    missing = [i for i in corollaries if i not in verdicts]
    problems += [f"{i} not in report" for i in missing]
    literal_fails = [i for i, v in verdicts.items() if v == "FAILS" and "/errata" not in i]
    for i in literal_fails:
        if verdicts.get(i + "/errata") != "HOLDS":
            problems.append(f"{i} fails with no holding errata reading")
    ok = not problems
    detail = (f"{len(verdicts)} report lines; {len(literal_fails)} literal FAILS each paired with "
              f"a HOLDS errata reading") if ok else "; ".join(problems[:6])
    return _record(6, ok, detail, time.perf_counter() - start, 30)


# 7


def criterion_7():
    start = time.perf_counter()
    bad = []
    f = [0, 1]
    g = [2, 1]
    for _ in range(2, 10001):
        f.append(f[-1] + f[-2])
        g.append(g[-1] + g[-2])
    for n in range(10001):
        if fibonacci(n) != f[n] or lucas(n) != g[n]:
            bad.append(n)
            break
    for n in range(33):
        b, c = balancing_poly(n), lucas_balancing_poly(n)
        if balancing_poly(2 * n) != b * c * 2 or lucas_balancing_poly(2 * n) != c * c * 2 - 1:
            bad.append(("doubling", n))
    ok = not bad
    detail = "fast doubling = iteration for n<=10^4; B_2n, C_2n doubling for n<=32" if ok else \
        f"mismatch at {bad[:3]}"
    return _record(7, ok, detail, time.perf_counter() - start, 30)


# 8

MALFORMED = ROOT / "fixtures" / "malformed"
MUTATED = ["thm-ogf-1", "thm-ogf-sum-1", "cor-cheb-sum-1", "cor-fib-sum-1", "cor-fib-eps-1"]


def criterion_8():
    start = time.perf_counter()
    problems = []
    corpus = load_corpus()
    tagged = [e for _, e in corpus if e.tag]
    if len(tagged) < 20:
        problems.append(f"only {len(tagged)} tagged corpus identities")
    for _, e in corpus:
        text = render(e.ast)
        if parse(text) != e.ast or render(parse(text)) != text:
            problems.append(f"round trip {e.tag or e.text}")
    for e in tagged:
        dsl = eval_identity(e.ast, e.tag)
        native = verify(e.tag, {k: tuple(v) for k, v in dsl.params_tested.items()})
        w1 = (dsl.counterexample or {}).get("params")
        w2 = (native.counterexample or {}).get("params")
        if dsl.verdict != native.verdict or w1 != w2:
            problems.append(f"verdict mismatch {e.tag}")
    located = 0
    fixtures = sorted(MALFORMED.glob("*.idl"))
    for path in fixtures:
        try:
            parse_text(path.read_text())
        except DslError as exc:
            if exc.line >= 1 and exc.col >= 1 and "\n" not in str(exc):
                located += 1
    if len(fixtures) < 10 or located != len(fixtures):
        problems.append(f"{located}/{len(fixtures)} malformed fixtures located")
    by_tag = {e.tag: e for e in tagged}
    survivors = 0
    count = 0
    for tag in MUTATED:
        for m in mutants(by_tag[tag].ast):
            count += 1
            grid = {b.var: (b.lo.value, 8) for b in m.bindings}
            if eval_identity(m, grid=grid).verdict != "FAILS":
                survivors += 1
    if survivors:
        problems.append(f"{survivors}/{count} mutants survive")
    ok = not problems
    detail = (f"{len(tagged)} corpus identities agree with the catalog; {located} malformed "
              f"fixtures located; {count} mutants of 5 identities all fail by n<=8") if ok else \
        "; ".join(problems[:6])
    return _record(8, ok, detail, time.perf_counter() - start, 60)


# 9


def criterion_9():
    start = time.perf_counter()
    from test_cli import CASES, GOLDEN

    problems = []
    for cmd, golden, code in CASES:
        got, out, _ = _run_cli(cmd)
        if got != code or out != (GOLDEN / golden).read_text():
            problems.append(f"golden {golden}")
    for cmd, code in [("gen --family Z", 2), ("check missing-file.idl", 2),
                      ("bfile --family C --at 1/2", 2), ("verify --suite lemmas --depth quick", 0),
                      ("check corpus/thm-ogf.idl", 0)]:
        if _run_cli(cmd)[0] != code:
            problems.append(f"exit code of {cmd!r}")
    out = _run_cli("bfile --family B --count 6")[1]
    if out != "0 0\n1 1\n2 6\n3 35\n4 204\n5 1189\n":
        problems.append("b-file prefix")
    ok = not problems
    detail = f"{len(CASES)} golden outputs, exit codes, b-file 0 1 6 35 204 1189" if ok else \
        "; ".join(problems)
    return _record(9, ok, detail, time.perf_counter() - start, 60)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_criterion(criterion):
    assert criterion(), RESULTS[CRITERIA.index(criterion) + 1][1]


# corrected readings behind the failing criteria 3-5


def _errata_hold(ids, n_range):
    fixed = _errata_of(ids)
    assert fixed
    for i in fixed:
        assert verify(i, {"n": n_range}).holds, i


def test_criterion_3_errata():
    _errata_hold(OGF_IDS, (1, 64))
    _errata_hold(EGF_IDS, (1, 32))


def test_criterion_4_errata():
    _errata_hold(CHEB_IDS, (1, 32))


def test_criterion_5_errata():
    _errata_hold(FIB_IDS, (1, 64))
    for i in ("lemma-fib-eps-B/errata", "lemma-fib-eps-C/errata"):
        assert verify(i, {"n": (0, 48), "s": (1, 12)}).holds


def test_failures_are_only_catalogued_misprints():
    """Every literal failure in criteria 3-5 has a holding errata record."""
    for ids, n_range in ((OGF_IDS, (1, 64)), (EGF_IDS, (1, 32)), (CHEB_IDS, (1, 32)),
                         (FIB_IDS, (1, 64))):
        for i in ids:
            if not verify(i, {"n": n_range}).holds:
                assert verify(i + "/errata", {"n": n_range}).holds, i


if __name__ == "__main__":
    sys.path.insert(0, str(ROOT))
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
