"""The same phenomenon in R^d for d = 2..8, with timings.

The base is a complete graph on 2^(d-1) + 1 joints (the apex plus a prism
over a cube), so the edge count grows quickly; all checks stay exact.
"""
import time

from rigidkit import paper_verify

print(f"{'d':>2} {'joints':>7} {'bars':>8} {'G_d(p)':>17} {'G_d(Ap)':>14} {'seconds':>8}")
for d in range(2, 9):
    start = time.perf_counter()
    report = paper_verify(d)
    elapsed = time.perf_counter() - start
    v = report["verdicts"]
    print(f"{d:>2} {report['vertices']:>7} {report['edges']:>8} {v['G_d(p)']:>17} {v['G_d(Ap)']:>14} {elapsed:>8.2f}")
    assert report["status"] == "pass"

report = paper_verify(5)
for check in report["checks"]:
    print(f"[{'PASS' if check['passed'] else 'FAIL'}] {check['name']}: {check['values']}")
