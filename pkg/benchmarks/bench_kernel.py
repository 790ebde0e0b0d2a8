"""Time the pure-Python and compiled tableau kernels on the same workload.

    python3 benchmarks/bench_kernel.py [--cases N] [--seed S]
"""
import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from helpers import ROLES, random_expr, random_tbox_axioms  # noqa: E402

from ocmeaning.reasoner import Tbox, is_satisfiable, kernel  # noqa: E402


def workload(n: int, seed: int):
    rng = random.Random(seed)
    cases = []
    for i in range(n):
        roles = ROLES if i % 2 else ()
        axioms = random_tbox_axioms(rng, rng.randint(2, 6), 3, roles=roles)
        cases.append((Tbox.of(axioms), random_expr(rng, 4, roles=roles)))
    return cases


def run(backend: str, cases) -> tuple[float, list[bool]]:
    start = time.perf_counter()
    answers = [is_satisfiable(c, t, backend=backend) for t, c in cases]
    return time.perf_counter() - start, answers


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cases", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    cases = workload(args.cases, args.seed)
    results = {name: run(name, cases) for name in kernel.BACKENDS}
    base = results["python"][0]
    print(f"{'backend':<8} {'seconds':>9} {'speedup':>8}")
    for name, (secs, _) in results.items():
        print(f"{name:<8} {secs:>9.3f} {base / secs:>7.2f}x")
    answers = {tuple(a) for _, a in results.values()}
    print("answers agree" if len(answers) == 1 else "ANSWERS DIFFER")
    if "cython" not in results:
        print("compiled kernel not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
