"""Run every relation suite in both algebras and print a table of failure counts."""
import argparse
import time

from qnalg.relations import SuiteConfig, run_suite

SUITES = ("toeplitz", "nica", "cuntz", "laca_raeburn")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=12, dest="bound")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--exp-max", type=int, default=200)
    args = ap.parse_args()

    print(f"{'suite':<14}{'algebra':<9}{'instances':>10}{'failures':>10}{'seconds':>9}")
    for name in SUITES:
        for algebra in ("nt", "qn"):
            cfg = SuiteConfig(name, args.bound, args.seed, args.exp_max, algebra=algebra)
            t0 = time.perf_counter()
            rep = run_suite(cfg)
            dt = time.perf_counter() - t0
            print(f"{name:<14}{algebra:<9}{len(rep.results):>10}{len(rep.failures):>10}{dt:>9.2f}")


if __name__ == "__main__":
    main()
