"""Show which elements die in the quotient but survive in the Toeplitz-type algebra.

For each m the Cuntz defect  sum_k u^k w_m w_m* u^-k - 1  is tested in both
algebras, and its action on a few basis vectors of each model is printed.
"""
import argparse

from qnalg.expr import print_element
from qnalg.models import apply_nt, apply_qn, is_zero_nt, is_zero_qn
from qnalg.word_algebra import Element, Monomial


def cuntz_defect(m: int) -> Element:
    return Element([(Monomial(k, m, m, k), 1) for k in range(m)]) - Element.scalar(1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=8)
    args = ap.parse_args()

    for m in range(2, args.max + 1):
        x = cuntz_defect(m)
        print(f"m={m}: qn-zero={is_zero_qn(x)} nt-zero={is_zero_nt(x)}")
        if m == 2:
            print("  element:", print_element(x))
            print("  qn on e(0..3):", [len(apply_qn(x, k)) for k in range(4)], "nonzero entries")
            # level-1 vectors lie outside every w_m range, so the defect acts as -1 there
            for j, r in [(0, 1), (0, 2), (1, 2)]:
                out = {idx: str(c) for idx, c in apply_nt(x, j, r).items()}
                print(f"  nt on e({j},{r}):", out)


if __name__ == "__main__":
    main()
