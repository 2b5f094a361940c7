"""Tabulate the limit-relation error against the scale parameter.

Prints err(s) for s = 10^2 .. 10^max and the fitted decay order between
consecutive scales (1 for the 1/t-type relations, 1/2 for the 1/sqrt(beta) ones).

Usage: python3 scripts/limit_decay.py [--max-exponent 10] [--relation NAME]
"""

import argparse

import mpmath

from classical_mops import limits as lim
from classical_mops.arith import working_precision


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-exponent", type=int, default=10)
    parser.add_argument("--relation", choices=sorted(lim.RELATIONS))
    parser.add_argument("--precision", type=int, default=lim.LIMIT_PRECISION)
    args = parser.parse_args()

    names = [args.relation] if args.relation else list(lim.RELATIONS)
    exponents = range(2, args.max_exponent + 1, 2)
    with working_precision(args.precision):
        print("relation".ljust(30) + "".join(f"1e{e}".rjust(11) for e in exponents) + "   order")
        for name in names:
            errs = [lim.limit_error(name, 10**e) for e in exponents]
            orders = [-mpmath.log10(b / a) / 2 for a, b in zip(errs, errs[1:]) if a and b]
            cells = "".join(mpmath.nstr(e, 3).rjust(11) for e in errs)
            print(name.ljust(30) + cells + "   " + mpmath.nstr(orders[-1], 3))


if __name__ == "__main__":
    main()
