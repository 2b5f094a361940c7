"""Eigenvalues of Hessenberg sections against the zeros of the step-line type II polynomial.

The characteristic polynomial of the N x N section is B_N on the step line,
so its eigenvalues are the zeros of B_N.  Prints both and the worst gap.

Usage: python3 scripts/hessenberg_spectrum.py [--family jp] [--size 8]
"""

import argparse

import mpmath

from classical_mops import hessenberg as hz
from classical_mops.acceptance import canonical_instances
from classical_mops.arith import working_precision
from classical_mops.families import family_name


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", default="jp", choices=["jp", "laguerre1", "laguerre2", "hermite"])
    parser.add_argument("--size", type=int, default=8)
    parser.add_argument("--precision", type=int, default=256)
    args = parser.parse_args()

    with working_precision(args.precision):
        for params in (p for p in canonical_instances() if family_name(p) == args.family):
            T = hz.build(params, args.size)
            eig = sorted(mpmath.eig(T.matrix(), left=False, right=False), key=lambda z: mpmath.re(z))
            roots = sorted(mpmath.polyroots(list(reversed(hz.step_line_type_ii(params, args.size).coeffs)), maxsteps=200, extraprec=args.precision), key=lambda z: mpmath.re(z))
            gap = max(abs(a - b) for a, b in zip(eig, roots))
            print(f"{family_name(params)} p={params.p} N={args.size}")
            print("  eigenvalues: " + ", ".join(mpmath.nstr(mpmath.re(z), 10) for z in eig))
            print(f"  max |eig - zero| = {mpmath.nstr(gap, 3)}")


if __name__ == "__main__":
    main()
