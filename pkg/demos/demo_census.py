"""Exhaustively classify every graph on n vertices by spectral simplicity.

For each n we enumerate all 2^(n(n-1)/2) adjacency matrices, decide
simplicity with the exact squarefree test on the characteristic
polynomial, and report the exact simple fraction.  For every non-simple
graph found at n = 4 we also confirm that the leading principal minor has
an eigenvector orthogonal to the border column -- the mechanism that makes
repeated eigenvalues rare for random matrices.
"""

from fractions import Fraction

from simplespectrum import (
    exhaustive_census,
    graph_from_index,
    simplicity_exact,
    verify_orthogonality_lemma,
)


def main() -> None:
    print("exact census of graph spectra")
    print(f"{'n':>3} {'graphs':>8} {'simple':>8} {'fraction':>12}")
    for n in range(2, 6):
        c = exhaustive_census(n, workers=4)
        frac = Fraction(c.simple_count, c.total)
        print(f"{n:>3} {c.total:>8} {c.simple_count:>8} {str(frac):>12}")

    print("\northogonality witnesses for non-simple graphs at n = 4:")
    shown = 0
    for index in range(2**6):
        M = graph_from_index(4, index)
        verdict = simplicity_exact(M)
        if verdict.is_simple:
            continue
        ok, witness = verify_orthogonality_lemma(M)
        assert ok
        shown += 1
        if shown <= 5:
            print(
                f"  graph {index:2d}: repeated-root certificate coeffs "
                f"{[str(c) for c in verdict.certificate]}, "
                f"minor eigenvalue {witness['eigenvalue']}, "
                f"residual {witness['residual']:.2e}"
            )
    print(f"  ... lemma verified on all {shown} non-simple graphs")


if __name__ == "__main__":
    main()
