"""Build and row-reduce the Macaulay matrix of three bivariate polynomials (lex)."""

from groebner.f4 import macaulay_mat, macaulay_red, row_echelon
from groebner.monomials import format_pp
from groebner.orders import TermOrder
from groebner.parsing import parse_poly, print_poly

LEX = TermOrder.from_names("lex")
SOURCES = ["x1^3 - 5*x0^2*x1 - 2", "-4*x1^3 + 2*x1^2 + x0^2*x1", "2*x1^3 - x1^2 - x0 + 4"]


def show(title, keys, mat):
    print(title)
    print("  columns:", ", ".join(format_pp(pp) for pp, _ in keys))
    for row in mat.to_dense():
        print("  ", [str(c) for c in row])


def main():
    fs = [parse_poly(s, None, LEX) for s in SOURCES]
    keys, A = macaulay_mat(fs, LEX)
    show("Macaulay matrix", keys, A)
    show("row echelon form", keys, row_echelon(A))
    print("new leading terms:")
    for h in macaulay_red(fs, LEX):
        print("  ", print_poly(h))


if __name__ == "__main__":
    main()
