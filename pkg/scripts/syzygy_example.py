"""Syzygies of three quadrics via a POT Groebner basis, with cofactors for the projection."""

from groebner.buchberger import GbConfig
from groebner.orders import TermOrder
from groebner.parsing import parse_poly, print_poly
from groebner.syzygy import SyzygyProblem, cofactor_view, projection, syzygy_basis, syzygy_module_gb

ORDER = TermOrder.from_names("drlex", "pot")
SOURCES = ["x0*x1 - x2", "x0*x2 - x1", "x1*x2 - x0"]


def main():
    bs = [parse_poly(s, None, ORDER) for s in SOURCES]
    problem = SyzygyProblem(bs)
    cfg = GbConfig(term_order=ORDER)
    print("syzygy module basis:")
    for s in syzygy_basis(problem, cfg):
        print("  ", print_poly(s))
    gs = syzygy_module_gb(problem, cfg)
    m = len(bs)
    print("Groebner basis of the input ideal, with cofactors:")
    for g, (cofs, value) in zip(projection(m, gs, ORDER), cofactor_view(m, gs, bs, ORDER)):
        print("  ", print_poly(g), "=", " + ".join(f"({print_poly(c)})*b{i}" for i, c in enumerate(cofs) if c))


if __name__ == "__main__":
    main()
