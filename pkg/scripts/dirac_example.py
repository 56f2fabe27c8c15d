"""W, E, C for the canonical gamma matrices and the two multiplication tables."""

from cliffpin.classification import classify_even, product_table
from cliffpin.matrix import Matrix
from cliffpin.rep import dirac_basis, matrix_C, matrix_E, matrix_W


def show(name, m):
    print(f"{name} =")
    for row in m.to_strings():
        print("  " + " ".join(f"{v:>6}" for v in row))


def show_table(t, names):
    print("      " + " ".join(f"{n:>4}" for n in names))
    for a in names:
        cells = []
        for b in names:
            s, c = t[(a, b)]
            cells.append(f"{('-' if s < 0 else '') + c:>4}")
        print(f"{a:>4}  " + " ".join(cells))


def main():
    basis = dirac_basis()
    W, E, C = matrix_W(basis).W, matrix_E(basis), matrix_C(basis)
    show("W", W)
    show(f"E = {E.label}", E.matrix)
    show(f"C = {C.label}", C.matrix)
    print()
    show_table(product_table({"I": Matrix.identity(4), "W": W, "E": E.matrix, "C": C.matrix}), ["I", "W", "E", "C"])
    g = basis.gens
    print()
    show_table(product_table({"1": Matrix.identity(4), "P": g[3], "T": g[0] @ g[2], "PT": g[3] @ g[0] @ g[2]}), ["1", "P", "T", "PT"])
    print()
    print(classify_even(basis).label)


if __name__ == "__main__":
    main()
