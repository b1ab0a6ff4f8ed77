"""Print the worked examples: the running LR triple, its crystal images,
the compatible frank words and the four noncommutative coefficients."""

from nclr.coefficients import classical_lr, expand_product, nc_lr_all
from nclr.combinatorics import from_word
from nclr.composition_tableaux import rho_inverse
from nclr.crystal import LrTriple, crystal_apply, crystal_reflect, enumerate_lrt
from nclr.formats import show_composition, tableau_to_text
from nclr.frank import enumerate_lr_frank, format_frank, iota, parse_frank
from nclr.tableaux import SkewTableau, column_growth_word, jdt_rectify, standardize_tableau

LAMBDA, MU, NU = (7, 6, 4, 3, 2), (6, 4, 4), (4, 3, 1)


def section(title):
    print(f"\n== {title}")


def main():
    triple = LrTriple(LAMBDA, MU, NU)
    section(f"LR tableaux of {show_composition(LAMBDA)}/{show_composition(MU)}, content {show_composition(NU)}")
    print("c =", classical_lr(LAMBDA, MU, NU))
    sigma = from_word((1, 2), 3)
    for t in enumerate_lrt(triple):
        image = crystal_apply(sigma, t)
        print(tableau_to_text(t))
        print("  -> s1 s2 ->")
        print(tableau_to_text(image))
        print("  growth word", format_frank(column_growth_word(image)),
              " rect(stan) rows", jdt_rectify(standardize_tableau(image)).rows)
        print()

    section("compatible frank words of column form (3,4,1)")
    for w in enumerate_lr_frank(LAMBDA, MU, (3, 4, 1)):
        print(format_frank(w))

    section("iota")
    for text in ("76421|632", "621|76432"):
        print(text, "->", format_frank(iota(parse_frank(text))))

    section("noncommutative coefficients")
    for alpha, beta, gamma in [((2, 4, 1), (1, 2), (3, 5, 2)), ((2, 4, 1), (1, 2), (2, 5, 3)),
                               ((2, 4, 1), (2, 1), (3, 5, 2)), ((2, 4, 1), (2, 1), (5, 2, 3))]:
        values = nc_lr_all(alpha, beta, gamma)
        print(f"C^{show_composition(gamma)}_{show_composition(alpha)}{show_composition(beta)} =", values)

    section("rho^-1 of the crystal image of the demo tableau")
    demo = crystal_reflect(1, SkewTableau((2, 1), ((1, 1, 1), (1, 2), (2, 3))))
    for beta in ((1, 2), (2, 1)):
        print(f"beta={show_composition(beta)}: outer shape {show_composition(rho_inverse(demo, beta).outer)}")

    section("s_(2,4,1) * s_(1,2)")
    for gamma, c in expand_product((2, 4, 1), (1, 2)).entries.items():
        print(f"{show_composition(gamma)}: {c}")


if __name__ == "__main__":
    main()
