"""Tour: from a handful of affine torus automorphisms to a surface type.

Each stop builds a finite group H of affine automorphisms of the abelian
surface A = E x E, closes it, and prints what the quotient A/H is.  Run
with ``python3 demos/surfaces_tour.py``.
"""

from quotsurf import (
    AffineAut,
    close_affine,
    family_affine,
    linear_aut,
    make_ring,
    mat2,
    surface_type,
    torus_point,
)

Z = make_ring(0, 1)


def show(title, group):
    report = surface_type(group)
    print(f"== {title}")
    print(f"   group order {report.group_order}, "
          f"translations {report.translation_order}, "
          f"s = {report.s}, linear class {report.catalog_label}")
    print(f"   quotient: {report.surface_type.value}"
          f"{' (smooth)' if report.smooth else ''}")
    print()


def main():
    # 1. The Kummer construction: quotient by the sign involution.
    show("x -> -x (Kummer)",
         close_affine([linear_aut(mat2(Z, ((-1, 0), (0, -1))))]))

    # 2. The same linear involution, now composed with a half-period
    #    translation on the fixed coordinate.  The action becomes free
    #    and the quotient a hyperelliptic surface.
    show("free involution (half-translation x reflection)",
         close_affine([AffineAut(torus_point(["1/2", 0, 0, 0]),
                                 mat2(Z, ((1, 0), (0, -1))))]))

    # 3. Drop the translation: the reflection now fixes four elliptic
    #    curves pointwise and the quotient is ruled over an elliptic base.
    show("pinned reflection",
         close_affine([linear_aut(mat2(Z, ((1, 0), (0, -1))))]))

    # 4. Mix an order-2 rotation with the factor swap: the group has a
    #    nontrivial SL part, fixed points on every determinant coset,
    #    and a rational quotient.
    show("swap and sign",
         close_affine([linear_aut(mat2(Z, ((0, 1), (1, 0)))),
                       linear_aut(mat2(Z, ((-1, 0), (0, -1))))]))

    # 5. An Enriques quotient: the sign involution together with a free
    #    swap-type element.  The determinant kernel K has index 2 in H.
    show("Enriques pair",
         close_affine(family_affine(
             "Enriques", {"s": 2, "point": (0, 0, "1/2", 0)})))

    # 6. The named hyperelliptic families come with torsion-constraint
    #    checking built in.
    show("doubled order-4 hyperelliptic family",
         close_affine(family_affine(
             "HE44", {"W": ("1/4", 0), "X": (0, "1/2"), "Y": ("1/2", "1/2")})))


if __name__ == "__main__":
    main()
