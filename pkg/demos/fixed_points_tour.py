"""Tour: fixed-point sets of affine torus automorphisms, computed exactly.

Run with ``python3 demos/fixed_points_tour.py``.
"""

from quotsurf import (
    AffineAut,
    common_fixed_set,
    fixed_set,
    linear_aut,
    make_ring,
    mat2,
    smith_normal_form,
    torus_point,
    translation_aut,
)

Z = make_ring(0, 1)
GAUSS = make_ring(1, 1)


def show(title, fps):
    print(f"== {title}")
    if fps.kind.value == "empty":
        print("   no fixed points (free)")
    elif fps.kind.value == "finite":
        pts = ", ".join(str(p) for p in fps.representatives[:4])
        more = "..." if fps.count > 4 else ""
        print(f"   {fps.count} fixed points: {pts}{more}")
    else:
        print(f"   fixed curves: complex dimension {fps.dimension}, "
              f"{fps.component_count} component(s)")
    print()


def main():
    # Underneath: integral Smith normal form.
    snf = smith_normal_form([[2, 4], [6, 8]])
    print(f"smith([[2,4],[6,8]]) -> diag{snf.diag}\n")

    neg = linear_aut(mat2(Z, ((-1, 0), (0, -1))))
    show("x -> -x", fixed_set(neg))  # the sixteen 2-torsion points

    rot = linear_aut(mat2(GAUSS, (((0, 1), 0), (0, (0, -1)))))
    show("x -> (i x, -i y)", fixed_set(rot))

    refl = linear_aut(mat2(Z, ((1, 0), (0, -1))))
    show("reflection (x, y) -> (x, -y)", fixed_set(refl))

    free = AffineAut(torus_point(["1/2", 0, 0, 0]), mat2(Z, ((1, 0), (0, -1))))
    show("the same reflection after a half-translation", fixed_set(free))

    t = translation_aut(Z, torus_point(["1/2", 0, 0, 0]))
    show("a pure translation", fixed_set(t))

    swap = linear_aut(mat2(Z, ((0, 1), (1, 0))))
    show("points fixed by both -1 and the swap",
         common_fixed_set([neg, swap]))


if __name__ == "__main__":
    main()
