"""Tour: the catalog of finite subgroups of GL(2, R) and its self-checks.

Run with ``python3 demos/catalog_tour.py``.
"""

from quotsurf import (
    DUPLICATE_SETS,
    classify_gl,
    close_linear,
    realize,
    verify_catalog,
)


def main():
    # Realize a witness, close it, and recognize it again.
    for label in ("K4", "K7", "HQ8(2)", "HQ12(5)", "HSL23(5)"):
        gens = realize(label)
        group = close_linear(gens)
        rec = classify_gl(group)
        matches = ", ".join(str(m) for m in rec.all_matches)
        print(f"{label:>9}: order {group.order:3d} over {group.ring}, "
              f"s = {rec.s}, recognized as {rec.label} (matches: {matches})")
    print()

    # Some cells of the table list the same class twice; recognition
    # reports every match.
    print("duplicate label sets:")
    for pair in DUPLICATE_SETS:
        print("   " + " = ".join(pair))
    print()

    # Self-verification replays group order, determinant order, generator
    # relations and eigenvalue data for every realizable entry.
    summary = verify_catalog()["summary"]
    print(f"verify: {summary['verified']}/{summary['realizable']} realizable "
          f"entries verified, {len(summary['failures'])} failures, "
          f"{summary['total_entries']} entries total")


if __name__ == "__main__":
    main()
