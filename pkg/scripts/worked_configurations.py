#!/usr/bin/env python3
"""Run the notable worked configurations end to end and print full reports:
the rank-2 inverse-direction stalk, both split factorizations, and the
middle-degree stratum output for a sum of three characters."""

from bunncalc import (
    boyer_factorize,
    bundle_to_b,
    harris_viehmann,
    igusa_cohomology,
    parse_bundle,
    shtuka_cohomology,
)
from bunncalc.lparams import LParamShape


def banner(title: str) -> None:
    print("=" * 64)
    print(title)
    print("=" * 64)


def main() -> None:
    banner("rank 2: inverse direction from O(-1)+O(-2) to the trivial stratum")
    shape = LParamShape.from_dims((1, 1))
    out = shtuka_cohomology(
        shape, (-1, -2), bundle_to_b(parse_bundle("O^2")), (0, -3), "inverse"
    )
    for p in out.pieces:
        print(f"sigma = {p.sigma.describe()}  shift = {p.shift}  tate = {p.tate}")
    hv = harris_viehmann(shape, (-1, -2), (3, 0))
    print(f"single-stratum form: sigma = {hv.pieces[0].sigma.describe()}, "
          f"shift = {hv.pieces[0].shift}")
    print()

    banner("rank 10 split at m=4 (source-parabolic)")
    f = boyer_factorize(
        parse_bundle("O(3/4)+O(1/3)+O^3"),
        parse_bundle("O(3/2)+O(1/2)+O(1/3)+O^3"),
        (1,) + (0,) * 9,
        4,
    )
    print(f"mu1={f.mu1} mu2={f.mu2}")
    print(f"pairings: whole {f.rho_whole} = {f.rho_part1} + {f.rho_part2} + d={f.d}")
    for note in f.notes:
        print(f"note: {note}")
    print()

    banner("rank 12 split at m=2 (target-parabolic)")
    f2 = boyer_factorize(
        parse_bundle("O(3/2)+O(1/2)^2+O(1/6)"),
        parse_bundle("O(3/2)^2+O(1/2)+O(1/3)+O^3"),
        (1, 1) + (0,) * 10,
        2,
    )
    print(f"mu1={f2.mu1} mu2={f2.mu2}")
    print(f"ambient group: {f2.parabolic_group}")
    print(f"proper parabolic: {f2.parabolic_proper}")
    print()

    banner("middle-degree output for three characters at O(1)+O^2")
    shape3 = LParamShape.from_dims((1, 1, 1))
    ig = igusa_cohomology(shape3, (1, 0, 0), bundle_to_b(parse_bundle("O(1)+O^2")))
    print(f"degree {ig.degree}, {ig.count} pieces (multiplicity {ig.multiplicity_symbol})")
    for chi, rep in ig.pieces:
        print(f"  chi={chi}: {rep.describe(shape3)}")


if __name__ == "__main__":
    main()
