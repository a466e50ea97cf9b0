#!/usr/bin/env python3
"""Walk the stalks of the eigen-symbol sum for a sum-of-characters shape and
check the termwise eigen identity on the strata the standard weight reaches."""

from bunncalc import (
    b_to_chis,
    bundle_to_b,
    chi_id,
    eigensheaf_stalk,
    hecke,
    make_F,
    parse_bundle,
    verify_eigen,
)
from bunncalc.lparams import LParamShape


def main() -> None:
    shape = LParamShape.from_dims((1, 1, 1))
    print(f"shape: {shape.r} characters, n={shape.n}")

    for expr in ["O^3", "O(1)+O^2", "O(1)^2+O", "O(2)+O(1)+O"]:
        b = bundle_to_b(parse_bundle(expr))
        st = eigensheaf_stalk(shape, b)
        print(f"stalk at {expr}: {st.count} pieces, characters {b_to_chis(shape, b)}")

    lam = (1, 0, 0)
    dec = hecke(shape, lam, make_F(shape, chi_id(3)))
    strata = []
    for _, sheaf, _ in dec.terms:
        if sheaf.stratum not in strata:
            strata.append(sheaf.stratum)
    strata.append(bundle_to_b(parse_bundle("O^3")))
    ok = verify_eigen(shape, lam, strata)
    print(f"eigen identity on {len(strata)} strata: {'holds' if ok else 'FAILS'}")


if __name__ == "__main__":
    main()
