"""Reproduce the worked normal-form computations step by step."""

from __future__ import annotations

from braidorder import (
    Arrangement,
    PositiveBraidWord,
    alternate_decomposition,
    cnormal,
    code_to_ordinal,
    derive_k0,
    dehornoy,
    phi_normal_form,
    tail_twist_decomposition,
)


def main() -> None:
    # The smallest interesting case: sigma_1 sigma_2 sigma_1 in B_3.
    w, c = cnormal(PositiveBraidWord(3, (1, 2, 1)), dehornoy(3))
    print("B3, Dehornoy ordering")
    print(f"  input 1 2 1 -> C-normal form {w}, code {c}, ordinal {code_to_ordinal(c)}")

    b = PositiveBraidWord(4, (1, 3, 2, 3, 2, 2, 1, 1, 3))
    print(f"\nB4 word {b}")
    print(f"  alternate decomposition {alternate_decomposition(b)}")
    print(f"  Phi-normal form         {phi_normal_form(b)}")
    w, c = cnormal(b, dehornoy(4))
    print(f"  Dehornoy code           {c}")

    a = Arrangement((2, 1, 3))
    print(f"\nSame braid under the arrangement {a} (derived k0 = {derive_k0(a)})")
    d = tail_twist_decomposition(b, a)
    tails = " ".join(f"({t})" for t in d.tails)
    print(f"  tail-twisted pieces     main ({d.main}), T0 ({d.t0}), tails {tails}")
    w, c = cnormal(b, a)
    print(f"  C-normal form           {w}")
    print(f"  code                    {c}")
    print(f"  ordinal                 {code_to_ordinal(c)}")


if __name__ == "__main__":
    main()
