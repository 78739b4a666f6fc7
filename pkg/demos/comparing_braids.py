"""Compare braids, including ones with inverse letters, under several orderings."""

from __future__ import annotations

from braidorder import Arrangement, Conjugated, Normal, PositiveBraidWord, compare, sign, word
from braidorder.oracle import sigma_positive_witness


def main() -> None:
    n = 4
    u = word("1 -2 3", n)
    v = word("2 2 -1", n)
    specs = {
        "Dehornoy": Normal(Arrangement.dehornoy(n)),
        "arrangement 3,1,2": Normal(Arrangement((3, 1, 2))),
        "Dehornoy conjugated by 2 3": Conjugated(Arrangement.dehornoy(n), PositiveBraidWord(n, (2, 3))),
    }
    for label, s in specs.items():
        print(f"{label}:")
        print(f"  compare({u}, {v}) = {compare(u, v, s)}")
        print(f"  sign({u}) = {sign(u, s)}")

    # Under the Dehornoy ordering a sigma-positive word is a certificate.
    x = word("-1 2 1", 3)
    wit = sigma_positive_witness(x)
    print(f"\n{x} is equal to the sigma-positive word {wit}, so it is {sign(x, Normal(Arrangement.dehornoy(3)))}")

    # Property S: inserting a generator always moves a braid up.
    base = word("2 -1 3 -2", n)
    for i in range(1, n):
        bigger = word(f"2 -1 {i} 3 -2", n)
        print(f"insert {i}: {compare(base, bigger, specs['arrangement 3,1,2'])}")


if __name__ == "__main__":
    main()
