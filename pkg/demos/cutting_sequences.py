"""Push an arc around with positive braids and watch its cutting sequence."""

from __future__ import annotations

from braidorder import Arrangement, CuttingSequence, PositiveBraidWord, act, apply_generator, gamma1, tighten


def main() -> None:
    pi1 = CuttingSequence(3, (2,))
    once = apply_generator(pi1, 1)
    print(f"arc {pi1}, after sigma_1: {once}")
    twice = apply_generator(once, 1)
    print(f"after sigma_1 again: {twice} -> tight {tighten(twice)}")

    gamma = CuttingSequence(4, (3, -2, 1, -4))
    print(f"\n{gamma} is already tight: {tighten(gamma) == gamma}")

    a = Arrangement((2, 1, 3))
    start = gamma1(a)
    print(f"\nfirst arc for {a}: {start}")
    for letters in [(1,), (1, 2), (3, 1, 2), (2, 3, 1, 2)]:
        w = PositiveBraidWord(4, letters)
        print(f"  {str(w):<10} -> {act(w, start)}")


if __name__ == "__main__":
    main()
