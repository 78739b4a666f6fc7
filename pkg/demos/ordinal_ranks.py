"""List the smallest positive 3-braids in order, with their ordinal ranks."""

from __future__ import annotations

import functools

from braidorder import Arrangement, cnormal, code_to_ordinal, compare
from braidorder.oracle import enumerate_positive_braids


def main() -> None:
    a = Arrangement.dehornoy(3)
    braids = enumerate_positive_braids(3, 4)
    braids.sort(key=functools.cmp_to_key(lambda x, y: compare(x, y, a).value))
    print(f"{'normal form':<14}{'code':<20}ordinal")
    for b in braids:
        w, c = cnormal(b, a)
        print(f"{str(w) or '(empty)':<14}{str(c):<20}{code_to_ordinal(c)}")


if __name__ == "__main__":
    main()
