"""Finite Thurston-type orderings of braid groups.

C-normal forms (computed as tail-twisted alternating normal forms), codes,
order comparison, ordinal ranks, and the cutting-sequence calculus, together
with brute-force oracles for small cases (:mod:`braidorder.oracle`).
"""

from .alternating import (
    AlternateDecomposition,
    Arrangement,
    BlockBounds,
    TailTwistDecomposition,
    alternate_decomposition,
    block_bounds,
    derive_k0,
    derive_kj,
    phi_normal_form,
    tail_twist_decomposition,
    tail_twisted_normal_form,
)
from .codes import (
    Code,
    Composite,
    Leaf,
    Tower,
    cmp_left,
    cmp_right,
    code_from_tower,
    code_to_ordinal,
    parse_bars,
    parse_code,
    tower_from_pieces,
    zero_code,
)
from .cutting import CuttingSequence, act, apply_generator, gamma1, tighten
from .errors import (
    BraidError,
    BudgetExceeded,
    ContextMismatch,
    IndexOutOfRange,
    LetterTooSmall,
    MembershipViolation,
    NotPositive,
    StrandMismatch,
    StrandTooSmall,
)
from .garside import GeneratorSet, max_right_divisor, right_divides_gen, split_right
from .order import Conjugated, Normal, OrderingSpec, Sign, cnormal, code, compare, dehornoy, sign
from .ordinals import Comparison, Ordinal, ordinal_cmp, parse_ordinal
from .words import (
    BraidWord,
    GreedyNormalForm,
    PermutationFactor,
    PositiveBraidWord,
    delta,
    equal,
    flip,
    greedy_normal_form,
    positive_lift,
    right_quotient,
    shift_down,
    shift_up,
    word,
)

__all__ = [name for name in dir() if not name.startswith("_")]
