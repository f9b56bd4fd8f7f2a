"""Physical card-shuffling samplers and their exact laws.

Both models first build the shuffled deck (the "forward" physical shuffle)
and then return the inverse group element, whose law is the shuffling
measure:

  gsr_a       cut n cards into a piles multinomially, then interleave
              uniformly at random;
  typeB_flip  cut into an odd number x of piles multinomially, flip over
              (reverse and negate) the even-numbered piles, interleave.

A pile word u in {0..piles-1}^n drawn uniformly is equivalent to the
multinomial cut plus the uniform interleaving: position j of the shuffled
deck takes the next card of pile u[j].  That makes exhaustive enumeration
of the exact law trivial, which is how the samplers are validated.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Dict, Optional, Tuple


def _deal(n: int, piles: int, word: Tuple[int, ...], flip_even: bool) -> Tuple[int, ...]:
    """Shuffled deck (signed cards if flip_even) produced by a pile word."""
    sizes = [0] * piles
    for d in word:
        sizes[d] += 1
    start = [0] * piles
    for p in range(1, piles):
        start[p] = start[p - 1] + sizes[p - 1]
    piles_content = []
    for p in range(piles):
        cards = list(range(start[p] + 1, start[p] + sizes[p] + 1))
        if flip_even and p % 2 == 1:  # pile number p+1 is even
            cards = [-c for c in reversed(cards)]
        piles_content.append(cards)
    nxt = [0] * piles
    deck = []
    for d in word:
        deck.append(piles_content[d][nxt[d]])
        nxt[d] += 1
    return tuple(deck)


def _invert_signed(one_line: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(one_line)
    out = [0] * n
    for pos, card in enumerate(one_line, start=1):
        if card > 0:
            out[card - 1] = pos
        else:
            out[-card - 1] = -pos
    return tuple(out)


def sample_shuffle(
    model: str, n: int, param: int, rng: Optional[random.Random] = None, seed=None
) -> Tuple[int, ...]:
    """One sample: a permutation (gsr_a) or signed permutation (typeB_flip)
    in one-line form, distributed by the shuffling measure at x = param."""
    if rng is None:
        rng = random.Random(seed)
    if model == "gsr_a":
        if param < 1:
            raise ValueError("pile count must be >= 1")
        word = tuple(rng.randrange(param) for _ in range(n))
        return _invert_signed(_deal(n, param, word, flip_even=False))
    if model == "typeB_flip":
        if param < 1 or param % 2 == 0:
            raise ValueError("pile count must be odd and >= 1")
        word = tuple(rng.randrange(param) for _ in range(n))
        return _invert_signed(_deal(n, param, word, flip_even=True))
    raise ValueError(f"unknown shuffle model {model!r}")


def exact_shuffle_law(model: str, n: int, param: int) -> Dict[Tuple[int, ...], Fraction]:
    """Law of one sample, by exhaustive enumeration of all param**n pile words."""
    flip = model == "typeB_flip"
    if model not in ("gsr_a", "typeB_flip"):
        raise ValueError(f"unknown shuffle model {model!r}")
    if flip and param % 2 == 0:
        raise ValueError("pile count must be odd")
    total = param**n
    law: Dict[Tuple[int, ...], Fraction] = {}
    for word in itertools.product(range(param), repeat=n):
        w = _invert_signed(_deal(n, param, word, flip_even=flip))
        law[w] = law.get(w, Fraction(0)) + Fraction(1, total)
    return law


def empirical_law(
    model: str, n: int, param: int, count: int, seed: int
) -> Dict[Tuple[int, ...], Fraction]:
    rng = random.Random(seed)
    counts: Dict[Tuple[int, ...], int] = {}
    for _ in range(count):
        w = sample_shuffle(model, n, param, rng=rng)
        counts[w] = counts.get(w, 0) + 1
    return {w: Fraction(c, count) for w, c in counts.items()}


def tv_distance(p: Dict, q: Dict) -> Fraction:
    """Total variation distance: half the L1 distance."""
    keys = set(p) | set(q)
    return sum(abs(p.get(k, Fraction(0)) - q.get(k, Fraction(0))) for k in keys) / 2
