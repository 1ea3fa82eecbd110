"""Exhaustive checks of reduced-word facts over a ball of W.

The two factorization checks enumerate elements x of bounded length and
every reduced factorization x = w t v with w in W_{S-t}, found through the
prefixes of x.
"""
from __future__ import annotations

from itertools import combinations

from .coxeter import INF, CoxeterGroup, Element
from .nerve import ruin_context


def prefixes(W: CoxeterGroup, x: Element) -> list[Element]:
    """All p with l(p) + l(p^-1 x) = l(x), shortest first."""
    memo: dict = {}

    def walk(y: Element) -> set:
        if y.word not in memo:
            out = {()}
            for s in W.left_descents(y):
                rest = W.normal_form((s,) + y.word)
                for p in walk(rest):
                    out.add(W.normal_form((s,) + p).word)
            memo[y.word] = out
        return memo[y.word]

    return sorted((Element(p) for p in walk(x)), key=lambda e: e.key)


def _factorizations(W: CoxeterGroup, x: Element):
    """Triples (w, t, v) with x = w t v reduced and t not in S(w)."""
    for w in prefixes(W, x):
        rest = W.normal_form(tuple(reversed(w.word)) + x.word)
        for t in sorted(W.left_descents(rest)):
            if t in w.support:
                continue
            yield w, t, W.normal_form((t,) + rest.word)


def check_one_reduction(W: CoxeterGroup, radius: int) -> tuple[int, list[dict]]:
    """If r in S(w) - S(v) and m_rt != 2, every reduced word for wtv has its r's left of its t's."""
    instances, failures = 0, []
    for x in W.enumerate_ball(radius):
        words = None
        for w, t, v in _factorizations(W, x):
            for r in sorted(w.support - v.support):
                if W.m(r, t) == 2:
                    continue
                instances += 1
                words = words if words is not None else sorted(W.braid_class(x.word))
                for u in words:
                    last_r = max(i for i, a in enumerate(u) if a == r)
                    first_t = min(i for i, a in enumerate(u) if a == t)
                    if last_r > first_t:
                        failures.append({"w": W.format(w), "t": W.generators[t], "v": W.format(v),
                                         "r": W.generators[r], "word": W.format(u)})
                        break
    return instances, failures


def check_reduction(W: CoxeterGroup, radius: int) -> tuple[int, list[dict]]:
    """tstw' = wtv reduced with S(v) in U_st+{s,t} forces S(w) in U_st+{s}.

    Only elements x = tstw' of length <= radius are examined, so w' ranges over
    elements of length <= radius - 3 with tst as a reduced prefix.
    """
    instances, failures = 0, []
    if radius < 3:
        return instances, failures
    for t in range(W.rank):
        for s in range(W.rank):
            m = W.m(s, t)
            if not 2 < m < INF:
                continue
            U_st = frozenset(r for r in range(W.rank) if W.m(r, t) == 2 and W.m(r, s) == 2)
            head = (t, s, t)
            seen = set()
            for w_prime in W.enumerate_ball(radius - 3):
                x = W.normal_form(head + w_prime.word)
                if x.length != 3 + w_prime.length or x.word in seen:
                    continue
                seen.add(x.word)
                for w, t2, v in _factorizations(W, x):
                    if t2 != t or not v.support <= U_st | {s, t}:
                        continue
                    instances += 1
                    if not w.support <= U_st | {s}:
                        failures.append({"s": W.generators[s], "t": W.generators[t],
                                         "w": W.format(w), "v": W.format(v), "x": W.format(x)})
    return instances, failures


def check_exchange(W: CoxeterGroup, radius: int) -> tuple[int, list[dict]]:
    """Exchange condition, even refinement: if l(sw) < l(w), deleting some s from w gives sw."""
    instances, failures = 0, []
    for w in W.enumerate_ball(radius):
        for s in range(W.rank):
            sw = W.normal_form((s,) + w.word)
            instances += 1
            if sw.length == w.length + 1:
                continue
            hits = [i for i, a in enumerate(w.word) if W.normal_form(w.word[:i] + w.word[i + 1:]) == sw]
            if not hits or (W.even and all(w.word[i] != s for i in hits)):
                failures.append({"w": W.format(w), "s": W.generators[s]})
    return instances, failures


def check_alternating_reduced(W: CoxeterGroup, max_length: int = 7) -> tuple[int, list[dict]]:
    """Alternating words tst...st in W_{s,t}, s in S'(t), are (U-t, U-t)-reduced."""
    instances, failures = 0, []
    for t in range(W.rank):
        ctx = ruin_context(W, t)
        rest = ctx.U - {t}
        for s in sorted(ctx.S_prime):
            m = int(W.m(s, t))
            for n in range(1, min(max_length, m) + 1, 2):
                u = W.normal_form(tuple(t if i % 2 == 0 else s for i in range(n)))
                instances += 1
                if u.length != n or not W.is_XY_reduced(u, rest, rest):
                    failures.append({"t": W.generators[t], "s": W.generators[s], "u": W.format(u)})
    return instances, failures


def check_homomorphism(W: CoxeterGroup, radius: int) -> tuple[int, list[dict]]:
    """g_ST(ab) = g_ST(a) g_ST(b) for all a, b in the ball and every T of size <= 2."""
    S = W.all_gens
    subsets = [frozenset(c) for k in range(3) for c in combinations(sorted(S), k)]
    ball = W.enumerate_ball(radius)
    instances, failures = 0, []
    for T in subsets:
        image = {a.word: W.g_VT(a, S, T) for a in ball}
        for a in ball:
            for b in ball:
                instances += 1
                ab = W.multiply(a, b)
                if W.g_VT(ab, S, T) != W.multiply(image[a.word], image[b.word]):
                    failures.append({"a": W.format(a), "b": W.format(b), "T": W.names(T)})
    return instances, failures
