"""Schematic drawing of a two-dimensional one-letter ruin.

Collars are vertical strips placed side by side in breadth-first order of
the meeting graph, starting from the collar of e.  Even colors are filled,
odd ones left blank, and each strip's inner boundary is a bold vertical.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from .ruins import OneLetterRuin

PALETTE = ("#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc", "#fc9272", "#d9d9d9")
STRIP, STEP, MARGIN = 70, 28, 40


def _strip_order(omega: OneLetterRuin, comps: list[int]) -> list[int]:
    members = set(comps)
    adj: dict[int, set] = {c: set() for c in comps}
    for cell in omega.check_cells():
        found = sorted({info[2] for info in omega.cell_info(cell)} & members)
        for a in found:
            adj[a].update(b for b in found if b != a)
    order, seen = [], set()
    for start in comps:
        if start in seen:
            continue
        queue = [start]
        seen.add(start)
        while queue:
            c = queue.pop(0)
            order.append(c)
            for d in sorted(adj[c] - seen):
                seen.add(d)
                queue.append(d)
    return order


def _height(omega: OneLetterRuin, base: int, v: int) -> int:
    """Signed length of base^-1 v in W_{U-t}, sign from its first letter."""
    W, B = omega.group, omega.ball
    h = W.normal_form(tuple(reversed(B.words[base])) + B.words[v])
    if not h.word:
        return 0
    rest = sorted(omega.context.U - {omega.t})
    return h.length if h.word[0] == rest[0] else -h.length


def ruin_svg(omega: OneLetterRuin) -> str:
    W, B = omega.group, omega.ball
    if len(omega.context.U) > 3:
        raise ValueError("the diagram is drawn only when U has at most three generators")
    comps = sorted({int(omega.component[v]) for v in omega.check_vertices()})
    order = _strip_order(omega, comps)
    even_colors = sorted({omega.color(c) for c in comps if omega.parity(c) == "even"})
    fill = {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(even_colors)}

    dots: dict[int, list[tuple[int, str]]] = {c: [] for c in comps}
    for v in omega.check_vertices():
        c = int(omega.component[v])
        dots[c].append((_height(omega, c, v), W.format(B.words[v])))
    span = max((abs(h) for pts in dots.values() for h, _ in pts), default=0)
    height = 2 * MARGIN + (2 * span + 1) * STEP + 40
    width = 2 * MARGIN + len(order) * STRIP

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="10">',
           f'<title>{escape("Omega for t = " + W.generators[omega.t])}</title>']
    top, bottom = MARGIN + 20, height - MARGIN
    mid = top + (span + 0.5) * STEP
    for k, c in enumerate(order):
        x = MARGIN + k * STRIP
        even = omega.parity(c) == "even"
        color = fill.get(omega.color(c), "none") if even else "white"
        out.append(f'<rect x="{x}" y="{top}" width="{STRIP}" height="{bottom - top}" '
                   f'fill="{color}" stroke="#555" stroke-width="0.5"/>')
        out.append(f'<line x1="{x + STRIP}" y1="{top}" x2="{x + STRIP}" y2="{bottom}" '
                   f'stroke="black" stroke-width="3"/>')
        label = f"{W.format(B.words[c])} ({'even' if even else 'odd'})"
        out.append(f'<text x="{x + 4}" y="{top - 6}">{escape(label)}</text>')
        for h, name in sorted(dots[c]):
            y = mid - h * STEP
            out.append(f'<circle cx="{x + 12}" cy="{y:.1f}" r="3" fill="black"/>')
            if name in ("e", W.format((omega.t, *sorted(omega.context.S_prime)[:1], omega.t))):
                out.append(f'<text x="{x + 18}" y="{y + 3:.1f}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
