"""Connected components of a region sample, cut by the reducibility segments."""

from collections import deque
from functools import lru_cache

from triality.unitary import ISOLATED, region_sample


@lru_cache(maxsize=None)
def default_sample():
    """The 200 x 200 sample of [0,4] x [0,6], shared between test modules."""
    return region_sample((0, 4, 0, 6), 200)


def _orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def crosses(p, q, a, b) -> bool:
    """Whether segment pq meets segment ab."""
    o1, o2, o3, o4 = _orient(p, q, a), _orient(p, q, b), _orient(a, b, p), _orient(a, b, q)
    if o1 != o2 and o3 != o4:
        return True

    def on(u, v, w):
        return min(u[0], v[0]) <= w[0] <= max(u[0], v[0]) and min(u[1], v[1]) <= w[1] <= max(u[1], v[1])

    return any(
        o == 0 and on(*seg, pt)
        for o, seg, pt in ((o1, (p, q), a), (o2, (p, q), b), (o3, (a, b), p), (o4, (a, b), q))
    )


def components(sample):
    n = sample.n
    segs = [(p0, p1) for p0, p1, _ in sample.lines]
    inside = {(i, j) for j in range(n) for i in range(n) if sample.verdict_at(i, j) != "outside"}
    iso = {(i, j) for (i, j) in inside if sample.verdict_at(i, j) == ISOLATED}
    centre = lambda i, j: sample.cells[j * n + i][:2]  # noqa: E731
    seen, comps = set(), []
    for start in sorted(inside - iso):
        if start in seen:
            continue
        comp, todo = [], deque([start])
        seen.add(start)
        while todo:
            i, j = todo.popleft()
            comp.append((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in inside and nb not in iso and nb not in seen:
                    if not any(crosses(centre(i, j), centre(*nb), a, b) for a, b in segs):
                        seen.add(nb)
                        todo.append(nb)
        comps.append(comp)
    return comps
