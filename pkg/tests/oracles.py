"""Independent closed-form expansions used as test oracles.

Dyer-Lashof generators are enumerated here in upper-index form, and the
homology of free algebras is counted with truncated Poincare series, so
nothing below shares code with the engine.
"""

from __future__ import annotations

from collections import Counter

INF = 10**9


# -- Dyer-Lashof generators, upper indices -------------------------------


def upper_dl(q: int, w: int, p: int, n: int, max_degree: int) -> list[tuple[int, int]]:
    """(degree, weight) of every admissible Q^I x with I nonempty, |x| = q, weight w.

    p = 2: Q^s on degree d lands in d + s, allowed for d < s < d + n.
    odd p: beta^e Q^s lands in d + 2s(p-1) - e, allowed for d < 2s < d + n.
    Admissible: s_j <= 2 s_{j+1} (p = 2), s_j <= p s_{j+1} - e_{j+1} (odd p).
    """
    out = []
    if p == 0:
        return out

    # state: (degree, weight, last s, last e)
    def grow(d, wt, last):
        for s in range(1, max_degree + 1):
            if p == 2:
                lower = s - d
                if not 0 < lower < n:
                    continue
                if last is not None and s > 2 * last[0]:
                    continue
                nd = d + s
                if nd > max_degree:
                    continue
                out.append((nd, wt * 2))
                grow(nd, wt * 2, (s, 0))
            else:
                lower = 2 * s - d
                if not 0 < lower < n:
                    continue
                if last is not None and s > p * last[0] - last[1]:
                    continue
                for e in (0, 1):
                    nd = d + 2 * s * (p - 1) - e
                    if nd > max_degree:
                        continue
                    out.append((nd, wt * p))
                    grow(nd, wt * p, (s, e))

    grow(q, w, None)
    return out


# -- truncated series -----------------------------------------------------


class Series:
    """Counter over (degree, weight), truncated at degree D and weight W."""

    def __init__(self, D: int, W: int = INF, terms=None):
        self.D, self.W = D, W
        self.c = Counter()
        for (d, w), v in (terms or {}).items():
            if d <= D and w <= W and v:
                self.c[(d, w)] += v

    @classmethod
    def one(cls, D, W=INF):
        return cls(D, W, {(0, 0): 1})

    def shift(self, d: int, w: int) -> "Series":
        return Series(self.D, self.W, {(a + d, b + w): v for (a, b), v in self.c.items()})

    def __add__(self, other: "Series") -> "Series":
        s = Series(self.D, self.W, dict(self.c))
        for k, v in other.c.items():
            s.c[k] += v
        return s

    def times_generator(self, d: int, w: int, exterior: bool) -> "Series":
        if d == 0 and w == 0:
            raise ValueError("degree-0 weight-0 generator has an infinite series")
        out = Counter()
        for (a, b), v in self.c.items():
            k = 0
            while True:
                na, nb = a + k * d, b + k * w
                if na > self.D or nb > self.W or (exterior and k > 1):
                    break
                out[(na, nb)] += v
                k += 1
        return Series(self.D, self.W, out)

    def by_degree(self) -> dict:
        out = Counter()
        for (d, _), v in self.c.items():
            out[d] += v
        return {k: v for k, v in out.items() if v}

    def by_degree_weight(self) -> dict:
        return {k: v for k, v in self.c.items() if v}


def free(gens, p: int, D: int, W: int = INF) -> Series:
    """Series of the free graded-commutative algebra on (degree, weight) generators."""
    s = Series.one(D, W)
    for d, w in gens:
        s = s.times_generator(d, w, exterior=(p != 2 and d % 2 == 1))
    return s


# -- configuration spaces of spheres with sphere labels -----------------


def conf_sphere_series(n: int, k: int, p: int, D: int, W: int = INF) -> Series:
    """H(C(S^n, S^k)) from the four cases of the closed form, with the weight rule."""
    iota = (k, 1)
    br = (2 * k + n - 1, 2)
    ops_iota = upper_dl(k, 1, p, n, D)
    ops_br = upper_dl(br[0], 2, p, n, D)
    s = n + k
    if (n + k) % 2 == 1 or p == 2:
        base = free([iota] + ops_iota, p, D, W)
        return base + base.shift(s, 1)
    if n % 2 == 1:
        # n, k odd, char != 2: coker = F(Q) + iota F([i,i], Q); kernel = F([i,i], Q)
        q_only = free(ops_iota + ops_br, p, D, W)
        with_br = free([br] + ops_iota + ops_br, p, D, W)
        return q_only + with_br.shift(*iota) + with_br.shift(s, 1)
    if p == 0:
        f_iota = free([iota], p, D, W)
        return f_iota + f_iota.shift(s + br[0], 3) + Series.one(D, W).shift(s, 1)
    # n, k even, p odd
    q = ops_iota + ops_br
    f_iota = free([iota] + q, p, D, W)
    f_iota_p = free([(p * k, p)] + q, p, D, W)
    return (
        f_iota
        + f_iota_p.shift((p - 1) * k + br[0], p + 1)
        + f_iota.shift(s + br[0], 3)
        + f_iota_p.shift(s, 1)
    )


# -- components of the free mapping space of S^n ------------------------


def maps_sphere_series(n: int, component: int, p: int, D: int) -> dict:
    """Betti numbers by degree of the component Lambda^n_k S^n."""
    ops_iota = upper_dl(0, 1, p, n, D)
    has_br = n % 2 == 0 and p != 2
    br = (n - 1, 2)
    ops_br = upper_dl(br[0], 2, p, n, D) if has_br else []
    sphere_n = {0: 1, n: 1}

    def tensor(a: dict, b: dict) -> dict:
        out = Counter()
        for d1, v1 in a.items():
            for d2, v2 in b.items():
                if d1 + d2 <= D:
                    out[d1 + d2] += v1 * v2
        return dict(out)

    omega0 = free(ops_iota + ([br] if has_br else []) + ops_br, p, D).by_degree()
    if n % 2 == 1 or p == 2:
        return tensor(omega0, sphere_n)
    if p == 0:
        if component == 0:
            return tensor({0: 1, n - 1: 1}, sphere_n)
        return {d: 1 for d in (0, 2 * n - 1) if d <= D}
    if component % p == 0:
        return tensor(omega0, sphere_n)
    fq = free(ops_iota + ops_br, p, D).by_degree()
    return tensor(fq, {0: 1, 2 * n - 1: 1})
