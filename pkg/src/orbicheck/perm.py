"""Permutation groups via a base and strong generating set.

A permutation is a 1-d numpy integer array ``p`` with ``p[i]`` the image of
point i.  Products read left to right: "g then h" is ``h[g]``.

Each level of the stabiliser chain keeps its base point, its strong
generators, the orbit, and for every orbit point the inverse of a coset
representative (a permutation sending that point back to the base point).
Construction is randomised Schreier-Sims followed by a deterministic pass
that sifts every Schreier generator; a non-trivial residue found there is
added and the pass restarts, so the final chain does not depend on luck.
"""

from pathlib import Path

import numpy as np


class PermError(ValueError):
    pass


def identity(n, dtype=np.int32):
    return np.arange(n, dtype=dtype)


def inverse(p):
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def is_identity(p):
    return bool((p == np.arange(len(p))).all())


def compose(*perms):
    """Apply the permutations from left to right."""
    out = perms[0]
    for p in perms[1:]:
        out = p[out]
    return out


def order_of(p):
    seen = np.zeros(len(p), dtype=bool)
    from math import lcm
    result = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, n = i, 0
        while not seen[j]:
            seen[j] = True
            j = int(p[j])
            n += 1
        result = lcm(result, n)
    return result


class _Level:
    def __init__(self, point, degree, dtype):
        self.point = int(point)
        self.gens = []
        self.degree = degree
        self.dtype = dtype
        self.rebuild()

    def rebuild(self):
        n = self.degree
        pos = np.full(n, -1, dtype=np.int64)
        pos[self.point] = 0
        cap = 64
        tinv = np.empty((cap, n), dtype=self.dtype)
        tinv[0] = np.arange(n)
        orbit = np.empty(n, dtype=np.int64)
        orbit[0] = self.point
        count = 1
        frontier = np.array([0])
        ginvs = [inverse(g) for g in self.gens]
        while len(frontier):
            start = count
            for g, gi in zip(self.gens, ginvs):
                img = g[orbit[frontier]]
                fresh = pos[img] < 0
                if not fresh.any():
                    continue
                img_f, first = np.unique(img[fresh], return_index=True)
                src = frontier[fresh][first]
                m = len(img_f)
                while count + m > cap:
                    cap *= 2
                    grown = np.empty((cap, n), dtype=self.dtype)
                    grown[:count] = tinv[:count]
                    tinv = grown
                # representative of g(f) is u_f then g, so its inverse is g^-1 then u_f^-1
                tinv[count:count + m] = tinv[src][:, gi]
                pos[img_f] = np.arange(count, count + m)
                orbit[count:count + m] = img_f
                count += m
            frontier = np.arange(start, count)
        self.orbit = orbit[:count].copy()
        self.pos = pos
        self.tinv = tinv[:count].copy()

    def __len__(self):
        return len(self.orbit)


class PermGroup:
    """A permutation group on ``range(degree)`` with a verified stabiliser chain."""

    def __init__(self, degree, generators, base_hint=(), seed=0, patience=40, verify=True):
        self.degree = int(degree)
        self.dtype = np.int16 if self.degree < 2 ** 15 else np.int32
        self.generators = [np.asarray(g, dtype=self.dtype) for g in generators]
        for g in self.generators:
            if g.shape != (self.degree,) or not (np.sort(g) == np.arange(self.degree)).all():
                raise PermError("generator is not a permutation of the domain")
        self.generators = [g for g in self.generators if not is_identity(g)]
        self.base_hint = [int(b) for b in base_hint]
        self.levels = []
        self.rng = np.random.default_rng(seed)
        if self.generators:
            self._randomised(patience)
            if verify:
                self._verify()

    # -- chain maintenance ---------------------------------------------------

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    def strong_generators(self):
        seen, out = set(), []
        for lv in self.levels:
            for g in lv.gens:
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(g)
        return out

    def _new_base_point(self, g):
        for b in self.base_hint:
            if b not in self.base and g[b] != b:
                return b
        moved = np.nonzero(g != np.arange(self.degree))[0]
        return int(moved[0])

    def _add_strong(self, g, depth):
        """Add residue g (fixing base points < depth) to levels 0..depth."""
        if depth == len(self.levels):
            self.levels.append(_Level(self._new_base_point(g), self.degree, self.dtype))
        for lv in self.levels[:depth + 1]:
            lv.gens.append(g)
            lv.rebuild()

    def sift(self, g, start=0):
        """Strip g through the chain; returns (residue, depth reached)."""
        for d in range(start, len(self.levels)):
            lv = self.levels[d]
            k = lv.pos[g[lv.point]]
            if k < 0:
                return g, d
            g = lv.tinv[k][g]
        return g, len(self.levels)

    def _random_elements(self):
        gens = list(self.generators)
        state = [gens[i % len(gens)].copy() for i in range(max(10, len(gens)))]
        acc = identity(self.degree, self.dtype)
        for _ in range(50):
            state, acc = self._pr_step(state, acc)
        while True:
            state, acc = self._pr_step(state, acc)
            yield acc

    def _pr_step(self, state, acc):
        i, j = self.rng.choice(len(state), size=2, replace=False)
        s = state[j] if self.rng.integers(2) else inverse(state[j])
        if self.rng.integers(2):
            state[i] = s[state[i]]
            acc = state[i][acc]
        else:
            state[i] = state[i][s]
            acc = acc[state[i]]
        return state, acc

    def _randomised(self, patience):
        for g in self.generators:
            res, d = self.sift(g)
            if not is_identity(res):
                self._add_strong(res, d)
        quiet = 0
        for r in self._random_elements():
            res, d = self.sift(r)
            if is_identity(res):
                quiet += 1
                if quiet >= patience:
                    break
            else:
                self._add_strong(res, d)
                quiet = 0

    def _verify(self):
        restart = True
        while restart:
            restart = False
            for i in range(len(self.levels) - 1, -1, -1):
                lv = self.levels[i]
                for k in range(len(lv.orbit)):
                    u = inverse(lv.tinv[k])
                    for s in lv.gens:
                        us = s[u]
                        kk = lv.pos[us[lv.point]]
                        schreier = lv.tinv[kk][us]
                        res, d = self.sift(schreier, i + 1)
                        if not is_identity(res):
                            self._add_strong(res, d)
                            restart = True
                            break
                    if restart:
                        break
                if restart:
                    break

    # -- queries -------------------------------------------------------------

    def order(self):
        n = 1
        for lv in self.levels:
            n *= len(lv)
        return n

    def orbit_lengths(self):
        return [len(lv) for lv in self.levels]

    def contains(self, g):
        g = np.asarray(g, dtype=self.dtype)
        res, _ = self.sift(g)
        return is_identity(res)

    def random_element(self):
        """Uniform random element from the transversals."""
        g = identity(self.degree, self.dtype)
        for lv in reversed(self.levels):
            k = int(self.rng.integers(len(lv)))
            g = inverse(lv.tinv[k])[g]
        return g

    def orbit(self, point):
        return orbit(self.strong_generators() or [identity(self.degree, self.dtype)], point)

    # -- cache ---------------------------------------------------------------

    def to_text(self):
        """Line 1 degree, line 2 base, then one strong generator per line."""
        lines = [str(self.degree), " ".join(map(str, self.base))]
        for g in self.strong_generators():
            lines.append(" ".join(map(str, g.tolist())))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        text = text.splitlines()
        degree = int(text[0])
        base = [int(t) for t in text[1].split()]
        gens = [np.array([int(t) for t in ln.split()]) for ln in text[2:] if ln.strip()]
        if any(len(g) != degree or sorted(g.tolist()) != list(range(degree)) for g in gens):
            raise PermError("cached generator is not a permutation of the right degree")
        grp = cls(degree, [], base)
        grp.generators = [np.asarray(g, dtype=grp.dtype) for g in gens]
        for i, b in enumerate(base):
            lv = _Level(b, degree, grp.dtype)
            lv.gens = [g for g in grp.generators if all(g[c] == c for c in base[:i])]
            lv.rebuild()
            grp.levels.append(lv)
        return grp

    def save(self, path):
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path):
        return cls.from_text(Path(path).read_text())


def orbit(generators, point):
    """Orbit of ``point`` under the generators (breadth-first closure)."""
    n = len(generators[0])
    seen = np.zeros(n, dtype=bool)
    seen[point] = True
    frontier = np.array([point])
    while len(frontier):
        imgs = np.unique(np.concatenate([g[frontier] for g in generators]))
        imgs = imgs[~seen[imgs]]
        seen[imgs] = True
        frontier = imgs
    return np.nonzero(seen)[0]


def induced_action(perm, classes):
    """Action on blocks: ``classes[i]`` is the block id of point i (ids 0..k-1)."""
    k = int(classes.max()) + 1
    rep = np.full(k, -1, dtype=np.int64)
    rep[classes[::-1]] = np.arange(len(classes))[::-1]
    return classes[perm[rep]]


def orbit_and_stabilizer(group, point=None, classes=None):
    """(orbit size, stabiliser order) of a point, or of a block when ``classes`` is given."""
    gens = group.strong_generators()
    if not gens:
        return 1, group.order()
    if classes is None:
        size = len(orbit(gens, point))
    else:
        block_gens = [induced_action(g, classes) for g in gens]
        size = len(orbit(block_gens, int(classes[point])))
    order = group.order()
    if order % size:
        raise PermError("orbit length does not divide the group order")
    return size, order // size
