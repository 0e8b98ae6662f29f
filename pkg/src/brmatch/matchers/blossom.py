"""Maximum-weight matching in general graphs (Edmonds' blossom method).

Primal-dual implementation with O(n^3) time, following the classical
Gabow / Galil formulation: vertex duals start at the maximum edge weight,
the search grows alternating trees of S- and T-labelled (sub)blossoms, and
each stage ends either in an augmentation or in a dual certificate that no
augmenting path of positive gain remains. The matching is not required to
be perfect.

Notation used throughout: edge ``k`` joins ``edges[k][0]`` and
``edges[k][1]``; its two *endpoints* are ``2k`` and ``2k + 1``, and
``endpoint[p]`` is the vertex at endpoint ``p``. ``p ^ 1`` is the opposite
endpoint of the same edge. Blossom ids are ``n .. 2n-1``; ids below ``n``
are single vertices (trivial blossoms).
"""

from __future__ import annotations

from typing import Sequence

FREE, S_LABEL, T_LABEL = 0, 1, 2
_BREADCRUMB = 4


class _BlossomMatcher:
    def __init__(self, n: int, edges: Sequence[tuple[int, int, float]]):
        self.n = n
        self.edges = list(edges)
        m = len(self.edges)
        max_w = max((w for _, _, w in self.edges), default=0.0)
        self.endpoint = [self.edges[p >> 1][p & 1] for p in range(2 * m)]
        self.neighbend: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(self.edges):
            self.neighbend[i].append(2 * k + 1)
            self.neighbend[j].append(2 * k)

        self.mate = [-1] * n
        self.label = [FREE] * (2 * n)
        self.labelend = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.parent = [-1] * (2 * n)
        self.childs: list[list[int] | None] = [None] * (2 * n)
        self.base = list(range(n)) + [-1] * n
        self.endps: list[list[int] | None] = [None] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        self.blossombestedges: list[list[int] | None] = [None] * (2 * n)
        self.unused = list(range(n, 2 * n))
        self.dual = [max(max_w, 0.0)] * n + [0.0] * n
        self.allowedge = [False] * m
        self.queue: list[int] = []

    def slack(self, k: int) -> float:
        i, j, w = self.edges[k]
        return self.dual[i] + self.dual[j] - 2 * w

    def leaves(self, b: int):
        if b < self.n:
            yield b
            return
        stack = [b]
        while stack:
            t = stack.pop()
            if t < self.n:
                yield t
            else:
                stack.extend(reversed(self.childs[t]))

    def assign_label(self, w: int, t: int, p: int) -> None:
        while True:
            b = self.inblossom[w]
            self.label[w] = self.label[b] = t
            self.labelend[w] = self.labelend[b] = p
            self.bestedge[w] = self.bestedge[b] = -1
            if t == S_LABEL:
                self.queue.extend(self.leaves(b))
                return
            # a T-blossom forces its mate to become S
            mbase = self.mate[self.base[b]]
            w, t, p = self.endpoint[mbase], S_LABEL, mbase ^ 1

    def scan_blossom(self, v: int, w: int) -> int:
        """Trace back from ``v`` and ``w``; return the new blossom's base
        or -1 when the two trees are disjoint (augmenting path found)."""
        label, endpoint, labelend, inblossom = (
            self.label, self.endpoint, self.labelend, self.inblossom)
        path = []
        found = -1
        while v != -1 or w != -1:
            b = inblossom[v]
            if label[b] & _BREADCRUMB:
                found = self.base[b]
                break
            path.append(b)
            label[b] = S_LABEL | _BREADCRUMB
            if labelend[b] == -1:
                v = -1
            else:
                v = endpoint[labelend[b]]
                b = inblossom[v]
                v = endpoint[labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            label[b] = S_LABEL
        return found

    def add_blossom(self, base: int, k: int) -> None:
        v, w, _ = self.edges[k]
        inblossom, labelend, endpoint = self.inblossom, self.labelend, self.endpoint
        bb = inblossom[base]
        bv = inblossom[v]
        bw = inblossom[w]
        b = self.unused.pop()
        self.base[b] = base
        self.parent[b] = -1
        self.parent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        while bv != bb:
            self.parent[bv] = b
            path.append(bv)
            endps.append(labelend[bv])
            v = endpoint[labelend[bv]]
            bv = inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.parent[bw] = b
            path.append(bw)
            endps.append(labelend[bw] ^ 1)
            w = endpoint[labelend[bw]]
            bw = inblossom[w]
        self.childs[b] = path
        self.endps[b] = endps
        self.label[b] = S_LABEL
        labelend[b] = labelend[bb]
        self.dual[b] = 0.0
        for leaf in self.leaves(b):
            if self.label[inblossom[leaf]] == T_LABEL:
                self.queue.append(leaf)
            inblossom[leaf] = b

        # least-slack edges from the new blossom to every neighbouring S-blossom
        best_to = [-1] * (2 * self.n)
        for sub in path:
            if self.blossombestedges[sub] is None:
                lists = [[p >> 1 for p in self.neighbend[x]] for x in self.leaves(sub)]
            else:
                lists = [self.blossombestedges[sub]]
            for lst in lists:
                for kk in lst:
                    i, j, _ = self.edges[kk]
                    if inblossom[j] == b:
                        i, j = j, i
                    bj = inblossom[j]
                    if (bj != b and self.label[bj] == S_LABEL
                            and (best_to[bj] == -1
                                 or self.slack(kk) < self.slack(best_to[bj]))):
                        best_to[bj] = kk
            self.blossombestedges[sub] = None
            self.bestedge[sub] = -1
        self.blossombestedges[b] = [kk for kk in best_to if kk != -1]
        self.bestedge[b] = -1
        for kk in self.blossombestedges[b]:
            if self.bestedge[b] == -1 or self.slack(kk) < self.slack(self.bestedge[b]):
                self.bestedge[b] = kk

    def expand_blossom(self, b: int, endstage: bool) -> None:
        n = self.n
        for s in self.childs[b]:
            self.parent[s] = -1
            if s < n:
                self.inblossom[s] = s
            elif endstage and self.dual[s] == 0:
                self.expand_blossom(s, endstage)
            else:
                for leaf in self.leaves(s):
                    self.inblossom[leaf] = s

        if not endstage and self.label[b] == T_LABEL:
            # relabel the part of the cycle that stays on the alternating path
            childs = self.childs[b]
            endps = self.endps[b]
            endpoint = self.endpoint
            entry = self.inblossom[endpoint[self.labelend[b] ^ 1]]
            j = childs.index(entry)
            if j & 1:
                j -= len(childs)
                jstep, trick = 1, 0
            else:
                jstep, trick = -1, 1
            p = self.labelend[b]
            while j != 0:
                self.label[endpoint[p ^ 1]] = FREE
                self.label[endpoint[endps[j - trick] ^ trick ^ 1]] = FREE
                self.assign_label(endpoint[p ^ 1], T_LABEL, p)
                self.allowedge[endps[j - trick] >> 1] = True
                j += jstep
                p = endps[j - trick] ^ trick
                self.allowedge[p >> 1] = True
                j += jstep
            bv = childs[j]
            self.label[endpoint[p ^ 1]] = self.label[bv] = T_LABEL
            self.labelend[endpoint[p ^ 1]] = self.labelend[bv] = p
            self.bestedge[bv] = -1
            j += jstep
            while childs[j] != entry:
                bv = childs[j]
                if self.label[bv] == S_LABEL:
                    j += jstep
                    continue
                labelled = next((x for x in self.leaves(bv) if self.label[x] != FREE), None)
                if labelled is not None:
                    self.label[labelled] = FREE
                    self.label[endpoint[self.mate[self.base[bv]]]] = FREE
                    self.assign_label(labelled, T_LABEL, self.labelend[labelled])
                j += jstep

        self.label[b] = self.labelend[b] = -1
        self.childs[b] = self.endps[b] = None
        self.base[b] = -1
        self.blossombestedges[b] = None
        self.bestedge[b] = -1
        self.unused.append(b)

    def augment_blossom(self, b: int, v: int) -> None:
        """Rotate blossom ``b`` so that vertex ``v`` becomes its base."""
        t = v
        while self.parent[t] != b:
            t = self.parent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        childs = self.childs[b]
        endps = self.endps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, trick = 1, 0
        else:
            jstep, trick = -1, 1
        endpoint = self.endpoint
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - trick] ^ trick
            if t >= self.n:
                self.augment_blossom(t, endpoint[p])
            j += jstep
            t = childs[j]
            if t >= self.n:
                self.augment_blossom(t, endpoint[p ^ 1])
            self.mate[endpoint[p]] = p ^ 1
            self.mate[endpoint[p ^ 1]] = p
        self.childs[b] = childs[i:] + childs[:i]
        self.endps[b] = endps[i:] + endps[:i]
        self.base[b] = self.base[self.childs[b][0]]

    def augment_matching(self, k: int) -> None:
        v, w, _ = self.edges[k]
        endpoint, labelend, inblossom = self.endpoint, self.labelend, self.inblossom
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = inblossom[s]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if labelend[bs] == -1:
                    break
                t = endpoint[labelend[bs]]
                bt = inblossom[t]
                s = endpoint[labelend[bt]]
                j = endpoint[labelend[bt] ^ 1]
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = labelend[bt]
                p = labelend[bt] ^ 1

    def _stage(self) -> bool:
        n = self.n
        label, inblossom = self.label, self.inblossom
        label[:] = [FREE] * (2 * n)
        self.bestedge[:] = [-1] * (2 * n)
        self.blossombestedges[n:] = [None] * n
        self.allowedge[:] = [False] * len(self.edges)
        self.queue.clear()
        for v in range(n):
            if self.mate[v] == -1 and label[inblossom[v]] == FREE:
                self.assign_label(v, S_LABEL, -1)

        while True:
            while self.queue:
                v = self.queue.pop()
                for p in self.neighbend[v]:
                    k = p >> 1
                    w = self.endpoint[p]
                    if inblossom[v] == inblossom[w]:
                        continue
                    kslack = 0.0
                    if not self.allowedge[k]:
                        kslack = self.slack(k)
                        if kslack <= 0:
                            self.allowedge[k] = True
                    if self.allowedge[k]:
                        bw_label = label[inblossom[w]]
                        if bw_label == FREE:
                            self.assign_label(w, T_LABEL, p ^ 1)
                        elif bw_label == S_LABEL:
                            base = self.scan_blossom(v, w)
                            if base >= 0:
                                self.add_blossom(base, k)
                            else:
                                self.augment_matching(k)
                                return True
                        elif label[w] == FREE:
                            label[w] = T_LABEL
                            self.labelend[w] = p ^ 1
                    elif label[inblossom[w]] == S_LABEL:
                        b = inblossom[v]
                        if self.bestedge[b] == -1 or kslack < self.slack(self.bestedge[b]):
                            self.bestedge[b] = k
                    elif label[w] == FREE:
                        if self.bestedge[w] == -1 or kslack < self.slack(self.bestedge[w]):
                            self.bestedge[w] = k

            # no tight edge left to explore: move the duals
            dual = self.dual
            delta_type = 1
            delta = min(dual[:n])
            delta_edge = delta_blossom = -1
            for v in range(n):
                if label[inblossom[v]] == FREE and self.bestedge[v] != -1:
                    d = self.slack(self.bestedge[v])
                    if d < delta:
                        delta, delta_type, delta_edge = d, 2, self.bestedge[v]
            for b in range(2 * n):
                if self.parent[b] == -1 and label[b] == S_LABEL and self.bestedge[b] != -1:
                    d = self.slack(self.bestedge[b]) / 2
                    if d < delta:
                        delta, delta_type, delta_edge = d, 3, self.bestedge[b]
            for b in range(n, 2 * n):
                if (self.base[b] >= 0 and self.parent[b] == -1
                        and label[b] == T_LABEL and dual[b] < delta):
                    delta, delta_type, delta_blossom = dual[b], 4, b
            if delta < 0:
                delta = 0.0

            for v in range(n):
                lv = label[inblossom[v]]
                if lv == S_LABEL:
                    dual[v] -= delta
                elif lv == T_LABEL:
                    dual[v] += delta
            for b in range(n, 2 * n):
                if self.base[b] >= 0 and self.parent[b] == -1:
                    if label[b] == S_LABEL:
                        dual[b] += delta
                    elif label[b] == T_LABEL:
                        dual[b] -= delta

            if delta_type == 1:
                return False
            if delta_type == 2:
                self.allowedge[delta_edge] = True
                i, j, _ = self.edges[delta_edge]
                if label[inblossom[i]] == FREE:
                    i, j = j, i
                self.queue.append(i)
            elif delta_type == 3:
                self.allowedge[delta_edge] = True
                i, _, _ = self.edges[delta_edge]
                self.queue.append(i)
            else:
                self.expand_blossom(delta_blossom, False)

    def solve(self) -> list[int]:
        n = self.n
        for _ in range(n):
            if not self._stage():
                break
            for b in range(n, 2 * n):
                if (self.parent[b] == -1 and self.base[b] >= 0
                        and self.label[b] == S_LABEL and self.dual[b] == 0):
                    self.expand_blossom(b, True)
        return [self.endpoint[p] if p >= 0 else -1 for p in self.mate]


def max_weight_matching_mates(
    n: int, edges: Sequence[tuple[int, int, float]]
) -> list[int]:
    """Return ``mate[v]`` (or -1) for a maximum-weight matching.

    ``edges`` holds ``(u, v, weight)`` triples over vertices ``0..n-1`` with
    ``u != v`` and at most one edge per vertex pair.
    """
    if not edges:
        return [-1] * n
    return _BlossomMatcher(n, edges).solve()
