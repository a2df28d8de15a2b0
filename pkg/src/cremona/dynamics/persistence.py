"""Which proper base-points persist under forward and backward iteration."""
from dataclasses import dataclass, field

from ..cremap.maps import verify_inverse, compose, InverseError
from .basepoints import proper_base_points, is_base_point, normalize_point, count_proper
from .jonquieres import jonquieres_bp_count, preserves_pencil

CLASS_NAMES = ("B++", "B+-", "B-+", "B--")


@dataclass
class PersistenceReport:
    N: int
    proper_base_points: dict
    classes: dict
    unsettled: list
    nu_proper: int
    b_counts: dict
    degrees: dict
    flags: list = field(default_factory=list)

    def to_json(self):
        from ..report import scalar

        def pt(p):
            return [scalar(c) for c in p]

        return {
            "N": self.N,
            "proper_base_points": {str(k): [b.to_json() for b in v]
                                   for k, v in sorted(self.proper_base_points.items())},
            "classes": {c: [pt(p) for p in self.classes[c]] for c in CLASS_NAMES},
            "unsettled": [pt(p) for p in self.unsettled],
            "nu_proper": self.nu_proper,
            "b_counts": {str(k): v for k, v in sorted(self.b_counts.items())},
            "degrees": {str(k): v for k, v in sorted(self.degrees.items())},
            "flags": list(self.flags),
        }


def _image(phi, p):
    if is_base_point(phi, p):
        return None
    return normalize_point(phi(p))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def persistence_scan(phi, phi_inv, N=6, pencil_point=None):
    """Classify proper base-points of phi and phi^-1 by persistence.

    A point is forward persistent if it is a base-point of phi^k for every
    k in [ceil(N/2), N], and forward absent if for none of them; likewise
    backward with phi^-k.  Points that are neither (e.g. periodic
    behaviour inside the window) are listed as unsettled.
    """
    if N < 2:
        raise ValueError("need N >= 2")
    if not verify_inverse(phi, phi_inv):
        raise InverseError("phi_inv is not an inverse of phi")
    flags = []
    iters = {}
    cur_f, cur_b = phi, phi_inv
    for k in range(1, N + 1):
        if k > 1:
            cur_f = compose(phi, cur_f)
            cur_b = compose(phi_inv, cur_b)
        iters[k], iters[-k] = cur_f, cur_b
    bps = {k: proper_base_points(m) for k, m in iters.items()}
    degrees = {k: m.degree for k, m in iters.items()}

    uf = _UnionFind()
    cands = {}
    for k in (1, -1):
        for b in bps[k]:
            if not b.is_rational():
                flags.append("cluster of %d conjugate points of phi^%d skipped" % (b.degree, k))
                continue
            cands[b.coords] = True
    # orbit tracking with forward and backward images where defined
    frontier = list(cands)
    for p in frontier:
        uf.find(p)
        for m in (phi, phi_inv):
            q = p
            for _ in range(N):
                q2 = _image(m, q)
                if q2 is None:
                    break
                uf.union(q, q2)
                q = q2
                if q not in cands:
                    cands[q] = True

    window = list(range((N + 1) // 2, N + 1))
    classes = {c: [] for c in CLASS_NAMES}
    unsettled = []
    for p in sorted(cands, key=lambda t: tuple(map(float, t))):
        fwd = [is_base_point(iters[k], p) for k in window]
        bwd = [is_base_point(iters[-k], p) for k in window]
        if (any(fwd) and not all(fwd)) or (any(bwd) and not all(bwd)):
            unsettled.append(p)
            continue
        name = "B" + ("+" if all(fwd) else "-") + ("+" if all(bwd) else "-")
        classes[name].append(p)
    nu = len({uf.find(p) for p in classes["B+-"]})

    b_counts = {}
    pencil = pencil_point is not None and preserves_pencil(phi, pencil_point)
    for k in range(1, N + 1):
        if pencil:
            b_counts[k] = jonquieres_bp_count(degrees[k])
        else:
            b_counts[k] = {"proper_only": count_proper(bps[k])}
    if pencil_point is not None and not pencil:
        flags.append("pencil through %s not preserved; counts are proper-only" % (pencil_point,))
    flags.append("nu_proper counts proper points only; equality with nu is not checked")
    return PersistenceReport(N, bps, classes, unsettled, nu, b_counts, degrees, flags)
