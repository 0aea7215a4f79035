"""Labeled Hasse diagrams of parabolic quotients and their embeddings.

Vertices are the minimal-length coset representatives, graded by length.
An edge carries label i when the longer endpoint is s_i times the shorter
one; with that rule the diagram of a rank-2 quotient is the expected path
and the two F4 quotients reproduce the familiar double-diamond shape.
(The right-handed variant w' = w*s_i leaves the quotient of the projective
plane disconnected, so the left-handed rule is the one actually drawn.)

The Pieri diagram keeps the same vertices but weights edge (u -> v) by
the coefficient of v in the hyperplane product H*u, read through the
correspondence between vertices and basis classes; reading the weighted
edges back regenerates the hyperplane multiplication table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import weyl as _weyl
from .schubert import ChowRing
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class HasseDiagram:
    """Edges increase length by one; label i means target = s_i * source."""

    theta: tuple[int, ...]
    vertices: tuple[WeylElement, ...]
    edges: tuple[tuple[int, int, int], ...]   # (source idx, target idx, label)

    def lengths(self) -> tuple[int, ...]:
        return tuple(v.length for v in self.vertices)


@dataclass(frozen=True)
class PieriDiagram:
    """Weighted edges follow increasing codimension of the basis classes,
    i.e. decreasing vertex length."""

    theta: tuple[int, ...]
    vertices: tuple[WeylElement, ...]
    edges: tuple[tuple[int, int, int], ...]   # (source idx, target idx, weight)

    def lengths(self) -> tuple[int, ...]:
        return tuple(v.length for v in self.vertices)


def build_hasse(group: WeylGroup, theta) -> HasseDiagram:
    theta = _weyl.normalize_theta(group.system, theta)
    vertices = group.minimal_coset_reps(theta)
    index = {v.images: k for k, v in enumerate(vertices)}
    edges = []
    for k, v in enumerate(vertices):
        for i in range(1, group.rank + 1):
            u = _weyl.mult_simple_left(v, i)
            if u.length == v.length + 1:
                j = index.get(u.images)
                if j is not None:
                    edges.append((k, j, i))
    edges.sort()
    return HasseDiagram(theta, vertices, tuple(edges))


def embed_diagram(group: WeylGroup, theta_big, theta_small) -> dict[WeylElement, WeylElement]:
    """Vertex map realizing H(theta_big) inside H(theta_small).

    A minimal representative v maps to v * w_{theta_big} * w_{theta_small};
    edges are preserved with their labels since the edge rule multiplies on
    the left and the map is a right translation.
    """
    theta_big = _weyl.normalize_theta(group.system, theta_big)
    theta_small = _weyl.normalize_theta(group.system, theta_small)
    if not set(theta_small) <= set(theta_big):
        raise ValueError("theta_small must be a subset of theta_big")
    w_big = group.longest_parabolic(theta_big)
    w_small = group.longest_parabolic(theta_small)
    shift = _weyl.multiply(w_big, w_small)
    small_vertices = {v.images for v in group.minimal_coset_reps(theta_small)}
    mapping = {}
    for v in group.minimal_coset_reps(theta_big):
        image = _weyl.multiply(v, shift)
        if image.images not in small_vertices:
            raise AssertionError("embedding left the target vertex set")
        mapping[v] = image
    return mapping


def build_pieri_diagram(ring: ChowRing, node: int) -> PieriDiagram:
    """Hyperplane-multiplication graph of CH(G/P_theta) for one node."""
    group = ring.group
    vertices = group.minimal_coset_reps(ring.theta)
    index = {v.images: k for k, v in enumerate(vertices)}
    # vertex <-> class dictionary: class rep = vertex * w_theta
    edges = []
    for k, v in enumerate(vertices):
        cls = ring.class_of(_weyl.multiply(v, ring.w_theta))
        if cls.codim >= ring.dim:
            continue
        product = ring.chevalley_mult(node, ring.element(cls))
        for target, weight in product.terms.items():
            tv = _weyl.multiply(target.rep, ring.w_theta)
            edges.append((k, index[tv.images], weight))
    edges.sort()
    return PieriDiagram(ring.theta, vertices, tuple(edges))


# ---------------------------------------------------------------------------
# export


def _vertex_names(diagram) -> list[str]:
    return [_weyl.serialize(v) for v in diagram.vertices]


def export_dot(diagram, by_codim: bool = False) -> str:
    """Deterministic DOT text; ``by_codim`` flips the drawing direction so
    codimension increases left to right."""
    names = _vertex_names(diagram)
    weighted = isinstance(diagram, PieriDiagram)
    lines = ["digraph hasse {", "  rankdir=LR;"]
    for k, v in enumerate(diagram.vertices):
        lines.append(f'  n{k} [label="{names[k]} (l={v.length})"];')
    for src, dst, tag in diagram.edges:
        a, b = (dst, src) if by_codim and not weighted else (src, dst)
        key = "weight" if weighted else "label"
        lines.append(f'  n{a} -> n{b} [{key}="{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(diagram) -> str:
    names = _vertex_names(diagram)
    payload = {
        "theta": list(diagram.theta),
        "vertices": [{"word": names[k], "length": v.length}
                     for k, v in enumerate(diagram.vertices)],
        "edges": [
            {"source": s, "target": t,
             ("weight" if isinstance(diagram, PieriDiagram) else "label"): tag}
            for s, t, tag in diagram.edges],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
