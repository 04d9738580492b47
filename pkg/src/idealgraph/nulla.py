"""Degree-bounded infeasibility certificate search over GF(2).

The 3-colorability encoding of a graph is the polynomial system

    x_i^3 + 1 = 0            for every vertex i,
    x_i^2 + x_i x_j + x_j^2  for every edge {i, j}.

A certificate of infeasibility of degree D is a family of multipliers
beta_i with deg(beta_i) <= D and  sum beta_i * f_i = 1.  Searching for one
is a linear solve over GF(2): one unknown per (generator, monomial of
degree <= D) pair, one equation per monomial of the expanded sum.  A None
answer is a completeness statement: no certificate of that degree exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .f2poly import F2Polynomial, Mono, mono, mono_key, mono_mul, poly_sum
from .gf2 import GF2Matrix, GF2Vector
from .graphs import Graph, GuardExceeded

GeneratorTag = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class Encoding3Col:
    """Generators of the 3-colorability system, tagged by provenance."""

    n: int
    generators: tuple[F2Polynomial, ...]
    tags: tuple[GeneratorTag, ...]

    def __post_init__(self):
        vertex = sum(1 for kind, _ in self.tags if kind == "vertex")
        edge = sum(1 for kind, _ in self.tags if kind == "edge")
        if vertex != self.n or vertex + edge != len(self.generators):
            raise ValueError("encoding must have n vertex generators plus |E| edge generators")


@dataclass(frozen=True)
class NullstellensatzCertificate:
    """Multipliers beta_i (one per generator) with sum beta_i f_i = 1."""

    degree: int
    generators: tuple[F2Polynomial, ...]
    tags: tuple[GeneratorTag, ...]
    coefficients: tuple[F2Polynomial, ...]


def vertex_generator(i: int) -> F2Polynomial:
    return F2Polynomial((mono((i, 3)), ()))


def edge_generator(i: int, j: int) -> F2Polynomial:
    return F2Polynomial((mono((i, 2)), mono((i, 1), (j, 1)), mono((j, 2))))


def encode_3col(g: Graph) -> Encoding3Col:
    """Vertex generators 1..n, then edge generators in lexicographic order."""
    if g.directed:
        raise ValueError("3-colorability encoding expects an undirected graph")
    if g.n < 1:
        raise ValueError("encoding needs at least one vertex")
    gens: list[F2Polynomial] = []
    tags: list[GeneratorTag] = []
    for i in range(1, g.n + 1):
        gens.append(vertex_generator(i))
        tags.append(("vertex", (i,)))
    for i, j in sorted(g.edges):
        gens.append(edge_generator(i, j))
        tags.append(("edge", (i, j)))
    return Encoding3Col(g.n, tuple(gens), tuple(tags))


def monomials_up_to_degree(nvars: int, degree: int) -> list[Mono]:
    """All monomials in x_1..x_nvars of total degree <= degree, graded-lex sorted."""
    out: list[Mono] = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(1, nvars + 1), d):
            exps: dict[int, int] = {}
            for v in combo:
                exps[v] = exps.get(v, 0) + 1
            out.append(tuple(sorted(exps.items())))
    return sorted(out, key=mono_key)


def find_certificate(
    enc: Encoding3Col, degree: int, max_matrix_bits: int = 1 << 26
) -> NullstellensatzCertificate | None:
    """Search for a degree-`degree` certificate by one GF(2) linear solve.

    Returns a verified certificate, or None when no certificate of this
    degree exists.  Refuses (GuardExceeded) when the linear system would
    exceed `max_matrix_bits` matrix bits.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    multipliers = monomials_up_to_degree(enc.n, degree)
    ncols = len(multipliers) * len(enc.generators)

    row_index: dict[Mono, int] = {}
    rows: list[int] = []

    def row_of(m: Mono) -> int:
        idx = row_index.get(m)
        if idx is None:
            idx = len(rows)
            row_index[m] = idx
            rows.append(0)
        return idx

    col = 0
    for gen in enc.generators:
        for mult in multipliers:
            # products of distinct monomials by a fixed multiplier stay distinct:
            # no cancellation inside a single column
            for gm in gen.monomials:
                rows[row_of(mono_mul(mult, gm))] |= 1 << col
            col += 1
    nrows = len(rows)
    if nrows * ncols > max_matrix_bits:
        raise GuardExceeded(
            f"certificate system of {nrows} equations x {ncols} unknowns exceeds "
            f"the {max_matrix_bits}-bit guard"
        )
    rhs_bits = 1 << row_index[()] if () in row_index else 0
    if not rhs_bits:
        return None  # constant monomial never appears: 1 is not reachable
    solution = GF2Matrix(nrows, ncols, rows).solve(GF2Vector(nrows, rhs_bits))
    if solution is None:
        return None
    coeffs = []
    width = len(multipliers)
    for gi in range(len(enc.generators)):
        selected = [multipliers[k] for k in range(width) if solution[gi * width + k]]
        coeffs.append(F2Polynomial(selected))
    cert = NullstellensatzCertificate(degree, enc.generators, enc.tags, tuple(coeffs))
    assert verify_certificate(cert)
    return cert


def find_certificate_increasing(
    enc: Encoding3Col, max_degree: int, max_matrix_bits: int = 1 << 26
) -> NullstellensatzCertificate | None:
    """Try degrees 1, 2, ..., max_degree in order; first hit wins."""
    for d in range(1, max_degree + 1):
        cert = find_certificate(enc, d, max_matrix_bits)
        if cert is not None:
            return cert
    return None


def verify_certificate(cert: NullstellensatzCertificate) -> bool:
    """Symbolic check: degree bounds hold and sum beta_i f_i expands to 1."""
    if any(beta.degree() > cert.degree for beta in cert.coefficients):
        return False
    total = poly_sum(beta * f for beta, f in zip(cert.coefficients, cert.generators))
    return total == F2Polynomial.one()


# ---------------------------------------------------------------------------
# serialization


def certificate_text(cert: NullstellensatzCertificate) -> str:
    """Structured text document: degree, generators, multipliers, verdict."""
    lines = [f"degree: {cert.degree}"]
    for tag, gen, beta in zip(cert.tags, cert.generators, cert.coefficients):
        kind, what = tag
        label = f"{kind} {' '.join(map(str, what))}"
        lines.append(f"generator [{label}]: {gen}")
        lines.append(f"multiplier [{label}]: {beta}")
    lines.append(f"verified: {str(verify_certificate(cert)).lower()}")
    return "\n".join(lines) + "\n"


def certificate_to_dict(cert: NullstellensatzCertificate) -> dict:
    return {
        "degree": cert.degree,
        "generators": [
            {"tag": list(tag[0:1]) + [list(tag[1])], "polynomial": str(gen), "multiplier": str(beta)}
            for tag, gen, beta in zip(cert.tags, cert.generators, cert.coefficients)
        ],
        "verified": verify_certificate(cert),
    }


def _parse_poly(text: str) -> F2Polynomial:
    text = text.strip()
    if text == "0":
        return F2Polynomial.zero()
    monos = []
    for part in text.split("+"):
        part = part.strip()
        if part == "1":
            monos.append(())
            continue
        pairs = []
        for factor in part.split("*"):
            factor = factor.strip()
            if "^" in factor:
                var, exp = factor.split("^")
            else:
                var, exp = factor, "1"
            if not var.startswith("x"):
                raise ValueError(f"bad factor {factor!r}")
            pairs.append((int(var[1:]), int(exp)))
        monos.append(mono(*pairs))
    return F2Polynomial(monos)


def certificate_from_dict(data: dict) -> NullstellensatzCertificate:
    tags = []
    gens = []
    coeffs = []
    for entry in data["generators"]:
        kind, what = entry["tag"]
        tags.append((kind, tuple(what)))
        gens.append(_parse_poly(entry["polynomial"]))
        coeffs.append(_parse_poly(entry["multiplier"]))
    return NullstellensatzCertificate(data["degree"], tuple(gens), tuple(tags), tuple(coeffs))
