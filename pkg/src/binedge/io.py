"""Edge lists, graph6 and CAS scripts.

Edge-list files are UTF-8 text: ``#`` starts a comment line, the first data
line holds ``n`` and every further data line holds one edge ``u v``.
"""

from __future__ import annotations

from .errors import DuplicateEdge, ParseError, RangeError, SelfLoop, Unsupported
from .graph import Graph

GRAPH6_MAX_N = 62


def _data_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ParseError("no vertex count found") from None
    head = first.split()
    if len(head) != 1:
        raise ParseError(f"line {lineno}: first data line must hold only n")
    n = _int(head[0], lineno)
    if n < 1:
        raise RangeError(f"line {lineno}: n must be positive")
    edges = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = (_int(p, lineno) for p in parts)
        if not (1 <= u <= n and 1 <= v <= n):
            raise RangeError(f"line {lineno}: vertex out of 1..{n}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {key[0]} {key[1]} listed twice")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise ParseError("graph6 byte out of range")
    if codes[0] == 63:
        raise Unsupported("graph6 sizes above 62 are not supported")
    n = codes[0]
    if n < 1:
        raise RangeError("graph6 graph has no vertices")
    total = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (total + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(total + 5) // 6}")
    nbr = [0] * (n + 1)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                nbr[i + 1] |= 1 << (j + 1)
                nbr[j + 1] |= 1 << (i + 1)
            k += 1
    if any(body[k // 6] >> (5 - r % 6) & 1 for r in range(k, len(body) * 6)):
        raise ParseError("graph6 padding bits must be zero")
    return Graph._trusted(n, tuple(nbr))


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise Unsupported("graph6 sizes above 62 are not supported")
    out = [chr(g.n + 63)]
    acc = k = 0
    for j in range(2, g.n + 1):
        for i in range(1, j):
            acc = acc << 1 | (g.nbr[j] >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def export_cas_script(g: Graph, dialect: str = "m2") -> str:
    """Script computing dim, depth/CM and the minimal primes of ``J(G)`` externally."""
    n = g.n
    edges = " ".join(f"{u}-{v}" for u, v in g.edges()) or "(none)"
    if dialect == "m2":
        gens = [f"x_{i}*y_{j} - x_{j}*y_{i}" for i, j in g.edges()]
        ideal = f"ideal({', '.join(gens)})" if gens else "ideal(0_R)"
        lines = [
            f"-- binomial edge ideal, n = {n}, edges: {edges}",
            "-- coefficients in QQ; the combinatorial criteria do not depend on the field",
            'needsPackage "Depth"',
            f"R = QQ[x_1..x_{n}, y_1..y_{n}]",
            f"I = {ideal}",
            "A = R/I",
            'print("dim: " | toString dim A)',
            'print("depth: " | toString depth A)',
            'print("cohen-macaulay: " | toString (depth A == dim A))',
            "print toString minimalPrimes I",
        ]
    elif dialect == "singular":
        gens = [f"x({i})*y({j}) - x({j})*y({i})" for i, j in g.edges()]
        ideal = ", ".join(gens) if gens else "0"
        lines = [
            f"// binomial edge ideal, n = {n}, edges: {edges}",
            "// characteristic 0 (rationals); the combinatorial criteria do not depend on the field",
            'LIB "primdec.lib";',
            'LIB "homolog.lib";',
            f"ring R = 0,(x(1..{n}),y(1..{n})),dp;",
            f"ideal I = {ideal};",
            '"dim:"; dim(std(I));',
            '"depth:"; depth(module(I));',
            '"cohen-macaulay:"; isCM(module(I));',
            "minAssGTZ(I);",
        ]
    else:
        raise Unsupported(f"unknown CAS dialect {dialect!r}")
    return "\n".join(lines) + "\n"
