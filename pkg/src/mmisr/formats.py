"""Text codecs for instance (.misr), graph (.gr), tree decomposition (.td),
and sequence (.seq) files.

Parsers accept `c`-prefixed comment lines and blank lines anywhere and report
failures with 1-based line numbers.  Serializers emit the canonical form:
sorted edge/step/bag lines, so serialize(parse(x)) == x on canonical input.
"""

from .graph import Graph, Instance, ReconfigSequence, VertexSet
from .treewidth import TreeDecomposition


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _data_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield i, line.split()


def _ints(parts: list[str], line_no: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {' '.join(parts)}") from None


def parse_instance(text: str) -> Instance:
    n = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    ini = None
    tar = None
    left_size = None
    for line_no, parts in _data_lines(text):
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate header")
            if len(parts) != 4 or parts[1] != "misr":
                raise ParseError(line_no, "expected 'p misr <n> <m>'")
            n, m_declared = _ints(parts[2:], line_no)
        elif n is None:
            raise ParseError(line_no, "data before 'p misr' header")
        elif kind == "e":
            if len(parts) != 3:
                raise ParseError(line_no, "expected 'e <u> <v>'")
            u, v = _ints(parts[1:], line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex out of range [1,{n}]")
            edges.append((u, v))
        elif kind == "ini":
            if ini is not None:
                raise ParseError(line_no, "duplicate ini line")
            ini = _set_line(parts[1:], n, line_no)
        elif kind == "tar":
            if tar is not None:
                raise ParseError(line_no, "duplicate tar line")
            tar = _set_line(parts[1:], n, line_no)
        elif kind == "bip":
            if len(parts) != 2:
                raise ParseError(line_no, "expected 'bip <|L|>'")
            (left_size,) = _ints(parts[1:], line_no)
            if not (0 <= left_size <= n):
                raise ParseError(line_no, "bipartition size out of range")
        else:
            raise ParseError(line_no, f"unknown line kind {kind!r}")
    if n is None:
        raise ParseError(1, "missing 'p misr' header")
    if ini is None or tar is None:
        raise ParseError(1, "missing ini or tar line")
    if len(set((min(e), max(e)) for e in edges)) != m_declared:
        raise ParseError(1, f"header declares {m_declared} edges, found "
                            f"{len(set((min(e), max(e)) for e in edges))}")
    bip = None
    if left_size is not None:
        bip = (range(1, left_size + 1), range(left_size + 1, n + 1))
    try:
        graph = Graph(n, edges, bipartition=bip)
        return Instance(graph, ini, tar)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def _set_line(parts: list[str], n: int, line_no: int) -> VertexSet:
    vals = _ints(parts, line_no)
    for v in vals:
        if not (1 <= v <= n):
            raise ParseError(line_no, f"vertex {v} out of range [1,{n}]")
    return frozenset(vals)


def format_instance(inst: Instance) -> str:
    g = inst.graph
    lines = [f"p misr {g.n} {g.m}"]
    if g.bipartition is not None:
        lines.append(f"bip {len(g.bipartition[0])}")
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    lines.append(("ini " + " ".join(map(str, sorted(inst.ini)))).rstrip())
    lines.append(("tar " + " ".join(map(str, sorted(inst.tar)))).rstrip())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    for line_no, parts in _data_lines(text):
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate header")
            if len(parts) != 4 or parts[1] != "gr":
                raise ParseError(line_no, "expected 'p gr <n> <m>'")
            n, m_declared = _ints(parts[2:], line_no)
        elif n is None:
            raise ParseError(line_no, "data before 'p gr' header")
        elif kind == "e":
            if len(parts) != 3:
                raise ParseError(line_no, "expected 'e <u> <v>'")
            u, v = _ints(parts[1:], line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"vertex out of range [1,{n}]")
            edges.append((u, v))
        else:
            raise ParseError(line_no, f"unknown line kind {kind!r}")
    if n is None:
        raise ParseError(1, "missing 'p gr' header")
    if len(set((min(e), max(e)) for e in edges)) != m_declared:
        raise ParseError(1, "edge count does not match header")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"p gr {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> TreeDecomposition:
    header = None
    bags: dict[int, VertexSet] = {}
    tree_edges: list[tuple[int, int]] = []
    for line_no, parts in _data_lines(text):
        if parts[0] == "s":
            if header is not None:
                raise ParseError(line_no, "duplicate 's td' line")
            if len(parts) != 5 or parts[1] != "td":
                raise ParseError(line_no, "expected 's td <#bags> <width+1> <n>'")
            header = _ints(parts[2:], line_no)
        elif header is None:
            raise ParseError(line_no, "data before 's td' header")
        elif parts[0] == "b":
            vals = _ints(parts[1:], line_no)
            if not vals:
                raise ParseError(line_no, "bag line without id")
            bag_id, members = vals[0], vals[1:]
            if not (1 <= bag_id <= header[0]):
                raise ParseError(line_no, f"bag id {bag_id} out of range")
            if bag_id in bags:
                raise ParseError(line_no, f"duplicate bag id {bag_id}")
            for v in members:
                if not (1 <= v <= header[2]):
                    raise ParseError(line_no, f"vertex {v} out of range [1,{header[2]}]")
            bags[bag_id] = frozenset(members)
        else:
            vals = _ints(parts, line_no)
            if len(vals) != 2:
                raise ParseError(line_no, "expected tree edge '<i> <j>'")
            i, j = vals
            if not (1 <= i <= header[0] and 1 <= j <= header[0]):
                raise ParseError(line_no, "tree edge bag id out of range")
            tree_edges.append((i, j))
    if header is None:
        raise ParseError(1, "missing 's td' header")
    if len(bags) != header[0]:
        raise ParseError(1, f"header declares {header[0]} bags, found {len(bags)}")
    bag_list = [bags[i] for i in range(1, header[0] + 1)]
    return TreeDecomposition(tuple(bag_list),
                             tuple((i - 1, j - 1) for i, j in tree_edges))


def format_td(td: TreeDecomposition, n: int) -> str:
    width_plus_1 = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {width_plus_1} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        lines.append((f"b {i} " + " ".join(map(str, sorted(bag)))).rstrip())
    lines.extend(f"{min(i, j) + 1} {max(i, j) + 1}" for i, j in sorted(
        (min(e), max(e)) for e in td.tree_edges))
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> ReconfigSequence:
    steps: ReconfigSequence = []
    for line_no, parts in _data_lines(text):
        if parts[0] != "step":
            raise ParseError(line_no, "expected 'step <v…>' line")
        vals = _ints(parts[1:], line_no)
        steps.append(frozenset(vals))
    if not steps:
        raise ParseError(1, "sequence file has no steps")
    return steps


def format_sequence(seq: ReconfigSequence) -> str:
    lines = [("step " + " ".join(map(str, sorted(s)))).rstrip() for s in seq]
    return "\n".join(lines) + "\n"
