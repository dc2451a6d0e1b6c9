"""JSON encodings for graphs, cells, chains, paths, moves and certificates.

All formats are 1-based, mirroring the library's vertex and color
conventions:

  graph        {"p": 4, "edges": [[1, 2], [2, 3], ...]}
  cell         [[1], [6, 7], [2, 3, 4], [2]]
  chain        [{"coeff": -1, "cell": [[1], [7], [2, 3, 4], [2]]}, ...]
  path         list of vertex cells (singleton color lists)
  move         {"kind": ..., "position": ..., "support": cell or null,
                "inserted": [vertex, vertex] (insert_pair),
                "deleted": vertex (delete_vertex)}
  certificate  {"t": 2, "additions": [{"coeff": 1, "cell": [...]}, ...]}
"""

from __future__ import annotations

from .deform import EdgePath, HomotopyMove
from .errors import InputError
from .graphs import Graph, make_graph
from .homcx import Cell, Chain, cell_dim, cell_to_lists, mask_of
from .reduce import ChainCertificate


def graph_to_json(G: Graph) -> dict:
    return {"p": G.p, "edges": [list(e) for e in G.edges]}


def graph_from_json(data) -> Graph:
    try:
        return make_graph(int(data["p"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph JSON: {exc}") from None


def cell_to_json(cell: Cell) -> list[list[int]]:
    return cell_to_lists(cell)

def cell_from_json(data) -> Cell:
    try:
        cell = tuple(mask_of(int(c) for c in coords) for coords in data)
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed cell JSON: {exc}") from None
    if any(m == 0 for m in cell):
        raise InputError("cell JSON contains an empty color list")
    return cell


def chain_to_json(ch: Chain) -> list[dict]:
    return [
        {"coeff": coeff, "cell": cell_to_json(cell)}
        for cell, coeff in ch.sorted_items()
    ]


def chain_from_json(data, dim: int | None = None) -> Chain:
    terms = []
    for item in data:
        try:
            terms.append((cell_from_json(item["cell"]), int(item["coeff"])))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed chain JSON: {exc}") from None
    if dim is None:
        if not terms:
            raise InputError("empty chain JSON needs an explicit dimension")
        dim = cell_dim(terms[0][0])
    return Chain(dim, terms)


def path_to_json(path: EdgePath) -> list[list[list[int]]]:
    return [[[c] for c in u] for u in path.vertices]


def path_from_json(data) -> EdgePath:
    verts = []
    for row in data:
        try:
            vert = []
            for coords in row:
                if isinstance(coords, int):
                    vert.append(coords)
                else:
                    (c,) = coords
                    vert.append(int(c))
            verts.append(tuple(vert))
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed path JSON: {exc}") from None
    return EdgePath(verts)


def move_to_json(mv: HomotopyMove) -> dict:
    out = {"kind": mv.kind, "position": mv.position}
    out["support"] = cell_to_json(mv.support) if mv.support is not None else None
    if mv.inserted is not None:
        out["inserted"] = [[[c] for c in u] for u in mv.inserted]
    if mv.deleted is not None:
        out["deleted"] = [[c] for c in mv.deleted]
    return out


def move_from_json(data) -> HomotopyMove:
    def vert(row):
        return tuple(int(c[0]) if not isinstance(c, int) else int(c) for c in row)

    try:
        support = data.get("support")
        inserted = data.get("inserted")
        deleted = data.get("deleted")
        return HomotopyMove(
            kind=str(data["kind"]),
            position=int(data["position"]),
            inserted=tuple(vert(u) for u in inserted) if inserted else None,
            deleted=vert(deleted) if deleted else None,
            support=cell_from_json(support) if support else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed move JSON: {exc}") from None


def moves_to_json(moves) -> list[dict]:
    return [move_to_json(mv) for mv in moves]


def moves_from_json(data) -> list[HomotopyMove]:
    return [move_from_json(item) for item in data]


def certificate_to_json(cert: ChainCertificate) -> dict:
    return {
        "t": cert.t,
        "additions": [
            {"coeff": coeff, "cell": cell_to_json(cell)}
            for coeff, cell in cert.additions
        ],
    }


def certificate_from_json(data, initial: Chain, final: Chain) -> ChainCertificate:
    try:
        t = int(data["t"])
        additions = tuple(
            (int(item["coeff"]), cell_from_json(item["cell"]))
            for item in data["additions"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed certificate JSON: {exc}") from None
    return ChainCertificate(t, additions, initial, final)
