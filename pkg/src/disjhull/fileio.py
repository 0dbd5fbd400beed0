"""Instance and facet files: JSON with rationals written as "p/q" strings.

Rationals never pass through binary floats, so both formats round-trip
losslessly; integers are allowed as shorthand on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

from .lifting import DisjunctionInstance
from .polyops import FacetEntry, FacetList, HPolytope, LinearInequality

FORMAT_VERSION = 1


def _fmt(x: Fraction) -> str:
    return str(x)


def _parse(s) -> Fraction:
    if isinstance(s, (int, str)):
        return Fraction(s)
    raise ValueError(f"expected a rational string or integer, got {s!r}")


def instance_to_dict(inst: DisjunctionInstance) -> dict:
    return {
        "format": FORMAT_VERSION,
        "d": inst.d,
        "n": inst.n,
        "common_matrix": inst.common_matrix is not None,
        "polytopes": [
            {
                "A": [[_fmt(x) for x in row] for row in p.A],
                "b": [_fmt(x) for x in p.b],
            }
            for p in inst.polytopes
        ],
    }


def instance_from_dict(data: dict) -> DisjunctionInstance:
    try:
        d = int(data["d"])
        n = int(data["n"])
        raw = data["polytopes"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed instance file: {exc}") from exc
    polys = tuple(
        HPolytope(
            d,
            tuple(tuple(_parse(x) for x in row) for row in entry["A"]),
            tuple(_parse(x) for x in entry["b"]),
        )
        for entry in raw
    )
    inst = DisjunctionInstance(d, n, polys)
    if data.get("common_matrix") and inst.common_matrix is None:
        raise ValueError("file declares a common matrix but the matrices differ")
    return inst


def save_instance(inst: DisjunctionInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=1)
        fh.write("\n")


def load_instance(path: str) -> DisjunctionInstance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh))


def facets_to_dict(fl: FacetList, generator: str) -> dict:
    return {
        "format": FORMAT_VERSION,
        "meta": {
            "d": fl.d,
            "n": fl.n,
            "generator": generator,
            "counts": fl.counts(),
        },
        "facets": [
            {
                "alpha": [_fmt(x) for x in e.ineq.alpha],
                "mu": [_fmt(x) for x in e.ineq.mu],
                "rho": _fmt(e.ineq.rho),
                "provenance": list(e.provenance),
                "signature": list(e.signature) if e.signature else None,
            }
            for e in fl.entries
        ],
    }


def facets_from_dict(data: dict) -> tuple[FacetList, str]:
    try:
        meta = data["meta"]
        d = int(meta["d"])
        n = int(meta["n"])
        raw = data["facets"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed facet file: {exc}") from exc
    entries = [
        FacetEntry(
            LinearInequality(
                tuple(_parse(x) for x in item["alpha"]),
                tuple(_parse(x) for x in item["mu"]),
                _parse(item["rho"]),
            ),
            tuple(item.get("provenance") or ()),
            tuple(item["signature"]) if item.get("signature") else None,
        )
        for item in raw
    ]
    return FacetList.build(d, n, entries), str(meta.get("generator", ""))


def save_facets(fl: FacetList, generator: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(facets_to_dict(fl, generator), fh, indent=1)
        fh.write("\n")


def load_facets(path: str) -> tuple[FacetList, str]:
    with open(path, encoding="utf-8") as fh:
        return facets_from_dict(json.load(fh))
