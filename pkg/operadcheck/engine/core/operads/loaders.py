"""
Symmetric collections read from JSON description files.

A file holds one collection object or a list of them:

    {
      "name": "DUAL",
      "ring": "Q",
      "unit": "id",
      "arities": {
        "1": {
          "generators": [{"label": "id", "degree": 0}, {"label": "t", "degree": 1}]
        },
        "2": {
          "generators": [{"label": "p", "degree": 0}, {"label": "q", "degree": 1}],
          "differential": [["q", "p", "2"]],
          "actions": [[["p", "p", 1], ["q", "q", -1]]]
        }
      }
    }

`differential` lists (source, target, scalar) triples meaning d(source)
contains scalar * target; `actions[i]` gives s_i as signed permutation
triples (source, target, sign). Scalars are integers or "p/q" strings.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from core.algebra import ExactMatrix, RingDescriptor
from core.complexes import ChainMap, Complex, Label, zero_complex
from core.exceptions import EngineError

from .base import SymmetricCollection
from .exceptions import DescriptionFileError

logger = logging.getLogger(__name__)


class TabulatedCollection(SymmetricCollection):
    """
    A collection given by explicit finite data in a bounded range of arities;
    arities that are not listed are zero
    """

    def __init__(
        self,
        ring: RingDescriptor,
        name: str,
        components: dict[int, Complex],
        transpositions: dict[tuple[int, int], ChainMap],
        unit: Label | None,
    ) -> None:
        super().__init__(ring)
        self.name = name
        self._tabulated = components
        self._tabulated_actions = transpositions
        self._unit = unit

    @property
    def unit_label(self) -> Label | None:
        return self._unit

    @property
    def arities(self) -> list[int]:
        return sorted(self._tabulated)

    def build_component(self, m: int) -> Complex:
        return self._tabulated.get(m, zero_complex(self.ring))

    def build_transposition(self, m: int, i: int) -> ChainMap:
        action = self._tabulated_actions.get((m, i))
        if action is None:
            if self.component(m).is_zero():
                return ChainMap.identity(self.component(m))
            raise DescriptionFileError(f"{self.name}: no action given for s_{i} in arity {m}")
        return action


def _require(document: dict, key: str, context: str) -> Any:
    if key not in document:
        raise DescriptionFileError(f"{context}: missing '{key}'")
    return document[key]


def _parse_arity(ring: RingDescriptor, m: int, entry: dict, context: str):
    generators = _require(entry, "generators", context)
    basis: dict[int, list[str]] = {}
    degree_of: dict[str, int] = {}
    for generator in generators:
        label = str(_require(generator, "label", context))
        degree = int(_require(generator, "degree", context))
        if label in degree_of:
            raise DescriptionFileError(f"{context}: duplicate generator {label!r}")
        degree_of[label] = degree
        basis.setdefault(degree, []).append(label)
    position = {label: basis[degree_of[label]].index(label) for label in degree_of}

    def locate(label: Any) -> tuple[int, int]:
        label = str(label)
        if label not in degree_of:
            raise DescriptionFileError(f"{context}: unknown generator {label!r}")
        return degree_of[label], position[label]

    entries: dict[int, dict[tuple[int, int], Any]] = {}
    for source, target, scalar in entry.get("differential", []):
        source_degree, column = locate(source)
        target_degree, row = locate(target)
        if target_degree != source_degree - 1:
            raise DescriptionFileError(
                f"{context}: d({source}) = {target} must lower the degree by one"
            )
        entries.setdefault(source_degree, {})[(row, column)] = scalar
    differentials = {
        degree: ExactMatrix(ring, len(basis.get(degree - 1, [])), len(basis[degree]), values)
        for degree, values in entries.items()
    }
    complex_ = Complex(ring, basis, differentials)

    transpositions = {}
    for i, triples in enumerate(entry.get("actions", [])):
        matrices: dict[int, dict[tuple[int, int], Any]] = {d: {} for d in basis}
        for source, target, sign in triples:
            source_degree, column = locate(source)
            target_degree, row = locate(target)
            if source_degree != target_degree:
                raise DescriptionFileError(f"{context}: s_{i} must preserve degrees")
            matrices[source_degree][(row, column)] = sign
        transpositions[(m, i)] = ChainMap(
            complex_,
            complex_,
            {
                d: ExactMatrix(ring, len(basis[d]), len(basis[d]), values)
                for d, values in matrices.items()
            },
        )
    return complex_, transpositions


def parse_collection(document: dict, ring: RingDescriptor | None = None) -> TabulatedCollection:
    name = str(document.get("name", "TABULATED"))
    try:
        ring = ring or RingDescriptor.parse(str(_require(document, "ring", name)))
        components: dict[int, Complex] = {}
        transpositions: dict[tuple[int, int], ChainMap] = {}
        for key, entry in _require(document, "arities", name).items():
            m = int(key)
            if m < 0:
                raise DescriptionFileError(f"{name}: negative arity {m}")
            complex_, actions = _parse_arity(ring, m, entry, f"{name}[{m}]")
            components[m] = complex_
            transpositions.update(actions)
        collection = TabulatedCollection(
            ring, name, components, transpositions, str(_require(document, "unit", name))
        )
        collection.validate(max_arity=max(components, default=0))
    except DescriptionFileError:
        raise
    except (EngineError, TypeError, ValueError) as exc:
        raise DescriptionFileError(f"{name}: {exc}") from exc
    logger.debug(f"Loaded collection | {name} | arities={sorted(components)} | {ring}")
    return collection


def load_collections(path: str | Path, ring: RingDescriptor | None = None) -> list[TabulatedCollection]:
    try:
        document = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DescriptionFileError(f"Cannot read {path}: {exc}") from exc
    documents = document if isinstance(document, list) else [document]
    return [parse_collection(d, ring) for d in documents]


def load_collection(
    path: str | Path, name: str | None = None, ring: RingDescriptor | None = None
) -> TabulatedCollection:
    collections = load_collections(path, ring)
    if name is None:
        if len(collections) != 1:
            raise DescriptionFileError(f"{path} holds {len(collections)} collections; pick one by name")
        return collections[0]
    for collection in collections:
        if collection.name.upper() == name.upper():
            return collection
    raise DescriptionFileError(f"No collection named {name!r} in {path}")
