"""Scanner output: layered classes, layer mappings, bases, and partials.

The JSON form is fixed: top-level ``{"layers": [...], "classes": [...]}``
with fields in declaration order and arrays in source order. Serializing
and re-parsing a manifest yields an equal value.
"""

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class ParamSpec:
    name: str
    type_name: str


@dataclass(frozen=True)
class MethodSpec:
    name: str
    params: tuple[ParamSpec, ...]
    return_type: str
    body: tuple[str, ...]  # token lexemes; string literals keep their quotes

    @property
    def signature(self) -> tuple:
        return (tuple(p.type_name for p in self.params), self.return_type)


@dataclass(frozen=True)
class MappingSpec:
    local: str
    qualified: str


@dataclass(frozen=True)
class PartialSpec:
    base_name: str
    layer_local_name: str
    decl: MethodSpec


@dataclass(frozen=True)
class ClassManifest:
    class_name: str
    mappings: tuple[MappingSpec, ...]
    base_methods: tuple[MethodSpec, ...]
    partials: tuple[PartialSpec, ...]

    def qualified_for(self, local: str) -> str:
        for mapping in self.mappings:
            if mapping.local == local:
                return mapping.qualified
        raise KeyError(local)


@dataclass(frozen=True)
class Manifest:
    layers: tuple[str, ...]
    classes: tuple[ClassManifest, ...]

    @property
    def empty(self) -> bool:
        return not self.layers and not self.classes


def _method_dict(method: MethodSpec) -> dict:
    return {
        "name": method.name,
        "params": [{"name": p.name, "type": p.type_name} for p in method.params],
        "return_type": method.return_type,
        "body": list(method.body),
    }


def to_json(manifest: Manifest) -> str:
    doc = {
        "layers": list(manifest.layers),
        "classes": [
            {
                "class_name": cls.class_name,
                "mappings": [
                    {"local": m.local, "qualified": m.qualified} for m in cls.mappings
                ],
                "base_methods": [_method_dict(m) for m in cls.base_methods],
                "partials": [
                    {
                        "base_name": p.base_name,
                        "layer_local_name": p.layer_local_name,
                        "decl": _method_dict(p.decl),
                    }
                    for p in cls.partials
                ],
            }
            for cls in manifest.classes
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _method_from(doc: dict) -> MethodSpec:
    return MethodSpec(
        name=doc["name"],
        params=tuple(ParamSpec(p["name"], p["type"]) for p in doc["params"]),
        return_type=doc["return_type"],
        body=tuple(doc["body"]),
    )


def from_json(text: str) -> Manifest:
    doc = json.loads(text)
    return Manifest(
        layers=tuple(doc["layers"]),
        classes=tuple(
            ClassManifest(
                class_name=cls["class_name"],
                mappings=tuple(
                    MappingSpec(m["local"], m["qualified"]) for m in cls["mappings"]
                ),
                base_methods=tuple(_method_from(m) for m in cls["base_methods"]),
                partials=tuple(
                    PartialSpec(
                        base_name=p["base_name"],
                        layer_local_name=p["layer_local_name"],
                        decl=_method_from(p["decl"]),
                    )
                    for p in cls["partials"]
                ),
            )
            for cls in doc["classes"]
        ),
    )


def merge(manifests) -> Manifest:
    """Combine per-file manifests: layers deduped first-wins, classes appended."""
    layers: list[str] = []
    classes: list[ClassManifest] = []
    seen_classes: set[str] = set()
    for manifest in manifests:
        for layer in manifest.layers:
            if layer not in layers:
                layers.append(layer)
        for cls in manifest.classes:
            if cls.class_name in seen_classes:
                from ..errors import GenerateError

                raise GenerateError(f"duplicate layered class {cls.class_name!r}")
            seen_classes.add(cls.class_name)
            classes.append(cls)
    return Manifest(tuple(layers), tuple(classes))
