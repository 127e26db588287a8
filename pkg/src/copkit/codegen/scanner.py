"""Convention scanner: classify methods of marked classes into bases and partials.

The naming rule: inside a marked class, a method is a partial exactly when
its name splits as ``<existing method name> + <declared local layer name>``
for exactly one declared local name. Two viable splits are a hard
ambiguity error; a matching suffix whose prefix names no method makes the
method plain, not an error. Plain methods (no partials refining them)
never enter the manifest, so they keep standard dispatch and zero
overhead.
"""

from ..errors import (
    DslSyntaxError,
    DuplicateMappingError,
    DuplicatePartialDeclError,
    NestedPartialError,
    ScanError,
    SignatureMismatchError,
    SuffixAmbiguityError,
)
from . import dsl
from .manifest import (
    ClassManifest,
    Manifest,
    MappingSpec,
    MethodSpec,
    ParamSpec,
    PartialSpec,
)


def _method_spec(decl: dsl.MethodDecl) -> MethodSpec:
    return MethodSpec(
        name=decl.name,
        params=tuple(ParamSpec(p.name, p.type_name) for p in decl.params),
        return_type=decl.return_type,
        body=tuple(tok.lexeme for tok in decl.body),
    )


def _signature_text(decl: dsl.MethodDecl) -> str:
    params = ", ".join(p.type_name for p in decl.params)
    return f"({params}) -> {decl.return_type}"


def _scan_class(cls: dsl.ClassDecl, errors: list[ScanError]) -> ClassManifest:
    locals_seen = set()
    for mapping in cls.mappings:
        if mapping.local in locals_seen:
            errors.append(
                DuplicateMappingError(
                    f"local layer name {mapping.local!r} mapped twice in class {cls.name}",
                    mapping.line,
                )
            )
        locals_seen.add(mapping.local)

    declared_names = {m.name for m in cls.methods}
    partials: list[tuple[str, str, dsl.MethodDecl]] = []  # (base, local, decl)
    partial_names: set[str] = set()

    for method in cls.methods:
        candidates = []
        for mapping in cls.mappings:
            local = mapping.local
            if not method.name.endswith(local):
                continue
            base = method.name[: -len(local)]
            if base and base != method.name and base in declared_names:
                candidates.append((base, local))
        if not candidates:
            continue
        if len(candidates) > 1:
            listed = ", ".join(f"(base {b!r}, layer {l!r})" for b, l in candidates)
            errors.append(
                SuffixAmbiguityError(
                    f"method {method.name!r} in class {cls.name} is ambiguous: "
                    f"candidates {listed}",
                    method.line,
                )
            )
            continue
        base, local = candidates[0]
        partials.append((base, local, method))
        partial_names.add(method.name)

    seen_pairs: set[tuple[str, str]] = set()
    by_name = {}
    for method in cls.methods:
        by_name.setdefault(method.name, method)

    partial_specs: list[PartialSpec] = []
    for base, local, method in partials:
        if base in partial_names:
            errors.append(
                NestedPartialError(
                    f"method {method.name!r} refines {base!r}, which is itself a "
                    f"partial definition",
                    method.line,
                )
            )
            continue
        if (base, local) in seen_pairs:
            errors.append(
                DuplicatePartialDeclError(
                    f"duplicate partial definition for base {base!r} in layer {local!r}",
                    method.line,
                )
            )
            continue
        seen_pairs.add((base, local))
        base_decl = by_name[base]
        same_params = [p.type_name for p in method.params] == [
            p.type_name for p in base_decl.params
        ]
        if not same_params or method.return_type != base_decl.return_type:
            errors.append(
                SignatureMismatchError(
                    f"partial {method.name!r} {_signature_text(method)} does not match "
                    f"base {base!r} {_signature_text(base_decl)}",
                    method.line,
                )
            )
            continue
        partial_specs.append(PartialSpec(base, local, _method_spec(method)))

    refined = {p.base_name for p in partial_specs}
    base_specs = []
    added: set[str] = set()
    for method in cls.methods:
        if method.name in refined and method.name not in partial_names | added:
            base_specs.append(_method_spec(method))
            added.add(method.name)
    return ClassManifest(
        class_name=cls.name,
        mappings=tuple(MappingSpec(m.local, m.qualified) for m in cls.mappings),
        base_methods=tuple(base_specs),
        partials=tuple(partial_specs),
    )


def scan_unit(unit: dsl.SourceUnit) -> tuple[Manifest, list[ScanError]]:
    """Scan a parsed unit, collecting every violation instead of stopping."""
    errors: list[ScanError] = []
    layers: list[str] = []
    classes: list[ClassManifest] = []
    for item in unit.items:
        if isinstance(item, dsl.LayerDecl):
            if item.qualified_name not in layers:
                layers.append(item.qualified_name)
        elif item.marked:
            cls = _scan_class(item, errors)
            classes.append(cls)
            for mapping in cls.mappings:
                if mapping.qualified not in layers:
                    layers.append(mapping.qualified)
        # unmarked classes contribute nothing
    return Manifest(tuple(layers), tuple(classes)), errors


def scan(text: str) -> Manifest:
    """Parse and scan one source unit; raises on the first violation."""
    manifest, errors = scan_unit(dsl.parse(text))
    if errors:
        raise errors[0]
    return manifest


def diagnose(text: str) -> tuple[Manifest | None, list]:
    """Collect all diagnostics for ``text``; manifest is None on parse failure."""
    try:
        unit = dsl.parse(text)
    except DslSyntaxError as err:
        return None, [err]
    manifest, errors = scan_unit(unit)
    return manifest, errors
