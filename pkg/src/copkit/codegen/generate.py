"""Shim generation: manifests + templates -> new source files.

Emits one layer-declaration file per layer and one registration shim per
layered class. The shim interns every mapped layer, registers the base
implementation, and registers each partial with its proceed call sites
rewritten to the shim's proceed-handle parameter. Inputs are never
modified; generation is a pure function of (manifest, templates).
"""

from pathlib import Path

from ..errors import MissingTemplateError
from .dsl import rewrite_proceed
from .manifest import ClassManifest, Manifest, MethodSpec
from .template import Template

LAYER_TEMPLATE = "layer-decl"
SHIM_TEMPLATE = "registration-shim"
_REQUIRED = (LAYER_TEMPLATE, SHIM_TEMPLATE)

_DEFAULT_DIR = Path(__file__).parent / "templates"


def load_templates(directory: Path | str | None = None) -> dict[str, Template]:
    """Load the template set from ``directory`` (defaults to the built-ins)."""
    directory = Path(directory) if directory is not None else _DEFAULT_DIR
    templates: dict[str, Template] = {}
    for name in _REQUIRED:
        path = directory / f"{name}.tmpl"
        if not path.is_file():
            raise MissingTemplateError(f"required template not found: {path}")
        templates[name] = Template(path.read_text(encoding="utf-8"))
    return templates


def _params_text(method: MethodSpec) -> str:
    return ", ".join(f"{p.name}: {p.type_name}" for p in method.params)


def _shim_binding(cls: ClassManifest) -> dict:
    bases = [
        {
            "name": m.name,
            "params": _params_text(m),
            "return_type": m.return_type,
            "body": " ".join(m.body),
        }
        for m in cls.base_methods
    ]
    partials = [
        {
            "base_name": p.base_name,
            "layer_local": p.layer_local_name,
            "layer_qualified": cls.qualified_for(p.layer_local_name),
            "params": _params_text(p.decl),
            "return_type": p.decl.return_type,
            "body": " ".join(rewrite_proceed(list(p.decl.body), p.base_name)),
        }
        for p in cls.partials
    ]
    return {
        "class_name": cls.class_name,
        "mappings": [{"local": m.local, "qualified": m.qualified} for m in cls.mappings],
        "bases": bases,
        "partials": partials,
    }


def generate(manifest: Manifest, template_set: dict[str, Template]) -> dict[str, str]:
    """Render all output files; returns {relative path: text} in emit order."""
    for name in _REQUIRED:
        if name not in template_set:
            raise MissingTemplateError(f"template set is missing {name!r}")
    outputs: dict[str, str] = {}
    for qualified in manifest.layers:
        binding = {"qualified_name": qualified}
        outputs[f"layers/{qualified}.ctx"] = template_set[LAYER_TEMPLATE].render(binding)
    for cls in manifest.classes:
        outputs[f"shims/{cls.class_name}.ctx"] = template_set[SHIM_TEMPLATE].render(
            _shim_binding(cls)
        )
    return outputs
