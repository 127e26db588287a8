"""Convention scanning, proceed rewriting, and template-driven shim generation."""

from .dsl import PROCEED_MARKER, parse, rewrite_proceed, tokenize
from .generate import generate, load_templates
from .manifest import Manifest, from_json, merge, to_json
from .scanner import diagnose, scan

__all__ = [
    "PROCEED_MARKER",
    "Manifest",
    "diagnose",
    "from_json",
    "generate",
    "load_templates",
    "merge",
    "parse",
    "rewrite_proceed",
    "scan",
    "to_json",
    "tokenize",
]
