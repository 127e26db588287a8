"""Placeholder template engine.

Three constructs only: ``{{path}}`` substitution, ``{{#each path}} ...
{{/each}}`` repetition, and ``\\{{`` escaping a literal brace pair. Paths
are dot-separated and resolve against a scope chain: repetition pushes
each list element (a mapping) as the innermost scope. Rendering is
deterministic: equal inputs give byte-identical output.
"""

import re
from collections.abc import Mapping, Sequence

from ..errors import TemplateError, UnbalancedBlockError, UnresolvedPlaceholderError

_DIRECTIVE_RE = re.compile(r"\\\{\{|\{\{[^{}]*\}\}")
_PATH_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*")


class _Literal:
    __slots__ = ("text",)

    def __init__(self, text):
        self.text = text


class _Subst:
    __slots__ = ("path",)

    def __init__(self, path):
        self.path = path


class _Each:
    __slots__ = ("path", "children")

    def __init__(self, path):
        self.path = path
        self.children = []


class Template:
    """Parsed template; render with a manifest-derived binding tree."""

    def __init__(self, text: str):
        self.text = text
        self._nodes = _parse(text)

    def render(self, binding: Mapping) -> str:
        out: list[str] = []
        _render_nodes(self._nodes, [binding], out)
        return "".join(out)


def render(template: Template | str, binding: Mapping) -> str:
    if isinstance(template, str):
        template = Template(template)
    return template.render(binding)


def _parse(text: str) -> list:
    root: list = []
    stack: list[_Each] = []
    current = root
    pos = 0
    for match in _DIRECTIVE_RE.finditer(text):
        if match.start() > pos:
            current.append(_Literal(text[pos : match.start()]))
        pos = match.end()
        raw = match.group()
        if raw == "\\{{":
            current.append(_Literal("{{"))
            continue
        inner = raw[2:-2].strip()
        if inner.startswith("#each"):
            path = inner[5:].strip()
            if not _PATH_RE.fullmatch(path):
                raise TemplateError(f"malformed repetition path {path!r}")
            node = _Each(path)
            current.append(node)
            stack.append(node)
            current = node.children
        elif inner == "/each":
            if not stack:
                raise UnbalancedBlockError("'{{/each}}' without an open block")
            stack.pop()
            current = stack[-1].children if stack else root
        else:
            if not _PATH_RE.fullmatch(inner):
                raise TemplateError(f"malformed placeholder {inner!r}")
            current.append(_Subst(inner))
    if stack:
        raise UnbalancedBlockError(f"unclosed block for path {stack[-1].path!r}")
    if pos < len(text):
        current.append(_Literal(text[pos:]))
    return root


def _resolve(path: str, scopes: list) -> object:
    first, _, rest = path.partition(".")
    for scope in reversed(scopes):
        if isinstance(scope, Mapping) and first in scope:
            value = scope[first]
            for segment in rest.split(".") if rest else ():
                if not (isinstance(value, Mapping) and segment in value):
                    raise UnresolvedPlaceholderError(f"unresolved placeholder {path!r}")
                value = value[segment]
            return value
    raise UnresolvedPlaceholderError(f"unresolved placeholder {path!r}")


def _render_nodes(nodes: list, scopes: list, out: list) -> None:
    for node in nodes:
        if isinstance(node, _Literal):
            out.append(node.text)
        elif isinstance(node, _Subst):
            value = _resolve(node.path, scopes)
            if isinstance(value, str):
                out.append(value)
            elif isinstance(value, (int, float)) and not isinstance(value, bool):
                out.append(str(value))
            else:
                raise TemplateError(
                    f"placeholder {node.path!r} does not resolve to text"
                )
        else:
            value = _resolve(node.path, scopes)
            if isinstance(value, str) or not isinstance(value, Sequence):
                raise TemplateError(f"repetition path {node.path!r} is not a list")
            for element in value:
                scopes.append(element if isinstance(element, Mapping) else {})
                _render_nodes(node.children, scopes, out)
                scopes.pop()
