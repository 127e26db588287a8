"""Tokenizer and recursive-descent parser for layered source units.

Grammar (line-oriented, whitespace-insensitive within lines):

    unit        := { layer_decl | class_decl }
    layer_decl  := "layer" qualified_name ";"
    class_decl  := marker? "class" IDENT "{" { method_decl } "}"
    marker      := "@LayeredClass" "(" mapping { "," mapping } ")"
    mapping     := IDENT "=>" qualified_name
    method_decl := "method" IDENT "(" [param {"," param}] ")" "->" type_name
                   "{" body_tokens "}"
    param       := IDENT ":" type_name

Method bodies are opaque balanced-brace token streams (identifiers,
string literals, numbers, punctuation). String literal lexemes keep
their quotes, so token-level comparisons against identifiers can never
collide with string contents.
"""

import re
from dataclasses import dataclass, field

from ..errors import DslSyntaxError

IDENT = "ident"
STRING = "string"
NUMBER = "number"
PUNCT = "punct"

PROCEED_MARKER = "PROCEED"
_SELF_RECEIVERS = ("this", "self")

_TWO_CHAR_OPS = ("=>", "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=")
_SINGLE_CHARS = set("{}()[],;:.@+-*/%=<>!&|?")

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?")


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, line = 0, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            tokens.append(Token(IDENT, m.group(), line))
            i = m.end()
            continue
        m = _NUMBER_RE.match(text, i)
        if m:
            tokens.append(Token(NUMBER, m.group(), line))
            i = m.end()
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\\":
                    j += 1
                if j < n and text[j] == "\n":
                    raise DslSyntaxError("unterminated string literal", line)
                j += 1
            if j >= n:
                raise DslSyntaxError("unterminated string literal", line)
            tokens.append(Token(STRING, text[i : j + 1], line))
            i = j + 1
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR_OPS:
            tokens.append(Token(PUNCT, two, line))
            i += 2
            continue
        if ch in _SINGLE_CHARS:
            tokens.append(Token(PUNCT, ch, line))
            i += 1
            continue
        raise DslSyntaxError(f"unexpected character {ch!r}", line)
    return tokens


# --- AST ------------------------------------------------------------------


@dataclass
class LayerDecl:
    qualified_name: str
    line: int


@dataclass
class MappingDecl:
    local: str
    qualified: str
    line: int


@dataclass
class ParamDecl:
    name: str
    type_name: str


@dataclass
class MethodDecl:
    name: str
    params: list[ParamDecl]
    return_type: str
    body: list[Token]
    line: int


@dataclass
class ClassDecl:
    name: str
    marked: bool
    mappings: list[MappingDecl]
    methods: list[MethodDecl]
    line: int


@dataclass
class SourceUnit:
    items: list = field(default_factory=list)  # LayerDecl | ClassDecl, source order

    @property
    def classes(self) -> list[ClassDecl]:
        return [item for item in self.items if isinstance(item, ClassDecl)]

    @property
    def layer_decls(self) -> list[LayerDecl]:
        return [item for item in self.items if isinstance(item, LayerDecl)]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def _peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self, expected: str) -> Token:
        tok = self._peek()
        if tok is None:
            line = self.tokens[-1].line if self.tokens else 1
            raise DslSyntaxError(f"unexpected end of input; expected {expected}", line)
        self.pos += 1
        return tok

    def _expect_punct(self, lexeme: str) -> Token:
        tok = self._next(repr(lexeme))
        if tok.kind != PUNCT or tok.lexeme != lexeme:
            raise DslSyntaxError(f"expected {lexeme!r}, found {tok.lexeme!r}", tok.line)
        return tok

    def _expect_ident(self, what="identifier") -> Token:
        tok = self._next(what)
        if tok.kind != IDENT:
            raise DslSyntaxError(f"expected {what}, found {tok.lexeme!r}", tok.line)
        return tok

    def _expect_keyword(self, word: str) -> Token:
        tok = self._expect_ident(repr(word))
        if tok.lexeme != word:
            raise DslSyntaxError(f"expected {word!r}, found {tok.lexeme!r}", tok.line)
        return tok

    def _qualified_name(self) -> str:
        parts = [self._expect_ident("name").lexeme]
        while True:
            tok = self._peek()
            if tok is not None and tok.kind == PUNCT and tok.lexeme == ".":
                self.pos += 1
                parts.append(self._expect_ident("name segment").lexeme)
            else:
                return ".".join(parts)

    def parse_unit(self) -> SourceUnit:
        unit = SourceUnit()
        while True:
            tok = self._peek()
            if tok is None:
                return unit
            if tok.kind == IDENT and tok.lexeme == "layer":
                unit.items.append(self._layer_decl())
            elif (tok.kind == PUNCT and tok.lexeme == "@") or (
                tok.kind == IDENT and tok.lexeme == "class"
            ):
                unit.items.append(self._class_decl())
            else:
                raise DslSyntaxError(
                    f"expected 'layer', 'class' or '@LayeredClass', found {tok.lexeme!r}",
                    tok.line,
                )

    def _layer_decl(self) -> LayerDecl:
        kw = self._expect_keyword("layer")
        name = self._qualified_name()
        self._expect_punct(";")
        return LayerDecl(name, kw.line)

    def _class_decl(self) -> ClassDecl:
        marked = False
        mappings: list[MappingDecl] = []
        tok = self._peek()
        if tok.kind == PUNCT and tok.lexeme == "@":
            self.pos += 1
            self._expect_keyword("LayeredClass")
            self._expect_punct("(")
            marked = True
            while True:
                mappings.append(self._mapping())
                tok = self._next("',' or ')'")
                if tok.kind == PUNCT and tok.lexeme == ")":
                    break
                if not (tok.kind == PUNCT and tok.lexeme == ","):
                    raise DslSyntaxError(
                        f"expected ',' or ')', found {tok.lexeme!r}", tok.line
                    )
        kw = self._expect_keyword("class")
        name = self._expect_ident("class name")
        self._expect_punct("{")
        methods = []
        while True:
            tok = self._peek()
            if tok is not None and tok.kind == PUNCT and tok.lexeme == "}":
                self.pos += 1
                return ClassDecl(name.lexeme, marked, mappings, methods, kw.line)
            methods.append(self._method_decl())

    def _mapping(self) -> MappingDecl:
        local = self._expect_ident("local layer name")
        self._expect_punct("=>")
        qualified = self._qualified_name()
        return MappingDecl(local.lexeme, qualified, local.line)

    def _method_decl(self) -> MethodDecl:
        kw = self._expect_keyword("method")
        name = self._expect_ident("method name")
        self._expect_punct("(")
        params: list[ParamDecl] = []
        tok = self._peek()
        if tok is not None and tok.kind == PUNCT and tok.lexeme == ")":
            self.pos += 1
        else:
            while True:
                pname = self._expect_ident("parameter name")
                self._expect_punct(":")
                ptype = self._qualified_name()
                params.append(ParamDecl(pname.lexeme, ptype))
                tok = self._next("',' or ')'")
                if tok.kind == PUNCT and tok.lexeme == ")":
                    break
                if not (tok.kind == PUNCT and tok.lexeme == ","):
                    raise DslSyntaxError(
                        f"expected ',' or ')', found {tok.lexeme!r}", tok.line
                    )
        self._expect_punct("->")
        return_type = self._qualified_name()
        self._expect_punct("{")
        body = self._body_tokens()
        return MethodDecl(name.lexeme, params, return_type, body, kw.line)

    def _body_tokens(self) -> list[Token]:
        body: list[Token] = []
        depth = 1
        while True:
            tok = self._next("'}'")
            if tok.kind == PUNCT and tok.lexeme == "{":
                depth += 1
            elif tok.kind == PUNCT and tok.lexeme == "}":
                depth -= 1
                if depth == 0:
                    return body
            body.append(tok)


def parse(text: str) -> SourceUnit:
    return _Parser(tokenize(text)).parse_unit()


def rewrite_proceed(body: list[str], base_name: str) -> list[str]:
    """Replace base-method call sites in a partial body with PROCEED markers.

    Operates on token lexemes, never substrings: a call site is the token
    ``base_name`` directly followed by ``(``, optionally prefixed with a
    self-receiver (``this``/``self``) and a dot; the prefix tokens are
    consumed by the marker. Calls through any other receiver are left
    alone, as are bare mentions of the name. Zero matches is legal.
    """
    out: list[str] = []
    i = 0
    n = len(body)
    while i < n:
        lexeme = body[i]
        if lexeme == base_name and i + 1 < n and body[i + 1] == "(":
            if out and out[-1] == ".":
                if len(out) >= 2 and out[-2] in _SELF_RECEIVERS:
                    out.pop()
                    out.pop()
                    out.append(PROCEED_MARKER)
                else:
                    out.append(lexeme)  # someone else's method
            else:
                out.append(PROCEED_MARKER)
            i += 1
            continue
        out.append(lexeme)
        i += 1
    return out
