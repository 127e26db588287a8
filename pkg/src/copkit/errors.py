"""Exception hierarchy.

Every error carries a stable kebab-case ``code`` used verbatim in CLI
diagnostics, so tests and tooling can match on it instead of message text.
Scanner and parser errors additionally carry the source line they refer to.
"""


class CopError(Exception):
    code = "error"


# --- layer registry / dispatch table -----------------------------------

class InvalidLayerNameError(CopError):
    code = "invalid-layer-name"


class DuplicateBaseError(CopError):
    code = "duplicate-base"


class DuplicatePartialError(CopError):
    code = "duplicate-partial"


class FrozenTableError(CopError):
    code = "frozen-table"


class TableNotFinalizedError(CopError):
    code = "not-finalized"


class OrphanPartialError(CopError):
    code = "orphan-partial"


class NoBaseError(CopError):
    code = "no-base"


# --- activation stack ---------------------------------------------------

class EmptyActivationError(CopError):
    code = "empty-activation"


class UnbalancedEndError(CopError):
    code = "unbalanced-end"


# --- benchmark ----------------------------------------------------------

class InvalidConfigError(CopError):
    code = "invalid-config"


# --- codegen: parsing and scanning --------------------------------------

class SourceError(CopError):
    """Base for errors pinned to a line of layered source."""

    def __init__(self, message, line=0):
        super().__init__(message)
        self.line = line


class DslSyntaxError(SourceError):
    code = "syntax"


class ScanError(SourceError):
    pass


class SuffixAmbiguityError(ScanError):
    code = "suffix-ambiguity"


class SignatureMismatchError(ScanError):
    code = "signature-mismatch"


class DuplicatePartialDeclError(ScanError):
    code = "duplicate-partial"


class DuplicateMappingError(ScanError):
    code = "duplicate-mapping"


class NestedPartialError(ScanError):
    code = "nested-partial"


# --- codegen: templates and generation -----------------------------------

class TemplateError(CopError):
    code = "template-syntax"


class UnresolvedPlaceholderError(TemplateError):
    code = "unresolved-placeholder"


class UnbalancedBlockError(TemplateError):
    code = "unbalanced-block"


class MissingTemplateError(CopError):
    code = "missing-template"


class GenerateError(CopError):
    code = "generate"
