"""Layer identity, dispatch tables, and context-driven method dispatch.

Layers are interned singletons: registering the same qualified name twice
returns the identical :class:`LayerId`. A :class:`DispatchTable` is built
in two phases (mutable registration, then :meth:`DispatchTable.finalize`),
after which it is immutable and safe to share across threads. Dispatch
snapshots the caller's effective layer list on entry, assembles the chain
of matching partials in reverse activation order, and runs it down to the
base implementation via proceed handles.

Plain (non-layered) calls never touch a table; the per-table
``lookup_count`` instrumentation exists to assert exactly that.
"""

import threading
from typing import Callable, NamedTuple, Sequence

from . import _kernel
from ._pykernel import _invoke
from .errors import (
    DuplicateBaseError,
    DuplicatePartialError,
    FrozenTableError,
    InvalidLayerNameError,
    NoBaseError,
    OrphanPartialError,
    TableNotFinalizedError,
)


class LayerId:
    """Interned identity of a layer; one instance per qualified name."""

    __slots__ = ("qualified_name", "ordinal")

    def __init__(self, qualified_name: str, ordinal: int):
        self.qualified_name = qualified_name
        self.ordinal = ordinal

    def __repr__(self):
        return f"LayerId({self.qualified_name!r})"


_registry_lock = threading.Lock()
_layers_by_name: dict[str, LayerId] = {}
_layers_by_ordinal: list[LayerId] = []


def register_layer(qualified_name: str) -> LayerId:
    """Intern ``qualified_name`` and return its LayerId (idempotent)."""
    if not isinstance(qualified_name, str) or not qualified_name:
        raise InvalidLayerNameError("layer name must be a nonempty string")
    if any(ch.isspace() for ch in qualified_name):
        raise InvalidLayerNameError(
            f"layer name may not contain whitespace: {qualified_name!r}"
        )
    layer = _layers_by_name.get(qualified_name)
    if layer is not None:
        return layer
    with _registry_lock:
        layer = _layers_by_name.get(qualified_name)
        if layer is None:
            layer = LayerId(qualified_name, len(_layers_by_ordinal))
            _layers_by_ordinal.append(layer)
            _layers_by_name[qualified_name] = layer
    return layer


def layer_for_ordinal(ordinal: int) -> LayerId:
    return _layers_by_ordinal[ordinal]


class MethodKey(NamedTuple):
    """Identifies one layered method within a program."""

    class_name: str
    method_name: str


class DispatchChain:
    """Snapshot of one dispatch: partial impls in execution order, then base."""

    __slots__ = ("impls",)

    def __init__(self, impls):
        self.impls = tuple(impls)

    def __len__(self):
        return len(self.impls)

    def __call__(self, receiver, args=()):
        return _invoke(list(self.impls), 0, receiver, tuple(args))


def _check_key(key) -> tuple:
    if isinstance(key, str) or len(key) != 2:
        raise NoBaseError(f"malformed method key: {key!r}")
    class_name, method_name = key
    if not class_name or not method_name:
        raise NoBaseError(f"malformed method key: {key!r}")
    return (class_name, method_name)


class DispatchTable:
    """Mapping (class, method) -> base impl + per-layer partial impls.

    Base impls are called as ``impl(receiver, args)``; partial impls as
    ``impl(receiver, args, proceed)`` where ``proceed(*args)`` runs the
    next element of the chain (the base, once no partials remain). A
    partial may call proceed any number of times, including zero.
    """

    def __init__(self):
        self._building: dict[tuple, list] = {}  # key -> [base|None, {ordinal: impl}]
        self._entries: dict[tuple, tuple] | None = None  # set by finalize()
        self.lookup_count = 0

    # -- build phase ------------------------------------------------------

    def register_base(self, key, impl: Callable) -> None:
        if self._entries is not None:
            raise FrozenTableError(f"table is finalized; cannot register {key!r}")
        key = _check_key(key)
        slot = self._building.setdefault(key, [None, {}])
        if slot[0] is not None:
            raise DuplicateBaseError(f"base already registered for {key!r}")
        slot[0] = impl

    def register_partial(self, key, layer: LayerId, impl: Callable) -> None:
        if self._entries is not None:
            raise FrozenTableError(f"table is finalized; cannot register {key!r}")
        key = _check_key(key)
        slot = self._building.setdefault(key, [None, {}])
        if layer.ordinal in slot[1]:
            raise DuplicatePartialError(
                f"partial already registered for {key!r} in layer {layer.qualified_name}"
            )
        slot[1][layer.ordinal] = impl

    def finalize(self) -> "DispatchTable":
        """Freeze the table; detects partials whose key has no base."""
        if self._entries is not None:
            return self
        for key, (base, partials) in self._building.items():
            if base is None and partials:
                raise OrphanPartialError(f"partial(s) registered without a base for {key!r}")
        self._entries = {
            key: (base, dict(partials)) for key, (base, partials) in self._building.items()
        }
        self._building = {}
        return self

    @property
    def finalized(self) -> bool:
        return self._entries is not None

    # -- read phase -------------------------------------------------------

    def _lookup(self, key):
        entries = self._entries
        if entries is None:
            raise TableNotFinalizedError("dispatch requires a finalized table")
        self.lookup_count += 1
        entry = entries.get(key)
        if entry is None or entry[0] is None:
            raise NoBaseError(f"no base implementation for {key!r}")
        return entry

    def build_chain(self, key, effective: Sequence[LayerId]) -> DispatchChain:
        """Chain for ``key`` under the given effective activation list."""
        base, partials = self._lookup(tuple(key))
        impls = [
            partials[layer.ordinal]
            for layer in reversed(effective)
            if layer.ordinal in partials
        ]
        impls.append(base)
        return DispatchChain(impls)

    def dispatch(self, key, receiver, args=(), stack=None):
        """Dispatch one call; snapshots the stack's effective layers on entry."""
        entries = self._entries  # hot path: _lookup inlined
        if entries is None:
            raise TableNotFinalizedError("dispatch requires a finalized table")
        self.lookup_count += 1
        entry = entries.get(key)
        if entry is None:
            raise NoBaseError(f"no base implementation for {key!r}")
        if stack is None:
            stack = _current_stack()
        eff = stack._effective
        if eff is None:
            eff = stack._refold()
        if type(args) is not tuple:
            args = tuple(args)
        return _kernel.run_chain(entry[0], entry[1], eff, receiver, args)


def _current_stack():
    """Lazy alias for context.current_stack (avoids a circular import)."""
    global _current_stack
    from .context import current_stack

    _current_stack = current_stack
    return current_stack()


def effective_layers(stack) -> list[LayerId]:
    """Effective activation list of ``stack``, least recent first."""
    eff = stack._effective
    if eff is None:
        eff = stack._refold()
    return [_layers_by_ordinal[o] for o in eff]


def dispatch(table: DispatchTable, key, receiver, args=(), stack=None):
    return table.dispatch(key, receiver, args, stack)
