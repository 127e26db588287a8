"""Dynamic-extent layer activation: per-thread frame stacks.

Activation is stack-disciplined: :func:`with_active_layers` /
:func:`without_layers` push a frame on the calling thread's stack and
:func:`end` pops the top one, restoring the previous configuration
exactly. Every thread owns an independent stack starting empty; nothing
is inherited from the spawning thread. Balance is the caller's
responsibility when using the raw push/end calls; :func:`scoped` and
:func:`activating` guarantee it.
"""

import threading
from contextlib import contextmanager
from dataclasses import dataclass

from . import _kernel
from .errors import EmptyActivationError, UnbalancedEndError
from .runtime import LayerId, layer_for_ordinal

ACTIVATE = "activate"
DEACTIVATE = "deactivate"


def _normalize(layers) -> tuple[LayerId, ...]:
    """Validate an activation argument; duplicates collapse keeping the last."""
    if isinstance(layers, LayerId):
        layers = (layers,)
    out: list[LayerId] = []
    for layer in layers:
        if not isinstance(layer, LayerId):
            raise TypeError(f"expected LayerId, got {type(layer).__name__}")
        if layer in out:
            out.remove(layer)
        out.append(layer)
    if not out:
        raise EmptyActivationError("activation requires at least one layer")
    return tuple(out)


@dataclass(frozen=True)
class Frame:
    kind: str  # ACTIVATE or DEACTIVATE
    layers: tuple[LayerId, ...]  # nonempty, duplicate-free


class ContextStack:
    """Frame stack owned by a single thread of execution.

    The effective layer fold is cached and invalidated on push/pop, so
    dispatch between activation changes pays one attribute read.
    """

    __slots__ = ("_frames", "_kframes", "_effective", "_owner")

    def __init__(self):
        self._frames: list[Frame] = []
        self._kframes: list[tuple[int, tuple[int, ...]]] = []
        self._effective: tuple[int, ...] | None = ()
        self._owner = threading.get_ident()

    def _check_owner(self):
        if threading.get_ident() != self._owner:
            raise RuntimeError("a ContextStack may only be mutated by its owning thread")

    def activate(self, layers) -> None:
        self._check_owner()
        layers = _normalize(layers)
        self._frames.append(Frame(ACTIVATE, layers))
        self._kframes.append((1, tuple(l.ordinal for l in layers)))
        self._effective = None

    def deactivate(self, layers) -> None:
        self._check_owner()
        layers = _normalize(layers)
        self._frames.append(Frame(DEACTIVATE, layers))
        self._kframes.append((0, tuple(l.ordinal for l in layers)))
        self._effective = None

    def end(self) -> None:
        self._check_owner()
        if not self._frames:
            raise UnbalancedEndError("end() without a matching activation frame")
        self._frames.pop()
        self._kframes.pop()
        self._effective = None

    def _refold(self) -> tuple[int, ...]:
        eff = tuple(_kernel.effective_ordinals(self._kframes))
        self._effective = eff
        return eff

    def effective(self) -> list[LayerId]:
        """Effective activation list, least recent first (a fresh copy)."""
        eff = self._effective
        if eff is None:
            eff = self._refold()
        return [layer_for_ordinal(o) for o in eff]

    @property
    def frames(self) -> tuple[Frame, ...]:
        return tuple(self._frames)

    def __len__(self):
        return len(self._frames)


_state = threading.local()


def current_stack() -> ContextStack:
    """The calling thread's activation stack (created empty on first use)."""
    stack = getattr(_state, "stack", None)
    if stack is None:
        stack = ContextStack()
        _state.stack = stack
    return stack


def with_active_layers(layers) -> None:
    """Activate ``layers`` for the dynamic extent until the matching end()."""
    current_stack().activate(layers)


def without_layers(layers) -> None:
    """Mask ``layers`` from the effective list until the matching end()."""
    current_stack().deactivate(layers)


def end() -> None:
    """Pop the most recent activation frame of the calling thread."""
    current_stack().end()


def scoped(layers, body):
    """Run ``body()`` with ``layers`` active; balance is guaranteed.

    The frame is popped even if body raises, and the exception is
    re-raised after restoration.
    """
    with_active_layers(layers)
    try:
        return body()
    finally:
        end()


@contextmanager
def activating(layers):
    """``with activating([a, b]): ...``, the context-manager form of scoped."""
    with_active_layers(layers)
    try:
        yield
    finally:
        end()


def current_activation() -> list[LayerId]:
    """Effective layers of the calling thread, least recent first (a copy)."""
    return current_stack().effective()
