"""Pure-Python dispatch kernels.

Reference implementation of the two hot operations: folding activation
frames into the effective layer list, and running a proceed chain. The
compiled kernel (``copkit._ckernel``) mirrors this module exactly; any
semantic change here must be ported there.

Layers are represented by their interned ordinals (small ints), frames by
``(kind, ordinals)`` pairs where kind is 1 for activate and 0 for
deactivate.
"""

KERNEL_NAME = "python"


def effective_ordinals(frames):
    """Fold frames bottom-to-top into the effective activation list.

    Activating an already-active layer moves it to the most-recent
    position; deactivating an inactive layer is a no-op. The result is in
    activation order (least recent first) and duplicate-free.
    """
    eff = []
    for kind, ordinals in frames:
        if kind:
            for o in ordinals:
                if o in eff:
                    eff.remove(o)
                eff.append(o)
        else:
            for o in ordinals:
                if o in eff:
                    eff.remove(o)
    return eff


class ProceedHandle:
    """Callable handed to a partial; invokes the rest of its chain.

    Reusable within the partial: each call re-runs the remainder of the
    chain from the same position.
    """

    __slots__ = ("_chain", "_index", "_receiver")

    def __init__(self, chain, index, receiver):
        self._chain = chain
        self._index = index
        self._receiver = receiver

    def __call__(self, *args):
        return _invoke(self._chain, self._index, self._receiver, args)


def _invoke(chain, index, receiver, args):
    impl = chain[index]
    if index + 1 == len(chain):
        return impl(receiver, args)
    return impl(receiver, args, ProceedHandle(chain, index + 1, receiver))


def run_chain(base, partials, effective, receiver, args):
    """Execute one dispatch: partials in reverse activation order, then base.

    ``partials`` maps layer ordinal -> partial impl; ``effective`` is the
    snapshot taken at dispatch entry. Layers without a partial for this
    method are skipped. The base is called as ``base(receiver, args)`` and
    never receives a proceed handle.
    """
    if not effective or not partials:
        return base(receiver, args)
    chain = []
    for i in range(len(effective) - 1, -1, -1):
        impl = partials.get(effective[i])
        if impl is not None:
            chain.append(impl)
    if not chain:
        return base(receiver, args)
    chain.append(base)
    return _invoke(chain, 0, receiver, args)
