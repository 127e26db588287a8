# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled dispatch kernels; behavioural twin of copkit._pykernel."""

KERNEL_NAME = "compiled"


def effective_ordinals(frames):
    cdef list eff = []
    cdef object kind, ordinals, o
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


cdef class ProceedHandle:
    cdef list _chain
    cdef Py_ssize_t _index
    cdef object _receiver

    def __call__(self, *args):
        return _invoke(self._chain, self._index, self._receiver, args)


cdef inline object _make_handle(list chain, Py_ssize_t index, object receiver):
    cdef ProceedHandle handle = ProceedHandle.__new__(ProceedHandle)
    handle._chain = chain
    handle._index = index
    handle._receiver = receiver
    return handle


cdef object _invoke(list chain, Py_ssize_t index, object receiver, object args):
    cdef object impl = chain[index]
    if index + 1 == len(chain):
        return impl(receiver, args)
    return impl(receiver, args, _make_handle(chain, index + 1, receiver))


def run_chain(base, dict partials, effective, receiver, args):
    cdef list chain
    cdef Py_ssize_t i, n = len(effective)
    cdef object impl
    if n == 0 or len(partials) == 0:
        return base(receiver, args)
    chain = []
    for i in range(n - 1, -1, -1):
        impl = partials.get(effective[i])
        if impl is not None:
            chain.append(impl)
    if len(chain) == 0:
        return base(receiver, args)
    chain.append(base)
    return _invoke(chain, 0, receiver, args)
