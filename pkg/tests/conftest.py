import pytest

from copkit import _kernel
from copkit.context import current_stack


@pytest.fixture(params=_kernel.available_kernels())
def kernel(request):
    """Run the test once per available dispatch kernel."""
    previous = _kernel.use_kernel(request.param)
    yield request.param
    _kernel.use_kernel(previous)


@pytest.fixture(autouse=True)
def _clean_thread_stack():
    """Pop any frames a buggy test leaves on the main thread's stack."""
    stack = current_stack()
    depth = len(stack)
    yield
    while len(stack) > depth:
        stack.end()
