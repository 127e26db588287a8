"""copkit: context-oriented programming for plain Python programs.

Behavioral variations live in layers; activating a layer reroutes calls
to layered methods through the partial definitions it contributes, in
reverse activation order, each able to proceed to the next one down to
the base implementation. Activation is dynamically scoped and
per-thread. A convention scanner and template generator turn marked
source into registration shims; a benchmark harness measures what the
rerouting costs.
"""

from ._kernel import active_kernel, available_kernels, use_kernel
from .context import (
    ContextStack,
    Frame,
    activating,
    current_activation,
    current_stack,
    end,
    scoped,
    with_active_layers,
    without_layers,
)
from .runtime import (
    DispatchChain,
    DispatchTable,
    LayerId,
    MethodKey,
    dispatch,
    effective_layers,
    register_layer,
)

__version__ = "0.1.0"

__all__ = [
    "ContextStack",
    "DispatchChain",
    "DispatchTable",
    "Frame",
    "LayerId",
    "MethodKey",
    "activating",
    "active_kernel",
    "available_kernels",
    "current_activation",
    "current_stack",
    "dispatch",
    "effective_layers",
    "end",
    "register_layer",
    "scoped",
    "use_kernel",
    "with_active_layers",
    "without_layers",
]
