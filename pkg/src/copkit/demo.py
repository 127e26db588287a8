"""In-process demo: a resource store with caching and logging layers.

``run_demo`` replays the canonical driver (a plain request, one under the
logging layer, a plain one again, then one under caching + logging) and
emits the seven-line trace showing reverse-activation-order dispatch.
"""

from .context import scoped
from .runtime import DispatchTable, MethodKey, register_layer

CACHING = "demo.layers.caching"
LOGGING = "demo.layers.logging"

REQUEST = MethodKey("ResourceStorage", "request")

EXPECTED_TRACE = [
    "Search",
    "Request!",
    "Search",
    "Search",
    "Request!",
    "Cache...",
    "Search",
]


def build_storage(write):
    """Build the layered ResourceStorage fixture.

    Returns (table, layers-by-name, store). ``write`` receives each trace
    line; the store dict is the receiver state (items plus cache).
    """
    caching = register_layer(CACHING)
    logging = register_layer(LOGGING)

    store = {
        "items": {f"Item{i}": f"value-{i}" for i in range(1, 5)},
        "cache": {},
    }

    def request_base(receiver, args):
        (req,) = args
        write("Search")
        return receiver["items"].get(req)

    def request_caching(receiver, args, proceed):
        (req,) = args
        write("Cache...")
        result = receiver["cache"].get(req)
        if result is None:
            result = proceed(req)
            receiver["cache"][req] = result
        return result

    def request_logging(receiver, args, proceed):
        write("Request!")
        return proceed(*args)

    table = DispatchTable()
    table.register_base(REQUEST, request_base)
    table.register_partial(REQUEST, caching, request_caching)
    table.register_partial(REQUEST, logging, request_logging)
    table.finalize()

    return table, {"caching": caching, "logging": logging}, store


def run_demo(write=print) -> None:
    """Replay the demo driver, emitting the seven-line trace via ``write``."""
    table, layers, store = build_storage(write)
    caching, logging = layers["caching"], layers["logging"]

    def request(item):
        return table.dispatch(REQUEST, store, (item,))

    request("Item1")
    scoped([logging], lambda: request("Item2"))
    request("Item3")
    scoped([caching, logging], lambda: request("Item4"))
