"""Shared fixtures and helpers for the test suite."""

import hashlib
from pathlib import Path

from copkit import DispatchTable, MethodKey, register_layer

GOLDEN_DIR = Path(__file__).parent / "golden"
GOLDEN_FIXTURES = [
    "person",
    "signature_mismatch",
    "duplicate_partial",
    "ambiguous_suffix",
    "unmarked_class",
    "empty_unit",
]

PERSON_SOURCE = """\
@LayeredClass(ALayer => myprj.layers.A, BLayer => myprj.layers.B, CLayer => myprj.inner.layers.C)
class Person {
    method printALayer(s: String) -> String {
        String r = print(s);
        return "A" + r;
    }
    method printBLayer(s: String) -> String {
        String r = print(s);
        return "B" + r;
    }
    method printCLayer(s: String) -> String {
        String r = print(s);
        return "C" + r;
    }
    method print(s: String) -> String {
        return s + "Base";
    }
}
"""


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def tree_bytes(root) -> dict[str, bytes]:
    """All files under ``root`` as {relative posix path: content}."""
    root = Path(root)
    if not root.is_dir():
        return {}
    return {
        p.relative_to(root).as_posix(): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def make_person_table(log):
    """Runtime twin of the layered Person class; bodies append to ``log``."""
    a = register_layer("myprj.layers.A")
    b = register_layer("myprj.layers.B")
    c = register_layer("myprj.inner.layers.C")
    key = MethodKey("Person", "print")
    table = DispatchTable()

    def base(receiver, args):
        log.append("base")
        return args[0] + "Base"

    def make_partial(tag):
        def partial(receiver, args, proceed):
            log.append(tag)
            return tag + proceed(*args)

        return partial

    table.register_base(key, base)
    table.register_partial(key, a, make_partial("A"))
    table.register_partial(key, b, make_partial("B"))
    table.register_partial(key, c, make_partial("C"))
    table.finalize()
    return table, key, {"A": a, "B": b, "C": c}


def replay_oracle(frames) -> list[str]:
    """Naive activation interpreter: replay frames over an explicit list.

    Frames are ("activate"|"deactivate", [qualified names]) pairs; returns
    the effective list of names, least recent first.
    """
    active: list[str] = []
    for kind, names in frames:
        for name in names:
            if name in active:
                active.remove(name)
            if kind == "activate":
                active.append(name)
    return active
