import pytest

from copkit.codegen.template import Template, render
from copkit.errors import (
    TemplateError,
    UnbalancedBlockError,
    UnresolvedPlaceholderError,
)

FIG_LAYERS = [
    {"qualified_name": "myprj.layers.A"},
    {"qualified_name": "myprj.layers.B"},
    {"qualified_name": "myprj.inner.layers.C"},
]


class TestSubstitution:
    def test_simple_placeholder(self):
        out = render("layer {{qualified_name}};", {"qualified_name": "myprj.layers.A"})
        assert out == "layer myprj.layers.A;"

    def test_no_placeholders_is_identity(self):
        text = "nothing to see here { } or there\n"
        assert render(text, {}) == text

    def test_dotted_path(self):
        out = render("{{decl.name}}", {"decl": {"name": "print"}})
        assert out == "print"

    def test_integers_render_as_decimal(self):
        assert render("{{n}}", {"n": 42}) == "42"

    def test_escaped_brace_pair(self):
        assert render(r"a \{{ b", {}) == "a {{ b"
        assert render(r"\{{name}}", {}) == "{{name}}"


class TestRepetition:
    def test_each_over_layers(self):
        out = render(
            "{{#each layers}}[{{qualified_name}}]{{/each}}", {"layers": FIG_LAYERS}
        )
        assert out == "[myprj.layers.A][myprj.layers.B][myprj.inner.layers.C]"

    def test_each_over_empty_list(self):
        assert render("{{#each xs}}never{{/each}}", {"xs": []}) == ""

    def test_inner_scope_shadows_then_unwinds(self):
        out = render(
            "{{name}}:{{#each xs}}{{name}}{{/each}}:{{name}}",
            {"name": "outer", "xs": [{"name": "inner"}]},
        )
        assert out == "outer:inner:outer"

    def test_parent_scope_visible_inside_block(self):
        out = render(
            "{{#each xs}}{{prefix}}{{v}} {{/each}}",
            {"prefix": ">", "xs": [{"v": "1"}, {"v": "2"}]},
        )
        assert out == ">1 >2 "

    def test_nested_blocks(self):
        binding = {
            "rows": [
                {"cells": [{"c": "a"}, {"c": "b"}]},
                {"cells": [{"c": "x"}]},
            ]
        }
        out = render("{{#each rows}}({{#each cells}}{{c}}{{/each}}){{/each}}", binding)
        assert out == "(ab)(x)"


class TestErrors:
    def test_unresolved_placeholder_names_the_path(self):
        with pytest.raises(UnresolvedPlaceholderError, match="missing.path"):
            render("{{missing.path}}", {"missing": {}})

    def test_unclosed_block(self):
        with pytest.raises(UnbalancedBlockError):
            Template("{{#each xs}} no close")

    def test_stray_close(self):
        with pytest.raises(UnbalancedBlockError):
            Template("no open {{/each}}")

    def test_each_over_non_list(self):
        with pytest.raises(TemplateError):
            render("{{#each xs}}{{/each}}", {"xs": "not-a-list"})

    def test_placeholder_resolving_to_structure(self):
        with pytest.raises(TemplateError):
            render("{{xs}}", {"xs": ["a"]})


class TestDeterminism:
    def test_equal_inputs_equal_bytes(self):
        template = Template("{{#each layers}}layer {{qualified_name}};\n{{/each}}")
        binding = {"layers": FIG_LAYERS}
        assert template.render(binding) == template.render(binding)
