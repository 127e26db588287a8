import pytest

from copkit import codegen
from copkit.codegen import manifest as mf
from copkit.errors import (
    DslSyntaxError,
    DuplicateMappingError,
    DuplicatePartialDeclError,
    NestedPartialError,
    SignatureMismatchError,
    SuffixAmbiguityError,
)

from support import PERSON_SOURCE


class TestPersonFixture:
    def test_one_base_three_partials(self):
        manifest = codegen.scan(PERSON_SOURCE)
        assert manifest.layers == (
            "myprj.layers.A",
            "myprj.layers.B",
            "myprj.inner.layers.C",
        )
        (cls,) = manifest.classes
        assert cls.class_name == "Person"
        assert [m.local for m in cls.mappings] == ["ALayer", "BLayer", "CLayer"]
        assert [b.name for b in cls.base_methods] == ["print"]
        assert [(p.base_name, p.layer_local_name) for p in cls.partials] == [
            ("print", "ALayer"),
            ("print", "BLayer"),
            ("print", "CLayer"),
        ]

    def test_classifier_soundness_from_manifest_alone(self):
        """Re-derivable: stripping the suffix yields a base with equal signature."""
        manifest = codegen.scan(PERSON_SOURCE)
        for cls in manifest.classes:
            bases = {b.name: b for b in cls.base_methods}
            for partial in cls.partials:
                assert partial.decl.name == partial.base_name + partial.layer_local_name
                assert partial.layer_local_name in {m.local for m in cls.mappings}
                base = bases[partial.base_name]
                assert partial.decl.signature == base.signature


class TestClassification:
    def test_unmarked_class_contributes_nothing(self):
        src = """
        class Plain {
            method foo(x: Int) -> Int { return x; }
            method fooALayer(x: Int) -> Int { return x; }
        }
        """
        manifest = codegen.scan(src)
        assert manifest.empty

    def test_suffix_without_base_is_plain(self):
        src = """
        @LayeredClass(ALayer => p.layers.A)
        class Widget {
            method helperALayer(x: Int) -> Int { return x; }
        }
        """
        manifest = codegen.scan(src)
        (cls,) = manifest.classes
        assert cls.base_methods == ()
        assert cls.partials == ()

    def test_single_viable_decomposition_wins(self):
        # only `print` exists, so printerXLayer can only split as print + erXLayer
        src = """
        @LayeredClass(XLayer => p.layers.X, erXLayer => p.layers.EX)
        class Printer {
            method print(s: String) -> String { return s; }
            method printerXLayer(s: String) -> String { return print(s); }
        }
        """
        manifest = codegen.scan(src)
        (cls,) = manifest.classes
        assert [(p.base_name, p.layer_local_name) for p in cls.partials] == [
            ("print", "erXLayer")
        ]

    def test_two_viable_decompositions_are_ambiguous(self):
        src = """
        @LayeredClass(XLayer => p.layers.X, erXLayer => p.layers.EX)
        class Printer {
            method print(s: String) -> String { return s; }
            method printer(s: String) -> String { return s; }
            method printerXLayer(s: String) -> String { return print(s); }
        }
        """
        with pytest.raises(SuffixAmbiguityError) as excinfo:
            codegen.scan(src)
        message = str(excinfo.value)
        assert "'print'" in message and "'printer'" in message
        assert "'erXLayer'" in message and "'XLayer'" in message


class TestValidation:
    def test_signature_mismatch_on_params(self):
        src = """
        @LayeredClass(ALayer => p.layers.A)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: Int) -> String { return print(s); }
        }
        """
        with pytest.raises(SignatureMismatchError):
            codegen.scan(src)

    def test_signature_mismatch_on_return_type(self):
        src = """
        @LayeredClass(ALayer => p.layers.A)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: String) -> Int { return 1; }
        }
        """
        with pytest.raises(SignatureMismatchError):
            codegen.scan(src)

    def test_duplicate_partial_declaration(self):
        src = """
        @LayeredClass(ALayer => p.layers.A)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: String) -> String { return print(s); }
            method printALayer(s: String) -> String { return print(s); }
        }
        """
        with pytest.raises(DuplicatePartialDeclError):
            codegen.scan(src)

    def test_duplicate_local_mapping(self):
        src = """
        @LayeredClass(ALayer => p.layers.A, ALayer => p.layers.B)
        class Person {
            method print(s: String) -> String { return s; }
        }
        """
        with pytest.raises(DuplicateMappingError):
            codegen.scan(src)

    def test_partial_of_partial_rejected(self):
        src = """
        @LayeredClass(ALayer => p.layers.A, BLayer => p.layers.B)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: String) -> String { return print(s); }
            method printALayerBLayer(s: String) -> String { return printALayer(s); }
        }
        """
        with pytest.raises(NestedPartialError):
            codegen.scan(src)

    def test_diagnose_collects_every_violation(self):
        src = """
        @LayeredClass(ALayer => p.layers.A, BLayer => p.layers.B)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: Int) -> String { return print(s); }
            method printBLayer(s: Bool) -> String { return print(s); }
        }
        """
        manifest, errors = codegen.diagnose(src)
        assert manifest is not None
        assert [e.code for e in errors] == ["signature-mismatch", "signature-mismatch"]
        assert all(e.line > 0 for e in errors)

    def test_diagnose_reports_parse_errors(self):
        manifest, errors = codegen.diagnose("class {")
        assert manifest is None
        assert [e.code for e in errors] == ["syntax"]


class TestUnitStructure:
    def test_layer_decls_and_mappings_merge_in_source_order(self):
        src = """
        layer standalone.layers.first;
        @LayeredClass(ALayer => p.layers.A)
        class Person {
            method print(s: String) -> String { return s; }
            method printALayer(s: String) -> String { return print(s); }
        }
        layer standalone.layers.first;
        layer p.layers.A;
        """
        manifest = codegen.scan(src)
        assert manifest.layers == ("standalone.layers.first", "p.layers.A")

    def test_empty_unit_scans_to_empty_manifest(self):
        assert codegen.scan("").empty
        assert codegen.scan("   \n\n  ").empty

    def test_syntax_error_carries_line(self):
        with pytest.raises(DslSyntaxError) as excinfo:
            codegen.scan("layer a.b\nclass X {}")
        assert excinfo.value.line == 2  # the ';' is missing before 'class'


class TestManifestJson:
    def test_round_trip(self):
        manifest = codegen.scan(PERSON_SOURCE)
        assert codegen.from_json(codegen.to_json(manifest)) == manifest

    def test_serialized_shape(self):
        manifest = mf.Manifest(
            layers=("p.layers.A",),
            classes=(
                mf.ClassManifest(
                    class_name="W",
                    mappings=(mf.MappingSpec("ALayer", "p.layers.A"),),
                    base_methods=(
                        mf.MethodSpec("go", (mf.ParamSpec("x", "Int"),), "Int", ("x",)),
                    ),
                    partials=(
                        mf.PartialSpec(
                            "go",
                            "ALayer",
                            mf.MethodSpec(
                                "goALayer",
                                (mf.ParamSpec("x", "Int"),),
                                "Int",
                                ("go", "(", "x", ")"),
                            ),
                        ),
                    ),
                ),
            ),
        )
        text = codegen.to_json(manifest)
        assert text.startswith('{\n  "layers": [\n    "p.layers.A"\n  ],\n  "classes": [')
        assert '"class_name": "W"' in text
        assert '"local": "ALayer"' in text
        assert '"qualified": "p.layers.A"' in text
        assert '"layer_local_name": "ALayer"' in text
        assert text.endswith("\n}\n")
        # key order is fixed: layers before classes, then declaration order
        assert text.index('"layers"') < text.index('"classes"')
        assert text.index('"class_name"') < text.index('"mappings"')
        assert text.index('"mappings"') < text.index('"base_methods"')
        assert text.index('"base_methods"') < text.index('"partials"')
