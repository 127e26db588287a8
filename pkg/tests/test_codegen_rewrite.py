from copkit.codegen import PROCEED_MARKER, rewrite_proceed, scan

from support import PERSON_SOURCE


def lex(*tokens):
    return list(tokens)


class TestRewrite:
    def test_base_call_becomes_proceed_marker(self):
        body = lex("String", "r", "=", "print", "(", "s", ")", ";",
                   "return", '"A"', "+", "r", ";")
        out = rewrite_proceed(body, "print")
        assert out == lex("String", "r", "=", PROCEED_MARKER, "(", "s", ")", ";",
                          "return", '"A"', "+", "r", ";")

    def test_other_callee_untouched(self):
        body = lex("log", "(", "s", ")", ";")
        assert rewrite_proceed(body, "print") == body

    def test_token_level_match_not_substring(self):
        body = lex("printer", "(", "s", ")", ";")
        assert rewrite_proceed(body, "print") == body

    def test_string_literal_spelling_the_name_untouched(self):
        body = lex("log", "(", '"print"', ")", ";")
        assert rewrite_proceed(body, "print") == body

    def test_bare_mention_without_call_untouched(self):
        body = lex("Handler", "h", "=", "print", ";")
        assert rewrite_proceed(body, "print") == body

    def test_self_receiver_prefix_is_consumed(self):
        for receiver in ("this", "self"):
            body = lex("return", receiver, ".", "print", "(", "s", ")", ";")
            out = rewrite_proceed(body, "print")
            assert out == lex("return", PROCEED_MARKER, "(", "s", ")", ";")

    def test_foreign_receiver_untouched(self):
        body = lex("return", "other", ".", "print", "(", "s", ")", ";")
        assert rewrite_proceed(body, "print") == body

    def test_every_call_site_is_rewritten(self):
        body = lex("print", "(", "a", ")", ";", "print", "(", "b", ")", ";")
        out = rewrite_proceed(body, "print")
        assert out.count(PROCEED_MARKER) == 2
        assert "print" not in out

    def test_zero_matches_is_legal(self):
        body = lex("return", '"A"', ";")
        assert rewrite_proceed(body, "print") == body

    def test_person_partials_rewrite_exactly_one_token_each(self):
        manifest = scan(PERSON_SOURCE)
        (cls,) = manifest.classes
        for partial in cls.partials:
            body = list(partial.decl.body)
            out = rewrite_proceed(body, partial.base_name)
            diffs = [i for i, (a, b) in enumerate(zip(body, out)) if a != b]
            assert len(out) == len(body)
            assert len(diffs) == 1
            assert body[diffs[0]] == "print"
            assert out[diffs[0]] == PROCEED_MARKER
