import pytest

from app import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestOrdinalCommands:
    def test_compare(self, capsys):
        assert run(capsys, "cmp-ord", "0", "1") == (0, "<\n", "")
        assert run(capsys, "cmp-ord", "w+1", "1+w")[1] == ">\n"

    def test_normalize(self, capsys):
        assert run(capsys, "normalize", "2+w")[1] == "w\n"

    def test_arith(self, capsys):
        assert run(capsys, "arith", "add", "1", "w")[1] == "w\n"
        assert run(capsys, "arith", "pow", "w", "2")[1] == "w^2\n"
        assert run(capsys, "arith", "nprod", "w+1", "w+1")[1] == "w^2+w*2+1\n"

    def test_motype(self, capsys):
        assert run(capsys, "motype", "G", "2") == (0, "w^w^w\n", "")

    def test_parse_error(self, capsys):
        code, out, err = run(capsys, "cmp-ord", "w+", "1")
        assert code == 2
        assert out == ""
        assert err.startswith("[ERROR]")

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["motype", "Q", "2"])
        assert exc.value.code == 2


class TestOrderCommands:
    def test_strong_fails(self, capsys):
        assert run(capsys, "cmp-seq", "--order", "s", "[1]", "[0,1]") == (1, "", "")

    def test_weak_holds(self, capsys):
        assert run(capsys, "cmp-seq", "[1]", "[0,1]")[0] == 0

    def test_realizer(self, capsys):
        assert run(capsys, "cmp-seq", "--verbose", "[0,2]", "[0,1,2]") == (0, "1 2\n", "")

    def test_trees(self, capsys):
        assert run(capsys, "cmp-tree", "(1 . .)", "(0 (1 . .) .)")[0] == 0
        assert run(capsys, "cmp-tree", "(1 . .)", "(0 . .)")[0] == 1

    def test_left_strict_rejected(self, capsys):
        code, _, err = run(capsys, "cmp-tree", "--left-strict", "(0 (0 . .) .)", ".")
        assert code == 2
        assert "not left-strict" in err


class TestEmbedAndReify:
    def test_embed(self, capsys):
        code, out, _ = run(capsys, "embed", "seq-to-tree", "[2,0,1,0,3]", "--param", "alpha=4")
        assert (code, out) == (0, "(0 (2 . .) (0 (1 . .) (3 . .)))\n")

    def test_embed_unknown(self, capsys):
        code, _, err = run(capsys, "embed", "nope", "[]")
        assert code == 2
        assert "Unknown embedding" in err

    def test_embed_bad_param(self, capsys):
        assert run(capsys, "embed", "seq-to-tree", "[]", "--param", "alpha")[0] == 2

    def test_reify(self, capsys):
        assert run(capsys, "reify", "--alpha", "1", ".") == (0, "phi(3,1)\n", "")

    def test_reify_descends(self, capsys):
        code, out, _ = run(capsys, "reify", "--alpha", "1", "(0 . .); .")
        assert code == 0
        assert len(out.splitlines()) == 2

    def test_reify_not_bad(self, capsys):
        code, _, err = run(capsys, "reify", ". ; (0 . .)")
        assert code == 1
        assert err.startswith("[ERROR] Not a bad sequence")


class TestCheck:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "check", "seq-order-axioms", "--alphabet", "2", "--len", "2")
        assert (code, out) == (0, "")

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "check", "nope")
        assert code == 2
        assert "Unknown suite" in err

    def test_term_size_flag(self, capsys):
        code, out, _ = run(capsys, "check", "ord-laws", "--samples", "10", "--max-term-size", "3")
        assert (code, out) == (0, "")

    def test_bad_sequences_flag(self, capsys):
        code, out, _ = run(capsys, "check", "reify-descent", "--alphabet", "2", "--samples", "0",
                           "--bad-sequences", "1")
        assert (code, out) == (0, "")

    def test_unknown_profile(self, capsys):
        code, _, err = run(capsys, "check", "ord-laws", "--profile", "nightly")
        assert code == 2
        assert err.startswith("[ERROR] Unknown profile: nightly")
