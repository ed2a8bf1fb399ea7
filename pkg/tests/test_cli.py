"""File parsing, subcommands, formats, and the exit-code contract."""

import pytest

from helpers import PRISM_EDGES
from hyperaut import DuplicateEdge, ParseError, UnknownLabel
from hyperaut.cli import fmt_cycles, main, parse_hypergraph_text

PRISM_TEXT = "# triangular prism\nvertices: 6\n" + "".join(
    f"edge: {a} {b}\n" for a, b in PRISM_EDGES
)


@pytest.fixture
def prism_file(tmp_path):
    path = tmp_path / "prism.hg"
    path.write_text(PRISM_TEXT)
    return str(path)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestParse:
    def test_prism_file(self):
        g = parse_hypergraph_text(PRISM_TEXT)
        assert g.ground.size == 6 and g.n == 9
        assert g.edges[0] == (0, 1)

    def test_vertex_count_without_edges(self):
        g = parse_hypergraph_text("vertices: 3\n")
        assert g.ground.labels == (1, 2, 3) and g.n == 0

    def test_explicit_string_labels(self):
        g = parse_hypergraph_text("vertices: c a b\nedge: a c\n")
        assert g.ground.labels == ("a", "b", "c")
        assert g.edges == ((0, 2),)

    def test_explicit_integer_labels_sort_numerically(self):
        g = parse_hypergraph_text("vertices: 10 2 1\nedge: 10 1\n")
        assert g.ground.labels == (1, 2, 10)

    def test_repeated_vertex_in_edge(self):
        with pytest.raises(ParseError) as err:
            parse_hypergraph_text("vertices: 3\nedge: 1 1\n")
        assert err.value.line == 2

    def test_unknown_label(self):
        with pytest.raises(UnknownLabel):
            parse_hypergraph_text("vertices: 3\nedge: 1 7\n")

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            parse_hypergraph_text("vertices: 3\nedge: 1 2\nedge: 2 1\n")

    def test_missing_vertices_line(self):
        with pytest.raises(ParseError):
            parse_hypergraph_text("edge: 1 2\n")

    def test_second_vertices_line(self):
        with pytest.raises(ParseError):
            parse_hypergraph_text("vertices: 2\nvertices: 3\n")

    def test_unrecognized_directive(self):
        with pytest.raises(ParseError):
            parse_hypergraph_text("vertices: 2\nnode: 1\n")

    def test_comments_and_blanks_ignored(self):
        g = parse_hypergraph_text("\n# hi\nvertices: 2\n\nedge: 1 2\n")
        assert g.n == 1


class TestAutCommand:
    def test_order_only_by_default(self, prism_file, capsys):
        assert main(["aut", prism_file]) == 0
        assert capsys.readouterr().out == "12\n"

    def test_listing_two_row(self, prism_file, capsys):
        assert main(["aut", prism_file, "--list"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "12"
        assert len(lines) == 13
        assert lines[1] == "1 2 3 4 5 6 / 1 2 3 4 5 6"
        assert "1 2 3 4 5 6 / 4 5 6 1 2 3" in lines

    def test_brute_method_is_identical(self, prism_file, capsys):
        main(["aut", prism_file, "--list"])
        fast = capsys.readouterr().out
        main(["aut", prism_file, "--list", "--method", "brute"])
        brute = capsys.readouterr().out
        assert fast == brute

    def test_leibniz_method_is_identical(self, prism_file, capsys):
        main(["aut", prism_file, "--list"])
        fast = capsys.readouterr().out
        main(["aut", prism_file, "--list", "--method", "leibniz"])
        slow = capsys.readouterr().out
        assert fast == slow

    def test_count_format(self, tmp_path, capsys):
        path = write(tmp_path, "edgeless.hg", "vertices: 3\n")
        assert main(["aut", path, "--format", "count"]) == 0
        assert capsys.readouterr().out == "6\n"

    def test_cycles_format(self, tmp_path, capsys):
        path = write(tmp_path, "path.hg", "vertices: 3\nedge: 1 2\nedge: 2 3\n")
        assert main(["aut", path, "--list", "--format", "cycles"]) == 0
        assert capsys.readouterr().out == "2\n()\n(1 3)\n"

    def test_parse_error_exits_two(self, tmp_path, capsys):
        path = write(tmp_path, "bad.hg", "vertices: 2\nedge: 1 5\n")
        assert main(["aut", path]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_exits_two(self, capsys):
        assert main(["aut", "/nonexistent/file.hg"]) == 2

    def test_cap_exceeded_exits_three(self, tmp_path, capsys):
        path = write(
            tmp_path, "wide.hg", "vertices: 8\nedge: 1 2 3 4 5 6 7\n"
        )
        assert main(["aut", path]) == 3
        assert "cap" in capsys.readouterr().err

    def test_brute_over_ground_cap_exits_three(self, tmp_path, capsys):
        path = write(tmp_path, "big.hg", "vertices: 9\n")
        assert main(["aut", path, "--method", "brute"]) == 3

    def test_byte_stable_across_runs(self, prism_file, capsys):
        main(["aut", prism_file, "--list", "--format", "cycles"])
        first = capsys.readouterr().out
        main(["aut", prism_file, "--list", "--format", "cycles"])
        assert capsys.readouterr().out == first

    def test_given_row_order(self, prism_file, capsys):
        assert main(["aut", prism_file, "--order-heuristic", "given"]) == 0
        assert capsys.readouterr().out == "12\n"

    def test_raised_arity_cap(self, tmp_path, capsys):
        # one 7-edge: 7! ways onto itself, one free point
        path = write(tmp_path, "wide.hg", "vertices: 8\nedge: 1 2 3 4 5 6 7\n")
        assert main(["aut", path, "--max-arity", "7"]) == 0
        assert capsys.readouterr().out == "5040\n"


class TestIsoCommand:
    def test_relabeled_prism(self, tmp_path, prism_file, capsys):
        mapping = dict(zip(range(1, 7), [3, 1, 2, 6, 4, 5]))
        text = "vertices: 6\n" + "".join(
            f"edge: {mapping[a]} {mapping[b]}\n" for a, b in PRISM_EDGES
        )
        other = write(tmp_path, "relabel.hg", text)
        assert main(["iso", prism_file, other]) == 0
        assert capsys.readouterr().out == "12\n"

    def test_non_isomorphic_exits_one(self, tmp_path, capsys):
        p4 = write(tmp_path, "p4.hg", "vertices: 4\nedge: 1 2\nedge: 2 3\nedge: 3 4\n")
        star = write(tmp_path, "star.hg", "vertices: 4\nedge: 1 2\nedge: 1 3\nedge: 1 4\n")
        assert main(["iso", p4, star]) == 1
        assert capsys.readouterr().out == "0\n"

    def test_self_iso_count_is_aut_order(self, prism_file, capsys):
        assert main(["iso", prism_file, prism_file]) == 0
        assert capsys.readouterr().out == "12\n"

    def test_listing_bijections(self, tmp_path, capsys):
        one_edge = write(tmp_path, "edge.hg", "vertices: 2\nedge: 1 2\n")
        lettered = write(tmp_path, "ab.hg", "vertices: a b\nedge: a b\n")
        assert main(["iso", one_edge, lettered, "--list"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["2", "1 2 / a b", "1 2 / b a"]

    def test_brute_method(self, tmp_path, prism_file, capsys):
        assert main(["iso", prism_file, prism_file, "--method", "brute"]) == 0
        assert capsys.readouterr().out == "12\n"


class TestDetCommand:
    def test_prism_term_listing(self, prism_file, capsys):
        assert main(["det", prism_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "12"
        assert lines[1] == "1 2 3 4 5 6 / 1 2 3 4 5 6"
        assert len(lines) == 13

    def test_engines_print_identically(self, prism_file, capsys):
        main(["det", prism_file])
        fold = capsys.readouterr().out
        main(["det", prism_file, "--method", "leibniz"])
        assert capsys.readouterr().out == fold

    def test_empty_hypergraph_det_is_one(self, tmp_path, capsys):
        path = write(tmp_path, "none.hg", "vertices: 3\n")
        main(["det", path])
        assert capsys.readouterr().out == "1\n()\n"


class TestVerifyCommand:
    def test_prism_passes_all_checks(self, prism_file, capsys):
        assert main(["verify", prism_file]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("ok") == 7

    def test_graph_with_radical(self, tmp_path, capsys):
        path = write(
            tmp_path, "rad.hg",
            "vertices: 5\nedge: 1 2\nedge: 3 4\nedge: 4 5\nedge: 3 5\n",
        )
        assert main(["verify", path]) == 0
        assert "kernel-classification" in capsys.readouterr().out

    def test_mixed_hypergraph(self, tmp_path, capsys):
        path = write(
            tmp_path, "mixed.hg",
            "vertices: 4\nedge: 1\nedge: 1 2\nedge: 2 3 4\n",
        )
        assert main(["verify", path]) == 0

    def test_non_spanning_graph(self, tmp_path, capsys):
        path = write(tmp_path, "loose.hg", "vertices: 5\nedge: 1 2\nedge: 2 3\n")
        assert main(["verify", path]) == 0
        assert "FAIL" not in capsys.readouterr().out

    def test_oversize_ground_exits_three(self, tmp_path, capsys):
        path = write(tmp_path, "big.hg", "vertices: 12\nedge: 1 2\n")
        assert main(["verify", path]) == 3
        assert "cap" in capsys.readouterr().err


def test_cycle_formatting():
    from hyperaut import GroundSet

    ground = GroundSet.of_size(6)
    assert fmt_cycles((0, 1, 2, 3, 4, 5), ground) == "()"
    assert fmt_cycles((1, 0, 2, 4, 3, 5), ground) == "(1 2)(4 5)"
    assert fmt_cycles((4, 5, 3, 1, 2, 0), ground) == "(1 5 3 4 2 6)"
