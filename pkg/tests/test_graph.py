from fractions import Fraction as F

import pytest

from squarecontact.graph import (
    BuildProgram, InsertCycle, InsertVertex, ProgramError, SplitPair, build_graph, k2n_program,
    validate_program,
)


def test_c4_alone():
    g = build_graph(BuildProgram())
    assert g.vertices == [0, 1, 2, 3]
    assert g.leaves == [0]
    assert g.is_bipartite()


def test_vertex_insertion_children():
    g = build_graph(BuildProgram([InsertVertex(0, SplitPair.FIRST_THIRD)]))
    assert g.faces[1].corners == (0, 1, 2, 4)
    assert g.faces[2].corners == (0, 4, 2, 3)
    assert {frozenset(e) for e in [(4, 0), (4, 2)]} <= g.edge_set()

    g = build_graph(BuildProgram([InsertVertex(0, SplitPair.SECOND_FOURTH)]))
    assert g.faces[1].corners == (0, 1, 4, 3)
    assert g.faces[2].corners == (4, 1, 2, 3)


def test_cycle_insertion():
    g = build_graph(BuildProgram([InsertCycle(0)]))
    assert len(g.vertices) == 8
    assert len(g.edges) == 12
    assert g.leaves == [1, 2, 3, 4, 5]
    assert g.faces[5].corners == (4, 5, 6, 7)
    assert g.is_bipartite()


def test_program_errors_name_the_op():
    with pytest.raises(ProgramError, match="UnknownFace@op0"):
        build_graph(BuildProgram([InsertVertex(3)]))
    with pytest.raises(ProgramError, match="FaceAlreadySubdivided@op1"):
        build_graph(BuildProgram([InsertCycle(0), InsertVertex(0)]))


def test_validate_program_diagnostics():
    p = BuildProgram([InsertVertex(0)], {1: F(1), 0: F(2), 2: F(0)}, F(0))
    kinds = [d.split(":")[0] for d in validate_program(p)]
    assert "NonPositiveTolerance" in kinds
    assert "TargetOnInternalFace" in kinds
    assert "NonPositiveTarget" in kinds
    assert validate_program(BuildProgram([InsertVertex(0)], {})) == ["MissingTarget: face 1", "MissingTarget: face 2"]


@pytest.mark.parametrize("n", [2, 3, 4, 10])
def test_k2n_program_builds_k2n(n):
    p = k2n_program(n)
    g = build_graph(p)
    adj = g.adjacency()
    assert len(g.vertices) == n + 2
    assert adj[1] == adj[3] == set(g.vertices) - {1, 3}
    assert not validate_program(p)


def test_deep_program_is_iterative():
    ops = [InsertVertex(0)]
    for i in range(3000):
        ops.append(InsertVertex(2 * i + 1))
    g = build_graph(BuildProgram(ops))
    assert len(g.preorder()) == len(g.faces)
