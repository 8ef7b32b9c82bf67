import pytest

from gndiag.connectivity import is_gn_cut
from gndiag.constructions import certify, clique_product_cut, d_path_cut, grid_cut, torus_cut
from gndiag.families import family
from gndiag.gc import PARTITION, certificate_problems, gc_number
from gndiag.graph import GraphError


@pytest.mark.parametrize("gg,value", [(0, 3), (1, 5), (2, 8)])
def test_grid(gg, value):
    g = family("grid 5 5")
    cert = certify(g, gg, grid_cut(g, 5, 5, gg))
    assert cert.value == value == gc_number(g, gg).value


@pytest.mark.parametrize("gg,value,cut", [(0, 5, 4), (1, 8, 6), (2, 12, 8), (3, 32, 16)])
def test_torus(gg, value, cut):
    g = family("torus 8 8")
    cert = certify(g, gg, torus_cut(g, 8, 8, gg))
    assert (cert.value, len(cert.x)) == (value, cut)
    assert certificate_problems(g, gg, cert) == []


@pytest.mark.parametrize("k,n,value", [(4, 4, 10), (4, 6, 10), (8, 10, 14), (8, 12, 14)])
def test_d_path(k, n, value):
    g = family(f"D {k} * path {n}")
    cert = certify(g, 3, d_path_cut(g, k, n))
    assert cert.value == value
    assert certificate_problems(g, 3, cert) == []
    if k == 8:
        assert cert.kind == PARTITION


@pytest.mark.parametrize("gg", [0, 1, 2])
def test_clique_product(gg):
    g = family("gen-hypercube 5 4")
    x = clique_product_cut(g, 5, 4, gg)
    assert is_gn_cut(g, x, gg)
    assert certify(g, gg, x).value == (gg + 1) * (4 - 1) + 5


def test_not_a_cut_rejected():
    g = family("grid 4 4")
    with pytest.raises(GraphError):
        certify(g, 0, g.vset([0]))
    with pytest.raises(GraphError):
        grid_cut(g, 4, 4, 3)
