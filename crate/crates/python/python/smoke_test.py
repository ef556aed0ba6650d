"""Smoke test for the compiled extension: python python/smoke_test.py"""

import json
import math

import clique_spectra_py as cs


def main():
    k4 = cs.Graph.from_graph6("C~")
    assert k4.n == 4 and k4.edge_count() == 6
    assert cs.complete_graph(4) == k4

    spectrum = cs.spectral_radius(cs.turan_graph(6, 3), 3)
    assert spectrum.converged and abs(spectrum.rho - 4.0) < 1e-9, spectrum
    assert abs(sum(x ** 3 for x in spectrum.vector) - 1.0) < 1e-9

    winner = cs.Graph.from_graph6("F?~~w")
    assert abs(cs.spectral_radius(winner, 2).rho - (1 + math.sqrt(13))) < 1e-8
    assert cs.is_free(winner, 2, 2)
    assert cs.find_packing(cs.complete_graph(6), 2, 2) == [[0, 1, 2], [3, 4, 5]]

    conj = cs.conjectured_extremal(7, 2, 2)
    assert conj.graph6() == "Fs~v_"
    assert cs.are_isomorphic(conj, cs.join(cs.complete_graph(1), cs.complete_multipartite([3, 3])))
    assert cs.count_join_turan_cliques(7, 2, 2, 3) == cs.count_cliques(conj, 3) == 9

    assert cs.weakly_irreducible(k4, 3) and cs.clique_connected(k4, 3)
    assert cs.chvatal_hanson_bound(2, 2) == 6
    assert cs.matching_number(cs.complete_graph(7)) == 3

    rec = json.loads(cs.scan_all(5, 2, 2, 2))
    assert rec["verdict"] == "conjecture-beaten" and rec["maximizers"] == ["D~{"]
    rec = json.loads(cs.scan_graphs(["Fs~v_", "F?~~w"], 7, 2, 2, 2))
    assert rec["maximizers"] == ["F?~~w"]

    try:
        cs.Graph.from_graph6("D?")
    except ValueError as e:
        assert "byte 2" in str(e)
    else:
        raise AssertionError("truncated graph6 accepted")
    print("smoke test ok")


if __name__ == "__main__":
    main()
