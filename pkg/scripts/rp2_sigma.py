"""Coefficient dependence of Σ on the flag triangulation of RP^2.

Builds the barycentric subdivision of the 6-vertex RP^2, takes the
diagonal character on its 1-skeleton, and tabulates Σ^q membership for
q = 0..3 over Z, Q, F2, F3, F5.  Also reports the Bestvina-Brady
predicates and the Dwyer-Fried test for the diagonal cover.  For the
diagonal ν only W = V meets im(ν*), so that test reduces to β_i(z_V).
"""

import argparse
import json
import time

from jumploci.exactlin import QQ, ZZ, Field
from jumploci.sigma import bestvina_brady_predicates, sigma_member
from jumploci.simplicial import rp2_six_vertex
from jumploci.toric import aomoto_betti_vector

COEFFS = {"Z": ZZ, "Q": QQ, "F2": Field(2), "F3": Field(3), "F5": Field(5)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-q", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    t0 = time.perf_counter()
    L = rp2_six_vertex().barycentric_subdivision()
    G = L.one_skeleton()
    chi = {v: 1 for v in G.vertices}
    table = {name: [sigma_member(G, chi, q, c) for q in range(args.max_q + 1)] for name, c in COEFFS.items()}
    df = {}
    for name, c in COEFFS.items():
        if c is not ZZ:
            beta = aomoto_betti_vector(L, L.vertices, c)
            df[name] = [not any(beta[: q + 1]) for q in range(args.max_q + 1)]
    bb = bestvina_brady_predicates(G).as_json()
    elapsed = time.perf_counter() - t0

    if args.json:
        print(json.dumps({"f_vector": L.f_vector(), "sigma": table, "dwyer_fried": df, "bb": bb,
                          "seconds": round(elapsed, 2)}, indent=2, sort_keys=True))
        return
    print(f"flag RP^2: f-vector {L.f_vector()}, {len(G.edges)} edges")
    print("diagonal character in Sigma^q:")
    print("coeff " + " ".join(f"q={q}" for q in range(args.max_q + 1)))
    for name, row in table.items():
        print(f"{name:<5} " + " ".join(f"{'yes' if x else 'no':>3}" for x in row))
    print("finite Betti numbers of the diagonal cover up to q:")
    for name, row in df.items():
        print(f"{name:<5} " + " ".join(f"{'yes' if x else 'no':>3}" for x in row))
    print("Bestvina-Brady:", ", ".join(f"{k}={v}" for k, v in bb.items() if isinstance(v, bool)))
    print(f"({elapsed:.1f}s)")


if __name__ == "__main__":
    main()
