#!/usr/bin/env python3
"""Survey good involutions across the catalog: for each quandle, count them
and report, for each resulting symmetric quandle, the inner group order and
the orbit count of the inn-decomposition.

Run: python3 scripts/involution_survey.py [--max-order 8]
"""

import argparse

from sqk import (
    attach_involution,
    conj_symmetric_quandle,
    cyclic_group,
    decompose,
    dihedral_group,
    dihedral_quandle,
    enumerate_good_involutions,
    inner_group,
    quaternion_group,
    symmetric_group,
)
from sqk.perm import cycle_string


def survey(name, Q):
    rhos = enumerate_good_involutions(Q)
    print(f"{name}  (order {Q.order}): {len(rhos)} good involution(s)")
    for rho in rhos:
        S = attach_involution(Q, rho)
        d = decompose(S, "inn")
        print(f"    rho = {cycle_string(rho):<16} |Inn| = {inner_group(S).order:<3} "
              f"orbits = {d.presentation.orbit_count:<2} "
              f"verified = {d.verification.ok}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=8)
    args = ap.parse_args()

    for n in range(1, args.max_order + 1):
        survey(f"R_{n}", dihedral_quandle(n))
    groups = [("Z3", cyclic_group(3)), ("Z4", cyclic_group(4)),
              ("S3", symmetric_group(3)), ("D4", dihedral_group(4)),
              ("Q8", quaternion_group())]
    for gname, G in groups:
        if G.order <= args.max_order:
            survey(f"Conj({gname})", conj_symmetric_quandle(G).quandle)


if __name__ == "__main__":
    main()
