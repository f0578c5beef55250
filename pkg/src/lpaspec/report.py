"""JSON spectrum reports: plain dicts of str/int/bool/list, serialized canonically."""
from __future__ import annotations

import json

from . import __version__
from .fields import Field
from .graph import MAX_CYCLES, DirectedGraph, enumerate_cycles, satisfies_condition_L
from .ideals import MAX_VERTICES
from .laurent import render_laurent
from .spectrum import (LAURENT_LINE, compute_spectrum, instantiate_nongraded, is_primitive,
                       prime_flags)

SCHEMA_VERSION = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True, allow_nan=False) + "\n"


def _cycle(c) -> dict:
    return {"edges": list(c.edges), "base": c.base}


def spectrum_report(g: DirectedGraph, field: Field, *, max_vertices: int = MAX_VERTICES,
                    max_cycles: int = MAX_CYCLES, instantiate_degree: int = 0,
                    generators=()) -> dict:
    spec = compute_spectrum(g, field, max_vertices, max_cycles)
    strata = []
    for s in spec.strata:
        P = s.graded
        entry = {
            "tail": list(s.tail.vertices),
            "class": s.tail.kind,
            "shape": s.shape,
            "graded_prime": {"name": P.name, "H": list(P.hs.vertices), "flags": spec.flags[P.name]},
            "family": None,
        }
        if s.shape == LAURENT_LINE:
            entry["family"] = {
                "name": "F" + P.name[1:],
                "marker": s.family,
                "cycle": _cycle(s.tail.cycle),
                "flags": spec.family_flags[P.name],
            }
        strata.append(entry)

    instances = []
    for Q in instantiate_nongraded(spec, instantiate_degree or None, generators):
        instances.append({
            "name": Q.name,
            "H": list(Q.hs.vertices),
            "cycle": _cycle(Q.tail.cycle),
            "generator": render_laurent(Q.generator),
            "flags": prime_flags(Q, spec),
        })

    flag_sets = [e["graded_prime"]["flags"] for e in strata]
    flag_sets += [e["family"]["flags"] for e in strata if e["family"]]
    flag_sets += [q["flags"] for q in instances]
    agree = all(f["primitive"] == f["locally_closed"] == f["rational"] for f in flag_sets)

    tau = [e for e in strata if e["shape"] == LAURENT_LINE]
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "lpaspec", "version": __version__},
        "graph": {
            "vertices": list(g.vertices),
            "edges": [{"name": e.name, "source": e.source, "range": e.range} for e in g.edges],
        },
        "field": field.descriptor(),
        "bounds": {"max_vertices": max_vertices, "max_cycles": max_cycles,
                   "instantiate_degree": instantiate_degree},
        "cycles": [_cycle(c) for c in enumerate_cycles(g, max_cycles)],
        "condition_L": satisfies_condition_L(g),
        "hereditary_saturated_sets": [list(H.vertices) for H in spec.hereditary_saturated],
        "maximal_tails": [
            {"vertices": list(s.tail.vertices), "class": s.tail.kind,
             "cycle": _cycle(s.tail.cycle) if s.tail.cycle else None}
            for s in spec.strata
        ],
        "strata": strata,
        "poset": {
            "graded_edges": [list(e) for e in spec.graded_covers],
            "family_edges": [[e["graded_prime"]["name"], e["family"]["name"]] for e in tau],
        },
        "tau_generators_note": (
            "each LaurentLine stratum carries one non-graded prime per irreducible f in "
            "K[x,x^-1] up to units, generated by the graded prime and f evaluated at the cycle"
            if tau else None),
        "instantiated_primes": instances,
        "summary": {
            "hereditary_saturated_sets": len(spec.hereditary_saturated),
            "maximal_tails": len(spec.strata),
            "points": len(strata) - len(tau),
            "laurent_lines": len(tau),
            "primitive_graded": sum(1 for s in spec.strata if is_primitive(s.graded)),
            "dixmier_moeglin_agree": agree,
        },
    }
