"""Report assembly and serialization.

Reports are deterministic: given the same recipe, seed, caps and version the
serialized bytes are identical across runs.  Wall-clock timings are therefore
null unless explicitly requested.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .gradings import grading_flags, support_degree_map, verify_degree_map
from .ideals import (DEFAULT_ELEMENT_CAP, DEFAULT_SEED, center,
                     enumerate_subring_ideals, is_A_invariant, is_simple)
from .rings import Element, Ring

VERSION = "0.1.0"


def element_json(e: Element):
    if e.ring.is_table:
        return int(e.data)
    if e.ring.modulus is not None:
        return [int(x) for x in e.data]
    return [str(Fraction(x)) for x in e.data]


def ideal_json(ib):
    return {"spanning": [element_json(e) for e in ib.spanning()],
            "measure": ib.measure()}


def simplicity_json(verdict):
    if verdict.status == "Simple":
        return "Simple"
    if verdict.status == "NotSimple":
        return {"NotSimple": {"witness": ideal_json(verdict.witness)
                              if verdict.witness else None,
                              "reason": verdict.reason}}
    return {"Inconclusive": verdict.reason}


@dataclass
class Report:
    recipe_digest: str
    seed: int
    caps: dict
    results: dict = dfield(default_factory=dict)
    certificates: list = dfield(default_factory=list)
    timings_ms: dict | None = None
    version: str = VERSION

    def to_json(self):
        return {
            "version": self.version,
            "recipe_digest": self.recipe_digest,
            "results": self.results,
            "certificates": self.certificates,
            "seed": self.seed,
            "caps": self.caps,
            "timings_ms": self.timings_ms,
        }

    def serialize(self, fmt="json"):
        doc = self.to_json()
        if fmt == "json":
            return json.dumps(doc, sort_keys=True, indent=2) + "\n"
        lines = [f"ringlab report (version {self.version})",
                 f"recipe: {self.recipe_digest}",
                 f"seed: {self.seed}  caps: {self.caps}"]
        for name, value in sorted(self.results.items()):
            lines.append(f"  {name}: {json.dumps(value, sort_keys=True)}")
        for cert in self.certificates:
            lines.append(f"  certificate[{cert['instance']}] {cert['pipeline']}: "
                         f"verdict={cert['verdict']} oracle={cert['oracle']}")
            for p in cert["premises"]:
                lines.append(f"    [{p['status']}] {p['name']}")
        if self.timings_ms is not None:
            lines.append(f"timings_ms: {json.dumps(self.timings_ms, sort_keys=True)}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# named checks
# ---------------------------------------------------------------------------

def run_checks(built, names, cap=DEFAULT_ELEMENT_CAP, seed=DEFAULT_SEED):
    """Run the named predicates on a built object; returns a results dict."""
    ring = built if isinstance(built, Ring) else getattr(built, "ring", None)
    grading = getattr(built, "grading", None)
    results = {}
    for name in names:
        if name == "simplicity":
            if ring is None:
                results[name] = {"error": "no ring to check"}
                continue
            results[name] = simplicity_json(is_simple(ring, cap=cap, seed=seed))
        elif name == "center":
            if ring is None:
                results[name] = {"error": "no ring to check"}
                continue
            z = center(ring)
            results[name] = {"measure": z.measure(),
                             "kind": "dimension" if ring.is_algebra else "size"}
        elif name == "grading":
            if grading is None:
                results[name] = {"error": "instance carries no grading"}
                continue
            f = grading_flags(grading)
            results[name] = {"locally_unital": f.locally_unital,
                             "strongly_graded": f.strongly_graded,
                             "left_nondegenerate": f.left_nondegenerate,
                             "right_nondegenerate": f.right_nondegenerate}
        elif name == "invariance":
            if grading is None or not hasattr(built, "system"):
                results[name] = {"error": "invariance needs a crossed product"}
                continue
            from .constructions.crossed import is_G_invariant
            B = built.base_subring()
            rows = []
            agree = True
            for I in enumerate_subring_ideals(ring, B, cap=cap):
                g_inv = is_G_invariant(built, I)
                a_inv = is_A_invariant(ring, B, I)
                agree = agree and (g_inv == a_inv)
                rows.append({"ideal": ideal_json(I), "action_invariant": g_inv,
                             "ring_invariant": a_inv})
            results[name] = {"ideals": rows, "equivalence_holds": agree}
        elif name == "degree-map":
            if grading is None:
                results[name] = {"error": "degree map check needs a grading"}
                continue
            dm = support_degree_map(grading, "center_of_A0")
            verdict = verify_degree_map(dm, cap=cap)
            results[name] = {"status": verdict.status,
                             "witness": repr(verdict.witness) if verdict.witness else None}
        else:
            results[name] = {"error": f"unknown check {name!r}"}
    return results


def build_summary(built, cap=DEFAULT_ELEMENT_CAP):
    ring = built if isinstance(built, Ring) else getattr(built, "ring", None)
    if ring is None and hasattr(built, "rings"):       # a tower
        return {"kind": "cayley_tower",
                "dimensions": [r.dim for r in built.rings],
                "notes": list(getattr(built, "notes", ()))}
    if ring is None and hasattr(built, "base"):        # ore data
        props = built.base.probe_properties()
        return {"kind": "ore_extension",
                "base_size": props.size,
                "base_associative": props.associative,
                "base_unital": props.unital}
    props = ring.probe_properties()
    out = {"kind": getattr(built, "kind_tag", "ring"),
           "size": props.size,
           "associative": props.associative,
           "commutative": props.commutative,
           "unital": props.unital}
    if ring.is_algebra:
        out["dimension"] = ring.dim
        out["field"] = ring.field.name
    if getattr(built, "notes", ()):
        out["notes"] = list(built.notes)
    flags = getattr(built, "minimal", None)
    if flags is not None:
        out["minimal"] = built.minimal
        out["faithful"] = built.faithful
    return out


def table_dump(built, force=False, threshold=64):
    ring = built if isinstance(built, Ring) else getattr(built, "ring", None)
    if ring is None:
        return {"error": "no ring to dump"}
    size = ring.size()
    if ring.is_table:
        if size > threshold and not force:
            return {"error": f"table of {size} elements exceeds the dump "
                             f"threshold {threshold}; pass --force to override"}
        return {"add": ring.add_table.tolist(), "mul": ring.mul_table.tolist(),
                "zero": ring.zero_index}
    if ring.dim > threshold and not force:
        return {"error": f"{ring.dim} basis elements exceed the dump threshold "
                         f"{threshold}; pass --force to override"}
    basis = ring.spanning_elements()
    return {"basis_products": [[element_json(a * b) for b in basis] for a in basis]}
