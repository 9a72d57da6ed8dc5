"""Declarative construction recipes (JSON).

A recipe is a tree with a "kind" discriminator; child recipes describe base
rings.  Scalars that must be exact travel as strings ("p/q"); scalar domains
are "Q", "Fp:<prime>", "Zn:<n>", and "F<q>" for small prime powers q.
Cocycles are explicit tables or "bales:<n>"; actions are permutation arrays.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .categories import abelian_group, cyclic_group, pair_groupoid, xor_group
from .constructions import (RingMap, bales_alpha, cayley_dickson,
                            cayley_tower, dynamics_skew_group_ring,
                            matrix_ring, skew_group_ring, twisted_group_ring)
from .errors import ParseError, SchemaError, UnknownKind
from .ore import SigmaDerivationData
from .rings import (field_algebra, gf_extension, make_structure_algebra,
                    make_table_ring, zmod_ring)
from .scalars import GF, QQ, IntegersMod

KNOWN_KINDS = ("scalar", "table_ring", "structure_algebra", "cayley_dickson",
               "cayley_tower", "twisted_group_ring", "skew_group_ring",
               "crossed_product", "matrix_ring", "ore_extension", "dynamics")


@dataclass
class Recipe:
    kind: str
    doc: dict
    digest: str


def parse_recipe(path) -> Recipe:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    return parse_recipe_text(text)


def parse_recipe_text(text: str) -> Recipe:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, col=exc.colno)
    _validate_node(doc, "")
    digest = hashlib.sha256(
        json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()).hexdigest()
    return Recipe(doc["kind"], doc, digest)


def _require(doc, key, path):
    if key not in doc:
        raise SchemaError(f"{path}/{key}", "missing required field")
    return doc[key]


def _validate_node(doc, path):
    if not isinstance(doc, dict):
        raise SchemaError(path or "/", "recipe node must be an object")
    kind = _require(doc, "kind", path)
    if kind not in KNOWN_KINDS:
        raise UnknownKind(f"{path}/kind: unknown kind {kind!r}")
    needs = {
        "scalar": ("ring",),
        "table_ring": ("add", "mul"),
        "structure_algebra": ("field", "dim", "constants"),
        "cayley_dickson": ("base",),
        "cayley_tower": ("base", "levels"),
        "twisted_group_ring": ("base", "group", "alpha"),
        "skew_group_ring": ("base", "group", "action"),
        "crossed_product": ("base", "group", "sigma"),
        "matrix_ring": ("size", "base"),
        "ore_extension": ("base", "sigma", "delta"),
        "dynamics": ("points", "group", "action", "field"),
    }[kind]
    for key in needs:
        _require(doc, key, path)
    for key in ("base",):
        if key in doc and isinstance(doc[key], dict):
            _validate_node(doc[key], f"{path}/{key}")


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------

def _parse_domain(spec, path):
    if spec == "Q":
        return QQ
    if isinstance(spec, str) and spec.startswith("Fp:"):
        return GF(int(spec[3:]))
    if isinstance(spec, str) and spec.startswith("Zn:"):
        return IntegersMod(int(spec[3:]))
    raise SchemaError(path, f"unknown scalar domain {spec!r}")


def _build_scalar_ring(spec, path):
    """"Q", "Fp:p", "Zn:n" or "F<q>" as a ring."""
    if spec == "Q":
        return field_algebra(QQ)
    if isinstance(spec, str) and spec.startswith("Fp:"):
        return field_algebra(GF(int(spec[3:])))
    if isinstance(spec, str) and spec.startswith("Zn:"):
        return zmod_ring(int(spec[3:]))
    if isinstance(spec, str) and spec.startswith("F") and spec[1:].isdigit():
        alg, _ = gf_extension(int(spec[1:]))
        return alg
    raise SchemaError(path, f"unknown scalar ring {spec!r}")


def _parse_group(spec, path):
    if isinstance(spec, str):
        if spec.startswith("Z") and spec[1:].isdigit():
            return cyclic_group(int(spec[1:]))
        if spec.startswith("xor:"):
            return xor_group(int(spec[4:]))
        if spec == "Z2xZ2":
            return abelian_group((2, 2))
        if spec.startswith("pair:"):
            return pair_groupoid(int(spec[5:]))
    raise SchemaError(path, f"unknown group spec {spec!r}")


def _coerce_scalar(dom, value, path):
    try:
        if dom is QQ or getattr(dom, "name", "") == "Q":
            return Fraction(value) if not isinstance(value, str) else Fraction(value)
        return dom.coerce(int(value))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(path, f"bad scalar {value!r}: {exc}")


def _ring_map(ring, spec, path, frobenius=None):
    if spec == "id":
        return RingMap.identity(ring)
    if spec == "frobenius":
        if frobenius is None:
            raise SchemaError(path, "frobenius is only available on F_q bases")
        return RingMap(ring, ring, matrix=frobenius)
    if isinstance(spec, dict) and "matrix" in spec:
        rows = [[_coerce_scalar(ring.field, x, path) for x in row]
                for row in spec["matrix"]]
        return RingMap(ring, ring, matrix=rows, anti=bool(spec.get("anti", False)))
    if isinstance(spec, dict) and "perm" in spec:
        return RingMap(ring, ring, perm=spec["perm"], anti=bool(spec.get("anti", False)))
    raise SchemaError(path, f"unknown map spec {spec!r}")


def build_recipe(recipe: Recipe):
    """Construct the object a recipe describes."""
    return _build(recipe.doc, "")


def _build(doc, path):
    kind = doc["kind"]
    if kind == "scalar":
        return _build_scalar_ring(doc["ring"], f"{path}/ring")
    if kind == "table_ring":
        return make_table_ring(np.array(doc["add"]), np.array(doc["mul"]),
                               doc.get("zero", 0))
    if kind == "structure_algebra":
        dom = _parse_domain(doc["field"], f"{path}/field")
        d = int(doc["dim"])
        C = [[[_coerce_scalar(dom, x, f"{path}/constants") for x in vec]
              for vec in plane] for plane in doc["constants"]]
        return make_structure_algebra(d, dom, C)
    if kind == "cayley_tower":
        dom = _parse_domain(doc["base"], f"{path}/base") if isinstance(doc["base"], str) \
            else _parse_domain(doc["base"].get("ring", "Q"), f"{path}/base")
        levels = int(doc["levels"])
        alphas = doc.get("alpha")
        return cayley_tower(dom, levels, alphas=alphas)
    if kind == "cayley_dickson":
        base = _child_ring(doc["base"], f"{path}/base")
        sigma = _ring_map(base, doc.get("sigma", "id"), f"{path}/sigma")
        if doc.get("sigma") == "conjugation" or "sigma" not in doc:
            sigma = RingMap.identity(base)
            sigma.anti = True
        unit = base.probe_properties().unit
        aspec = doc.get("alpha", -1)
        if isinstance(aspec, list):
            alpha = base.element([_coerce_scalar(base.field, x, f"{path}/alpha")
                                  for x in aspec])
        else:
            alpha = base.scalar_mul(_coerce_scalar(base.field, aspec, f"{path}/alpha"),
                                    unit)
        return cayley_dickson(base, sigma, alpha, flavor=doc.get("flavor", "classical"))
    if kind == "twisted_group_ring":
        base = _child_ring(doc["base"], f"{path}/base")
        group = _parse_group(doc["group"], f"{path}/group")
        aspec = doc["alpha"]
        if isinstance(aspec, str) and aspec.startswith("bales:"):
            return twisted_group_ring(base, group, lambda g, h: bales_alpha(g, h))
        table = {}
        mors = list(group.morphisms)
        for i, g in enumerate(mors):
            for j, h in enumerate(mors):
                table[(g, h)] = _coerce_scalar(base.field, aspec[i][j],
                                               f"{path}/alpha")
        return twisted_group_ring(base, group, lambda g, h: table[(g, h)])
    if kind == "skew_group_ring":
        base = _child_ring(doc["base"], f"{path}/base")
        group = _parse_group(doc["group"], f"{path}/group")
        frob = None
        if isinstance(doc["base"], dict) and str(doc["base"].get("ring", "")).startswith("F"):
            spec = doc["base"]["ring"]
            if spec[1:].isdigit():
                _, frob = gf_extension(int(spec[1:]))
        aspec = doc["action"]
        maps = {}
        if aspec == "frobenius":
            if frob is None:
                raise SchemaError(f"{path}/action", "frobenius needs an F_q base")
            gen = RingMap(base, base, matrix=frob)
            e = group.identity[group.objects[0]]
            maps[e] = RingMap.identity(base)
            cur = RingMap.identity(base)
            order = [g for g in group.morphisms]
            for g in order:
                if g == e:
                    continue
                # cyclic convention: morphism k acts by frobenius^k
                mk = RingMap.identity(base)
                for _ in range(int(g)):
                    mk = gen.compose(mk)
                maps[g] = mk
        else:
            mors = list(group.morphisms)
            for i, g in enumerate(mors):
                maps[g] = _ring_map(base, aspec[i], f"{path}/action")
        return skew_group_ring(base, group, maps)
    if kind == "crossed_product":
        # group crossed product with explicit sigma/alpha/twists
        from .constructions.crossed import CrossedSystem, crossed_product
        base = _child_ring(doc["base"], f"{path}/base")
        group = _parse_group(doc["group"], f"{path}/group")
        mors = list(group.morphisms)
        sigma = {g: _ring_map(base, doc["sigma"][i], f"{path}/sigma")
                 for i, g in enumerate(mors)}
        alpha = {}
        if "alpha" in doc:
            for i, g in enumerate(mors):
                for j, h in enumerate(mors):
                    alpha[(g, h)] = base.scalar_mul(
                        _coerce_scalar(base.field, doc["alpha"][i][j], f"{path}/alpha"),
                        base.probe_properties().unit)
        twists = {}
        if "twists" in doc:
            for i, g in enumerate(mors):
                for j, h in enumerate(mors):
                    twists[(g, h)] = doc["twists"][i][j]
        obj = group.objects[0]
        sys = CrossedSystem(group, {obj: base}, sigma, alpha=alpha, twists=twists)
        return crossed_product(sys)
    if kind == "matrix_ring":
        base = _child_ring(doc["base"], f"{path}/base")
        n = int(doc["size"])
        alphas = None
        if "alphas" in doc:
            alphas = {}
            unit = base.probe_properties().unit
            for key, val in doc["alphas"].items():
                i, j, k = (int(x) for x in key.split(","))
                alphas[(i, j, k)] = base.scalar_mul(
                    _coerce_scalar(base.field, val, f"{path}/alphas"), unit)
        return matrix_ring(n, base, alphas=alphas)
    if kind == "ore_extension":
        base = _child_ring(doc["base"], f"{path}/base")
        frob = None
        if isinstance(doc["base"], dict) and str(doc["base"].get("ring", "")).startswith("F"):
            spec = doc["base"]["ring"]
            if spec[1:].isdigit():
                _, frob = gf_extension(int(spec[1:]))
        sigma = _ring_map(base, doc["sigma"], f"{path}/sigma", frobenius=frob)
        dspec = doc["delta"]
        if dspec == "zero":
            if base.is_algebra:
                zero = np.zeros((base.dim, base.dim), dtype=np.int64) if base.modulus \
                    else [[Fraction(0)] * base.dim for _ in range(base.dim)]
                delta = RingMap(base, base, matrix=zero)
            else:
                delta = RingMap(base, base, perm=[base.zero_index] * base.n)
        else:
            delta = _ring_map(base, dspec, f"{path}/delta")
        return SigmaDerivationData(base, sigma, delta)
    if kind == "dynamics":
        group = _parse_group(doc["group"], f"{path}/group")
        dom = _parse_domain(doc["field"], f"{path}/field")
        mors = list(group.morphisms)
        action = {g: tuple(doc["action"][i]) for i, g in enumerate(mors)}
        return dynamics_skew_group_ring(int(doc["points"]), group, action, dom)
    raise UnknownKind(kind)


def _child_ring(spec, path):
    if isinstance(spec, str):
        return _build_scalar_ring(spec, path)
    if isinstance(spec, dict):
        built = _build(spec, path)
        from .rings import Ring
        if not isinstance(built, Ring):
            built = getattr(built, "ring", built)
        return built
    raise SchemaError(path, "base must be a scalar spec or a recipe object")
