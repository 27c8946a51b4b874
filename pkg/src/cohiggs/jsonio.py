"""JSON encoding/decoding for every CLI-facing value.

All rational numbers travel as {"num": int, "den": int} pairs; no floats
anywhere.  Polynomials serialize their monomials in descending graded-lex
order, which makes output byte-deterministic.  Decoders raise ValueError on
malformed payloads; the CLI maps that to exit code 2.
"""

from __future__ import annotations

from fractions import Fraction

from .cohomology import LineBundle
from .exactalg import BiPoly, PolyMat2
from .extension import (
    ExtParams,
    ModuliPoint,
    Phi1Params,
    Phi2Params,
    Stratum,
    TrivialFieldData,
)
from .higgs import DecomposableBundle, HiggsField
from .spectral import EtaValue, Fibre, SpectralData


def rat_to_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rat_from_json(obj) -> Fraction:
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and "num" in obj and "den" in obj:
        if not isinstance(obj["num"], int) or not isinstance(obj["den"], int):
            raise ValueError("rational parts must be integers")
        return Fraction(obj["num"], obj["den"])
    raise ValueError(f"not a rational: {obj!r}")


def bipoly_to_json(p: BiPoly) -> dict:
    return {
        "monomials": [
            {"i": i, "j": j, "num": c.numerator, "den": c.denominator}
            for i, j, c in p.terms()
        ]
    }


def bipoly_from_json(obj) -> BiPoly:
    if not isinstance(obj, dict) or "monomials" not in obj:
        raise ValueError("polynomial payload needs a 'monomials' list")
    terms = {}
    for m in obj["monomials"]:
        i, j = m["i"], m["j"]
        c = Fraction(m["num"], m.get("den", 1))
        terms[(i, j)] = terms.get((i, j), Fraction(0)) + c
    return BiPoly(terms)


def mat_to_json(m: PolyMat2) -> dict:
    m = m.to_bipoly()
    return {"m": [[bipoly_to_json(m.entry(i, j)) for j in range(2)] for i in range(2)]}


def mat_from_json(obj) -> PolyMat2:
    if not isinstance(obj, dict) or "m" not in obj:
        raise ValueError("matrix payload needs an 'm' 2x2 array")
    rows = obj["m"]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("matrix payload must be 2x2")
    return PolyMat2([[bipoly_from_json(x) for x in row] for row in rows])


def field_to_json(f: HiggsField) -> dict:
    return {
        "bundle": {
            "L1": [f.bundle.L1.a, f.bundle.L1.b],
            "L2": [f.bundle.L2.a, f.bundle.L2.b],
        },
        "phi1": mat_to_json(f.phi1),
        "phi2": mat_to_json(f.phi2),
    }


def field_from_json(obj) -> HiggsField:
    try:
        l1 = LineBundle(int(obj["bundle"]["L1"][0]), int(obj["bundle"]["L1"][1]))
        l2 = LineBundle(int(obj["bundle"]["L2"][0]), int(obj["bundle"]["L2"][1]))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"bad bundle payload: {exc}") from exc
    return HiggsField(
        DecomposableBundle(l1, l2),
        mat_from_json(obj["phi1"]),
        mat_from_json(obj["phi2"]),
    )


def spectral_to_json(s: SpectralData) -> dict:
    return {
        "rho1": bipoly_to_json(s.rho1),
        "rho12": bipoly_to_json(s.rho12),
        "rho2": bipoly_to_json(s.rho2),
    }


def spectral_from_json(obj) -> SpectralData:
    try:
        return SpectralData(
            bipoly_from_json(obj["rho1"]),
            bipoly_from_json(obj["rho12"]),
            bipoly_from_json(obj["rho2"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad spectral payload: {exc}") from exc


def eta_to_json(e: EtaValue) -> dict:
    return {
        "num": e.coef.numerator,
        "den": e.coef.denominator,
        "radicand": e.radicand,
    }


def fibre_to_json(fib: Fibre) -> dict:
    return {
        "z1": rat_to_json(fib.z1),
        "z2": rat_to_json(fib.z2),
        "disc1": rat_to_json(fib.disc1),
        "disc2": rat_to_json(fib.disc2),
        "pairing_rhs": rat_to_json(fib.pairing_rhs),
        "ramified": fib.ramified,
        "points": [
            {"eta1": eta_to_json(p[0]), "eta2": eta_to_json(p[1])}
            for p in fib.points
        ],
    }


def phi1_params_from_json(obj) -> Phi1Params:
    keys = ("c00", "c01", "c02", "c10", "c11", "c12")
    return Phi1Params(**{k: rat_from_json(obj[k]) if k in obj else Fraction(0) for k in keys})


def phi2_params_from_json(obj) -> Phi2Params:
    keys = ("a00", "a01", "a02", "b00", "b10")
    return Phi2Params(**{k: rat_from_json(obj[k]) if k in obj else Fraction(0) for k in keys})


def phi1_params_to_json(p: Phi1Params) -> dict:
    return {k: rat_to_json(getattr(p, k)) for k in ("c00", "c01", "c02", "c10", "c11", "c12")}


def phi2_params_to_json(p: Phi2Params) -> dict:
    return {k: rat_to_json(getattr(p, k)) for k in ("a00", "a01", "a02", "b00", "b10")}


def point_to_json(m: ModuliPoint) -> dict:
    out = {
        "ext": {"u": rat_to_json(m.ext.u), "v": rat_to_json(m.ext.v)},
        "stratum": m.stratum.value,
    }
    if isinstance(m.params, Phi1Params):
        out["params"] = phi1_params_to_json(m.params)
    elif isinstance(m.params, Phi2Params):
        out["params"] = phi2_params_to_json(m.params)
    else:
        out["params"] = {
            "p": rat_to_json(m.params.p),
            "w": [rat_to_json(w) for w in m.params.w],
        }
    return out


def point_from_json(obj) -> ModuliPoint:
    try:
        ext = ExtParams(rat_from_json(obj["ext"]["u"]), rat_from_json(obj["ext"]["v"]))
        stratum = Stratum(obj["stratum"])
        raw = obj["params"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad moduli point payload: {exc}") from exc
    params: object
    if stratum is Stratum.S1:
        params = phi1_params_from_json(raw)
    elif stratum is Stratum.S2:
        params = phi2_params_from_json(raw)
    else:
        w = raw.get("w", [])
        if len(w) != 3:
            raise ValueError("trivial-extension data needs three w coefficients")
        params = TrivialFieldData(
            rat_from_json(raw["p"]), tuple(rat_from_json(x) for x in w)
        )
    return ModuliPoint(ext, stratum, params)
