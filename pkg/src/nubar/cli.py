"""Command-line front end.

Every command prints one JSON object::

    {"command", "inputs_echo", "result", "certificate"?, "oracle"?, "timing_ms"}

Rationals are written as ``"p/q"`` strings.  Exit status is 0 on
success, 1 when a cross-check is falsified (``verify`` with inconsistent
verdicts) and 2 on bad input, with ``{"error": code, "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from . import arcs as arcs_mod
from . import branch as branch_mod
from . import closure as closure_mod
from . import polygon as polygon_mod
from . import polyhedra
from .core import INF, MonomialIdeal, Polynomial, format_rational, normalize, oracle_sequence, parse_rational
from .errors import InputError, NubarError, ParseError

COMMANDS = (
    "nubar", "closure", "frac-closure", "membership", "certificate", "multiplicity", "colength",
    "cone", "type", "gap", "polygon", "branch", "arcs", "loja", "verify",
)  # fmt: skip
DEFAULT_VARS = ("x", "y", "z", "w")

# (low, high) for every integer flag
FLAG_BOUNDS = {
    "max_k": (1, 64),
    "m_max": (1, 64),
    "truncation": (1, 1024),
    "seed": (0, 2**32 - 1),
    "samples": (2, 10000),
    "degree_bound": (0, 12),
    "count": (0, 1000),
    "p": (1, 10**6),
    "q": (1, 10**6),
    "k": (1, 200),
}


# ---------------------------------------------------------------------------
# parsing and serialization


@dataclass(frozen=True)
class IdealInput:
    ideal: MonomialIdeal
    vars: Tuple[str, ...]
    note: Optional[str] = None


@dataclass(frozen=True)
class PolyInput:
    poly: Polynomial
    vars: Tuple[str, ...]


def _load_json(text: str, what: str):
    """Inline JSON when ``text`` starts with ``{``, else a file path."""
    src = text.strip()
    if not src.startswith("{"):
        try:
            src = Path(text).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {what} file {text!r}: {exc.strerror}") from None
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid {what} JSON: {exc.msg}", exc.lineno, exc.colno) from None


def _int_vector(v, where: str) -> Tuple[int, ...]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ParseError(f"{where} must be a list of integers, got {v!r}")
    return tuple(v)


def _vars(obj, n: Optional[int]) -> Tuple[str, ...]:
    names = obj.get("vars")
    if names is None:
        if n is None or n > len(DEFAULT_VARS):
            raise ParseError("\"vars\" is required")
        return DEFAULT_VARS[:n]
    if not isinstance(names, list) or not all(isinstance(s, str) and s for s in names):
        raise ParseError("\"vars\" must be a list of names")
    if len(set(names)) != len(names):
        raise ParseError(f"repeated variable name in {names}")
    return tuple(names)


def ideal_from_json(obj) -> IdealInput:
    if not isinstance(obj, dict) or "generators" not in obj:
        raise ParseError("an ideal is an object with \"vars\" and \"generators\"")
    gens_raw = obj["generators"]
    if not isinstance(gens_raw, list):
        raise ParseError("\"generators\" must be a list")
    gens = [_int_vector(g, "generator") for g in gens_raw]
    names = _vars(obj, len(gens[0]) if gens else None)
    for g in gens:
        if len(g) != len(names):
            raise ParseError(f"generator {list(g)} has {len(g)} entries, expected {len(names)}")
    ideal = normalize(gens)
    note = None
    if len(ideal.generators) != len(gens):
        note = f"{len(gens) - len(ideal.generators)} duplicate or dominated generator(s) removed"
    return IdealInput(ideal, names, note)


def parse_ideal(text: str) -> IdealInput:
    return ideal_from_json(_load_json(text, "ideal"))


def poly_from_json(obj) -> PolyInput:
    if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
        raise ParseError("a polynomial is an object with a \"terms\" list")
    terms = []
    for t in obj["terms"]:
        if not isinstance(t, dict) or "exp" not in t or "coeff" not in t:
            raise ParseError(f"term {t!r} needs \"coeff\" and \"exp\"")
        terms.append((_int_vector(t["exp"], "exponent"), parse_rational(t["coeff"])))
    n = len(terms[0][0]) if terms else None
    names = _vars(obj, n)
    for a, _ in terms:
        if len(a) != len(names):
            raise ParseError(f"exponent {list(a)} has {len(a)} entries, expected {len(names)}")
    if any(x < 0 for a, _ in terms for x in a):
        raise ParseError("exponents must be nonnegative")
    return PolyInput(Polynomial.from_terms(len(names), terms), names)


def parse_poly(text: str) -> PolyInput:
    return poly_from_json(_load_json(text, "polynomial"))


def rat(x) -> str:
    return format_rational(x)


def ideal_to_json(I: MonomialIdeal, names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    names = tuple(names) if names else DEFAULT_VARS[: I.n]
    return {"vars": list(names), "generators": [list(g) for g in I.generators]}


def poly_to_json(f: Polynomial, names: Optional[Sequence[str]] = None) -> Dict[str, Any]:
    names = tuple(names) if names else DEFAULT_VARS[: f.n]
    return {"vars": list(names), "terms": [{"coeff": rat(c), "exp": list(a)} for a, c in f.items]}


def polygon_to_json(P: polygon_mod.NewtonPolygonSum) -> List[Dict[str, Any]]:
    return [{"mult": m, "h": _num(e.height), "l": _num(e.width)} for m, e in P.parts]


def polygon_from_json(parts) -> polygon_mod.NewtonPolygonSum:
    def entry(v):
        return INF if v == "inf" else v

    return polygon_mod.NewtonPolygonSum.of(
        (p["mult"], polygon_mod.ElementaryPolygon(entry(p["l"]), entry(p["h"]))) for p in parts
    )


def _num(v):
    return "inf" if v is INF else v


def pretty_monomial(a: Sequence[int], names: Sequence[str]) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(names, a) if k]
    return "*".join(parts) or "1"


def pretty_ideal(I: MonomialIdeal, names: Sequence[str]) -> str:
    return "(" + ", ".join(pretty_monomial(g, names) for g in I.generators) + ")"


def _jsonable(x):
    if x is INF or isinstance(x, Fraction):
        return rat(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float):
        return round(x, 12)
    return x


# ---------------------------------------------------------------------------
# jobs


@dataclass
class JobSpec:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    flags: Dict[str, Any] = field(default_factory=dict)


def _require(job: JobSpec, *names):
    for name in names:
        if job.inputs.get(name) is None:
            flag = {"ideal": "-I", "poly": "-f", "Js": "-J", "beta": "--beta"}.get(name, f"-{name}")
            raise InputError(f"{job.command} needs {flag}")


def _cert_json(fv) -> Dict[str, Any]:
    out = {"normal": list(fv.normal), "level": fv.level}
    if fv.lattice_degree is not None:
        out["lattice_degree"] = fv.lattice_degree
    return out


def _nubar(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    res = polyhedra.nubar(f, I)
    out = {
        "result": rat(res.value),
        "certificate": {**_cert_json(res.certificate), "witness_term": list(res.witness_term)},
    }
    if job.flags["oracle"]:
        us = oracle_sequence(f, I, job.flags["max_k"])
        out["oracle"] = {
            "u_k": [rat(u) for u in us],
            "max": rat(max(us)),
            "consistent": all(u <= res.value for u in us),
        }
    return out, 0


def _ideal_result(J: MonomialIdeal, names):
    return {"generators": [list(g) for g in J.generators], "pretty": pretty_ideal(J, names)}


def _closure(job):
    _require(job, "ideal")
    inp = job.inputs["ideal"]
    return {"result": _ideal_result(polyhedra.closure(inp.ideal), inp.vars)}, 0


def _frac_closure(job):
    _require(job, "ideal", "p", "q")
    inp = job.inputs["ideal"]
    J = polyhedra.fractional_closure(inp.ideal, job.inputs["p"], job.inputs["q"])
    return {"result": _ideal_result(J, inp.vars)}, 0


def _membership(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    p, q = job.inputs.get("p") or 1, job.inputs.get("q") or 1
    res = polyhedra.nubar(f, I)
    return {
        "result": closure_mod.is_integral(f, I, p, q),
        "certificate": {**_cert_json(res.certificate), "nubar": rat(res.value), "threshold": rat(Fraction(p, q))},
    }, 0


def _certificate(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    p, q = job.inputs.get("p") or 1, job.inputs.get("q") or 1
    cert = closure_mod.dependence_certificate(f, I, p, q, job.flags["m_max"])
    return {
        "result": {"m": cert.m, "verified": cert.verify()},
        "certificate": {
            "multiplicities": list(cert.multiplicities),
            "generators": [list(g) for g in I.generators],
            "relation": cert.relation_note,
        },
    }, 0


def _multiplicity(job):
    _require(job, "ideal")
    return {"result": polyhedra.multiplicity(job.inputs["ideal"].ideal)}, 0


def _colength(job):
    _require(job, "ideal", "k")
    return {"result": polyhedra.colength_closure(job.inputs["ideal"].ideal, job.inputs["k"])}, 0


def _cone(job):
    _require(job, "ideal", "Js")
    Js = [j.ideal for j in job.inputs["Js"]]
    halfspaces = polyhedra.asymptotic_cone(Js, job.inputs["ideal"].ideal)
    return {"result": [[rat(c) for c in h.coeffs] for h in halfspaces]}, 0


def _type(job):
    _require(job, "ideal")
    rep = closure_mod.type_report(job.inputs["ideal"].ideal)
    ok = all(rep.inclusions.values())
    out = {"result": rat(rep.value), "certificate": {"inclusions": {str(m): v for m, v in rep.inclusions.items()}}}
    return out, 0 if ok else 1


def _gap(job):
    _require(job, "ideal")
    scan = closure_mod.izumi_gap_scan(job.inputs["ideal"].ideal, job.flags["degree_bound"])
    return {
        "result": {
            "observed_gap": rat(scan.observed_gap),
            "argmax": list(scan.argmax),
            "by_degree": [rat(g) for g in scan.by_degree],
            "stabilized": scan.stabilized,
            "note": "empirical maximum over the scanned degrees, not a proved bound",
        }
    }, 0


def _polygon_payload(P):
    try:
        slope = rat(polygon_mod.last_side_slope(P))
    except InputError:
        slope = None
    h, v = polygon_mod.projections(P)
    return {
        "parts": polygon_to_json(P),
        "vertices": [list(p) for p in polygon_mod.vertices(P)],
        "last_side_slope": slope,
        "projections": {"horizontal": _num(h), "vertical": _num(v)},
    }


def _polygon(job):
    if job.inputs.get("beta") is not None:
        P = branch_mod.double_point_polygon(job.inputs["beta"])
    else:
        _require(job, "ideal", "poly")
        P = polygon_mod.toric_polygon(job.inputs["ideal"].ideal, job.inputs["poly"].poly)
    return {"result": _polygon_payload(P)}, 0


def _branch(job):
    _require(job, "beta")
    c = job.inputs["beta"]
    inv = branch_mod.invariants(c)
    out = {
        "e": list(inv.e),
        "semigroup_generators": list(inv.semigroup_generators),
        "delta": inv.delta,
        "conductor": inv.conductor,
        "two_delta_formula": inv.two_delta_formula,
        "gaps": inv.gaps,
    }
    if not c.smooth:
        P = branch_mod.double_point_polygon(c)
        out["polygon"] = polygon_to_json(P)
        out["last_side_slope"] = rat(polygon_mod.last_side_slope(P))
    k = job.inputs.get("k") or 1
    cp = branch_mod.closure_power_of_m(c, k)
    out["closure_power"] = {"k": k, "threshold": cp.threshold, "members": list(cp.members)}
    gd = branch_mod.graded_degrees(c)
    out["graded_degrees"] = [rat(d) for d in gd.degrees]
    out["generator_degrees"] = [rat(d) for d in gd.generator_degrees]
    return {"result": out}, 0


def _arcs(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    arcs = arcs_mod.random_arcs_for(f, I, job.flags["count"], job.flags["seed"], job.flags["truncation"])
    rep = arcs_mod.arc_infimum_check(f, I, arcs)
    w = polyhedra.nubar(f, I).certificate.normal
    c = arcs_mod.generic_coefficients(f, w)
    return {
        "result": {
            "nubar": rat(rep.nubar),
            "min_ratio": rat(rep.min_ratio) if rep.min_ratio is not None else None,
            "attained": rep.attained,
            "lower_bound_ok": rep.lower_bound_ok,
            "arcs": len(rep.ratios) + rep.indeterminate,
            "indeterminate": rep.indeterminate,
        },
        "certificate": {"weights": list(w), "coefficients": [rat(x) for x in c]},
    }, 0 if rep.ok else 1


def _loja(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    rep = closure_mod.lojasiewicz(f, I, job.flags["samples"], job.flags["seed"])
    return {
        "result": {
            "theta": rat(rep.theta),
            "verdict": rep.verdict,
            "slope": rep.slope,
            "slope_ok": rep.slope_ok,
            "samples_ok": rep.samples_ok,
        },
        "certificate": {
            "weights": list(rep.weights),
            "coefficients": [rat(c) for c in rep.coefficients],
            "f_exponent": rep.f_exponent,
            "g_exponent": rep.g_exponent,
        },
    }, 0


def _verify(job):
    _require(job, "ideal", "poly")
    I, f = job.inputs["ideal"].ideal, job.inputs["poly"].poly
    p, q = job.inputs.get("p") or 1, job.inputs.get("q") or 1
    rep = closure_mod.verify_equivalences(
        f, I, p, q, samples=job.flags["samples"], seed=job.flags["seed"], m_max=job.flags["m_max"]
    )
    result = {
        "verdicts": rep.verdicts,
        "consistent": rep.consistent,
        "verdict": rep.verdict if rep.consistent else None,
        "nubar": rat(rep.nubar),
    }
    details = rep.details
    cert = {
        "facet_witness": list(rep.facet_witness),
        "lp_value": rat(details["lp_value"]),
        "arc_ratios": [{"normal": list(w), "ratio": rat(r)} for w, r in sorted(details["arc_ratios"].items())],
        "certificate_m": details["certificate_m"],
        "numeric": _jsonable(details["numeric"]),
    }
    return {"result": result, "certificate": cert}, 0 if rep.consistent else 1


HANDLERS = {
    "nubar": _nubar,
    "closure": _closure,
    "frac-closure": _frac_closure,
    "membership": _membership,
    "certificate": _certificate,
    "multiplicity": _multiplicity,
    "colength": _colength,
    "cone": _cone,
    "type": _type,
    "gap": _gap,
    "polygon": _polygon,
    "branch": _branch,
    "arcs": _arcs,
    "loja": _loja,
    "verify": _verify,
}


def _echo(job: JobSpec) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    inp = job.inputs
    if inp.get("ideal") is not None:
        out["ideal"] = ideal_to_json(inp["ideal"].ideal, inp["ideal"].vars)
        out["ideal_pretty"] = pretty_ideal(inp["ideal"].ideal, inp["ideal"].vars)
        if inp["ideal"].note:
            out["note"] = inp["ideal"].note
    if inp.get("poly") is not None:
        out["poly"] = poly_to_json(inp["poly"].poly, inp["poly"].vars)
    if inp.get("Js") is not None:
        out["Js"] = [ideal_to_json(j.ideal, j.vars) for j in inp["Js"]]
    if inp.get("beta") is not None:
        out["beta"] = list(inp["beta"].beta)
    for key in ("p", "q", "k"):
        if inp.get(key) is not None:
            out[key] = inp[key]
    out["flags"] = dict(job.flags)
    return out


def run(job: JobSpec) -> Tuple[Dict[str, Any], int]:
    """Execute ``job``; returns the JSON payload and the exit code."""
    start = time.perf_counter()
    try:
        body, code = HANDLERS[job.command](job)
    except InputError as exc:
        return {"error": exc.code, "message": str(exc)}, 2
    except NubarError as exc:
        # not_found asks the caller for a larger bound; falsified checks are exit 1
        return {"error": exc.code, "message": str(exc)}, 2 if exc.code == "not_found" else 1
    payload = {"command": job.command, "inputs_echo": _echo(job)}
    payload.update(body)
    payload["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return payload, code


# ---------------------------------------------------------------------------
# argument handling


def _default_seed() -> int:
    env = os.environ.get("NUBAR_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"NUBAR_SEED must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nubar",
        description="Exact asymptotic orders, integral closures and related invariants of monomial ideals.",
        epilog=(
            "Ideals: {\"vars\": [...], \"generators\": [[...], ...]}; polynomials: "
            "{\"terms\": [{\"coeff\": \"p/q\", \"exp\": [...]}, ...]}, inline or as a file path. "
            "--oracle expands f^k for k <= --max-k, which is the only slow path."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("-I", dest="ideal", help="ideal JSON (inline or file)")
        sp.add_argument("-f", dest="poly", help="polynomial JSON (inline or file)")
        sp.add_argument("-J", dest="Js", action="append", help="ideal JSON, repeatable (cone)")
        sp.add_argument("-p", type=int)
        sp.add_argument("-q", type=int)
        sp.add_argument("-k", type=int)
        sp.add_argument("--beta", help="characteristic sequence, e.g. 4,6,7")
        sp.add_argument("--oracle", action="store_true", help="also compute nu(f^k)/k for k <= --max-k")
        sp.add_argument("--max-k", type=int, default=24)
        sp.add_argument("--m-max", type=int, default=16)
        sp.add_argument("--truncation", type=int, default=arcs_mod.DEFAULT_TRUNCATION)
        sp.add_argument("--seed", type=int, default=None, help="default 0, or $NUBAR_SEED")
        sp.add_argument("--samples", type=int, default=100)
        sp.add_argument("--count", type=int, default=50, help="random arcs for the arcs command")
        sp.add_argument("--degree-bound", type=int, default=8)
    return parser


def _check_bounds(values: Dict[str, Any]):
    for key, (lo, hi) in FLAG_BOUNDS.items():
        v = values.get(key)
        if v is not None and not lo <= v <= hi:
            raise InputError(f"{key.replace('_', '-')} = {v} outside [{lo}, {hi}]")


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    seed = ns.seed if ns.seed is not None else _default_seed()
    flags = {
        "oracle": ns.oracle,
        "max_k": ns.max_k,
        "m_max": ns.m_max,
        "truncation": ns.truncation,
        "seed": seed,
        "samples": ns.samples,
        "count": ns.count,
        "degree_bound": ns.degree_bound,
    }
    _check_bounds({**flags, "p": ns.p, "q": ns.q, "k": ns.k})
    inputs: Dict[str, Any] = {"p": ns.p, "q": ns.q, "k": ns.k}
    if ns.ideal is not None:
        inputs["ideal"] = parse_ideal(ns.ideal)
    if ns.poly is not None:
        inputs["poly"] = parse_poly(ns.poly)
    if ns.Js:
        inputs["Js"] = [parse_ideal(j) for j in ns.Js]
    if ns.beta is not None:
        inputs["beta"] = branch_mod.CharSequence.parse(ns.beta)
    return JobSpec(ns.command, inputs, flags)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; unknown flags are input errors
        return 2 if exc.code else 0
    try:
        job = job_from_args(ns)
    except InputError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return 2
    payload, code = run(job)
    print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
