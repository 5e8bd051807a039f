"""Command-line surface: classification, factorization listings, splits,
ring properties, theorem verification over corpora, and atlas generation.

All commands print JSON on stdout (--pretty renders a readable view
instead); exit status is 0 on success, 1 on usage or parse errors, 2 when
verification finds a violated law, 3 under --strict when any check was
skipped at cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .corpus import CorpusError, default_corpus_spec, generate_corpus
from .factor import PreconditionError, enumerate_factorizations
from .irreducibles import IrreducibleKind, classify
from .parsing import ParseError, build_ring_from_text, build_tau_from_text, parse_element
from .properties import (
    DEFAULT_PROPERTY_CAP,
    Evaluator,
    PropKind,
    PropScope,
    PropertyId,
    check_property,
    elasticity,
)
from .relations import TauConstructionError
from .rings import AssociateKind, RingConstructionError, UnsupportedOperationError
from .theorems import verify_corpus_entry

BETA_NAMES = {
    "associate": AssociateKind.ASSOCIATE,
    "strong": AssociateKind.STRONG,
    "verystrong": AssociateKind.VERY_STRONG,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="taufact", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, element=True):
        sp.add_argument("--ring", required=True, help="ring spec, e.g. Zn(6), Z, prod(Zn(3),Zn(3))")
        sp.add_argument("--tau", required=True, help="relation spec, e.g. full, zero, regcap(full)")
        if element:
            sp.add_argument("--element", required=True, help="element literal matching the ring shape")
        sp.add_argument("--cap", type=int, default=None, help="factorization length cap")
        sp.add_argument("--pretty", action="store_true")

    sp = sub.add_parser("classify", help="irreducibility profile of one element")
    common(sp)
    sp = sub.add_parser("factorizations", help="factorization classes of one element")
    common(sp)
    sp.add_argument("--beta", choices=sorted(BETA_NAMES), default="associate")
    sp = sub.add_parser("ufact", help="essential/inessential splits of one element")
    common(sp)
    sp = sub.add_parser("properties", help="ring-level property vector")
    common(sp, element=False)
    sp.add_argument("--scope", default=None, help="JSON array of elements (infinite rings)")
    sp = sub.add_parser("verify", help="run the theorem harness over a corpus")
    sp.add_argument("--corpus", default="default", help='"default" or a corpus JSON file')
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--strict", action="store_true")
    sp.add_argument("--pretty", action="store_true")
    sp.add_argument("--out", default=None, help="write the report to a file as well")
    sp = sub.add_parser("catalog", help="emit a per-(ring, relation) atlas")
    sp.add_argument("--corpus", default="default")
    sp.add_argument("--out", required=True)
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--pretty", action="store_true")
    return p


def _emit(payload, pretty: bool, pretty_render=None):
    if pretty and pretty_render is not None:
        print(pretty_render(payload))
    else:
        print(json.dumps(payload, indent=2))


def _load_inputs(args, element=True):
    ring = build_ring_from_text(args.ring)
    tau = build_tau_from_text(args.tau, ring)
    el = parse_element(args.element, ring) if element else None
    return ring, tau, el


def cmd_classify(args) -> int:
    ring, tau, el = _load_inputs(args)
    profile = classify(ring, tau, el, cap=args.cap)
    payload = {"schema": 1, "ring": args.ring, "tau": tau.spec_string()}
    payload.update(profile.to_json(ring))

    def render(p):
        lines = [f"element {json.dumps(p['element'])} under {p['tau']} on {p['ring']}:"]
        for kind, flag in p["flags"].items():
            lines.append(f"  {kind:32s} {flag}")
        return "\n".join(lines)

    _emit(payload, args.pretty, render)
    return 0


def cmd_factorizations(args) -> int:
    ring, tau, el = _load_inputs(args)
    fs = enumerate_factorizations(ring, tau, el, BETA_NAMES[args.beta], cap=args.cap)
    payload = {"schema": 1, "ring": args.ring, "tau": tau.spec_string(), "beta": args.beta}
    payload.update(fs.to_json())

    def render(p):
        lines = [
            f"{len(p['items'])} classes (cap {p['cap']}, complete {p['complete']}, unbounded {p['unbounded']}):"
        ]
        for item in p["items"]:
            facs = " * ".join(json.dumps(x) for x in item["factors"])
            lines.append(f"  {json.dumps(item['target'])} = {json.dumps(item['unit'])} * {facs}")
        return "\n".join(lines)

    _emit(payload, args.pretty, render)
    return 0


def cmd_ufact(args) -> int:
    from .ufact import u_partitions

    ring, tau, el = _load_inputs(args)
    fs = enumerate_factorizations(ring, tau, el, cap=args.cap)
    splits = []
    for f in fs.items:
        for u in u_partitions(ring, f):
            splits.append(u.to_json())
    payload = {
        "schema": 1,
        "ring": args.ring,
        "tau": tau.spec_string(),
        "element": ring.element_to_json(el),
        "cap": fs.cap,
        "splits": splits,
    }

    def render(p):
        lines = [f"{len(p['splits'])} splits:"]
        for s in p["splits"]:
            ines = " * ".join(json.dumps(x) for x in s["inessential"]) or "(none)"
            ess = " * ".join(json.dumps(x) for x in s["essential"])
            lines.append(f"  unit {json.dumps(s['unit'])} | inessential {ines} | essential <{ess}>")
        return "\n".join(lines)

    _emit(payload, args.pretty, render)
    return 0


_CATALOG_PROPS = tuple(
    PropertyId(kind, alpha=alpha, beta=beta, scope=scope)
    for scope in (PropScope.PLAIN, PropScope.REGULAR, PropScope.REGCAP, PropScope.REGCAP_U)
    for kind, alpha, beta in (
        (PropKind.ATOMIC, IrreducibleKind.IRREDUCIBLE, None),
        (PropKind.ACCP, None, None),
        (PropKind.BFR, None, None),
        (PropKind.FFR, None, AssociateKind.ASSOCIATE),
        (PropKind.WFFR, None, AssociateKind.ASSOCIATE),
        (PropKind.IDF, IrreducibleKind.IRREDUCIBLE, AssociateKind.ASSOCIATE),
        (PropKind.HFR, IrreducibleKind.IRREDUCIBLE, None),
        (PropKind.UFR, IrreducibleKind.IRREDUCIBLE, AssociateKind.ASSOCIATE),
    )
)


def _property_vector(ring, tau, scope, cap):
    ev_plain = Evaluator(ring, tau, cap or DEFAULT_PROPERTY_CAP)
    ev_regcap = Evaluator(ring, tau.regcap(), cap or DEFAULT_PROPERTY_CAP)
    out = []
    for prop in _CATALOG_PROPS:
        ev = ev_regcap if prop.scope in (PropScope.REGCAP, PropScope.REGCAP_U) else ev_plain
        try:
            v = check_property(ring, tau, prop, scope, cap, evaluator=ev)
            out.append(v.to_json(ring))
        except (UnsupportedOperationError, PreconditionError) as exc:
            out.append({"property": prop.label(), "outcome": "unsupported", "note": str(exc)})
    try:
        el = elasticity(ring, tau, scope, cap, evaluator=ev_plain)
        elas = el.to_json(ring)
    except (UnsupportedOperationError, PreconditionError) as exc:
        elas = {"value": "unsupported", "note": str(exc)}
    return out, elas


def cmd_properties(args) -> int:
    ring, tau, _ = _load_inputs(args, element=False)
    scope = None
    if args.scope is not None:
        scope = [ring.element_from_json(e) for e in json.loads(args.scope)]
    props, elas = _property_vector(ring, tau, scope, args.cap)
    payload = {
        "schema": 1,
        "ring": args.ring,
        "tau": tau.spec_string(),
        "properties": props,
        "elasticity": elas,
    }

    def render(p):
        lines = [f"properties of {p['tau']} on {p['ring']}:"]
        for v in p["properties"]:
            bound = f" bound={v['bound']}" if "bound" in v else ""
            lines.append(f"  {v['property']:44s} {v['outcome']}{bound}")
        lines.append(f"  elasticity: {p['elasticity']['value']}")
        return "\n".join(lines)

    _emit(payload, args.pretty, render)
    return 0


def _load_corpus(name: str) -> dict:
    if name == "default":
        return default_corpus_spec()
    with open(name) as fh:
        return json.load(fh)


def _verify_group(payload):
    """Worker: all relations of one ring, sharing its caches."""
    ring_str, tau_scope_list, cap = payload
    ring = build_ring_from_text(ring_str)
    ring_cache: dict = {}
    out = []
    for tau_str, scope_json in tau_scope_list:
        tau = build_tau_from_text(tau_str, ring)
        scope = None
        if scope_json is not None:
            scope = [ring.element_from_json(e) for e in scope_json]
        out.extend(
            e.to_json() for e in verify_corpus_entry(ring, tau, scope, cap, ring_cache)
        )
    return out


def run_verification(corpus_spec: dict, cap=None, jobs: int = 1):
    entries_meta = generate_corpus(corpus_spec)
    corpus_entries, meta = entries_meta
    cap = cap if cap is not None else meta["cap"]
    groups: dict = {}
    scopes = corpus_spec.get("scopes", {})
    for ce in corpus_entries:
        groups.setdefault(ce.ring_str, []).append((ce.tau_str, scopes.get(ce.ring_str)))
    payloads = [(ring_str, tau_list, cap) for ring_str, tau_list in groups.items()]
    rows: list = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_verify_group, payloads):
                rows.extend(chunk)
    else:
        for payload in payloads:
            rows.extend(_verify_group(payload))
    summary: dict = {}
    for r in rows:
        summary[r["outcome"]] = summary.get(r["outcome"], 0) + 1
    for key in ("verified", "inapplicable", "violated", "skipped", "informational"):
        summary.setdefault(key, 0)
    return {
        "schema": 1,
        "corpus": meta,
        "cap": cap,
        "entries": rows,
        "summary": {k: summary[k] for k in sorted(summary)},
    }


def cmd_verify(args) -> int:
    corpus_spec = _load_corpus(args.corpus)
    report = run_verification(corpus_spec, cap=args.cap, jobs=args.jobs)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if args.pretty:
        s = report["summary"]
        print(
            f"entries: {len(report['entries'])}  verified: {s['verified']}  "
            f"inapplicable: {s['inapplicable']}  violated: {s['violated']}  "
            f"skipped: {s['skipped']}  informational: {s['informational']}"
        )
        for r in report["entries"]:
            if r["outcome"] == "violated":
                print(f"VIOLATED {r['ring']} {r['tau']} {r['theorem']}/{r['instance']}")
    else:
        print(text)
    if report["summary"]["violated"]:
        return 2
    if args.strict and report["summary"]["skipped"]:
        return 3
    return 0


def cmd_catalog(args) -> int:
    corpus_spec = _load_corpus(args.corpus)
    corpus_entries, meta = generate_corpus(corpus_spec)
    cap = args.cap if args.cap is not None else meta["cap"]
    atlas_entries = []
    for ce in corpus_entries:
        ring, tau = ce.ring, ce.tau
        elements = []
        domain = ce.scope if ce.scope is not None else ring.nonunits()
        for a in sorted(set(domain), key=ring.sort_key):
            if ring.is_unit(a):
                continue
            row = {
                "element": ring.element_to_json(a),
                "class": ring.classify(a).value,
            }
            try:
                row["flags"] = {
                    k.value: v.value for k, v in classify(ring, tau, a, cap=cap).flags.items()
                }
            except UnsupportedOperationError as exc:
                row["flags"] = "unsupported"
                row["note"] = str(exc)
            elements.append(row)
        props, elas = _property_vector(ring, tau, ce.scope, cap)
        atlas_entries.append(
            {
                "ring": ce.ring_str,
                "tau": ce.tau_str,
                "cap": cap,
                "scoped": ce.scope is not None and not ring.is_finite,
                "elements": elements,
                "properties": props,
                "elasticity": elas,
            }
        )
    atlas = {"schema": 1, "corpus": meta, "entries": atlas_entries}
    with open(args.out, "w") as fh:
        fh.write(json.dumps(atlas, indent=2) + "\n")
    if args.pretty:
        print(f"wrote {len(atlas_entries)} atlas entries to {args.out}")
    else:
        print(json.dumps({"schema": 1, "written": args.out, "entries": len(atlas_entries)}))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "factorizations":
            return cmd_factorizations(args)
        if args.command == "ufact":
            return cmd_ufact(args)
        if args.command == "properties":
            return cmd_properties(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "catalog":
            return cmd_catalog(args)
        parser.error(f"unknown command {args.command!r}")
    except (
        ParseError,
        RingConstructionError,
        TauConstructionError,
        CorpusError,
        PreconditionError,
        UnsupportedOperationError,
        json.JSONDecodeError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
