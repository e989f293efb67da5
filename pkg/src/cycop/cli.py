"""Command-line front end.

Exit status: 0 on success, 1 when a law suite finds a counterexample or two
objects are inequivalent, 2 when the input is rejected.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combinators import interpret, typeof
from .decompose import command_of, decomposition
from .dot import to_dot
from .errors import CycopError, NotATreeError, ParseError
from .laws import run_suite
from .monad import flatten, mu
from .mu import is_term, is_unit_command, mu_canonical, mu_normal_form, mu_typeof
from .naming import sorted_vars
from .rewrite import normal_form
from .syntax import Document, detect_lang, parse_document, print_document, print_object, print_tree
from .translate import comb_to_mu, phi, translate
from .trees import NotATree, TreeClass, VernonGraph, canonicalize, classify

ENV_BOUND = "CYCOP_LAWS_BOUND"
OK, FAILED, INVALID = 0, 1, 2


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.record: dict = {}

    def text(self, s: str):
        if not self.as_json:
            print(s, file=self.stream)

    def field(self, key: str, value):
        self.record[key] = value

    def finish(self):
        if self.as_json:
            print(json.dumps(self.record, indent=2), file=self.stream)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load(path: str, lang: str | None = None) -> Document:
    text = _read(path)
    try:
        return parse_document(text, lang or detect_lang(path, text))
    except ParseError as e:
        raise ParseError(f"{path}:{e}") from e


def _fv(s) -> list[str]:
    return sorted_vars(s)


def denotation(doc: Document) -> TreeClass:
    """The tree class any of the three languages denotes."""
    v = doc.value
    match doc.lang:
        case "tree":
            return canonicalize(normal_form(v))
        case "mu":
            return phi(v)
        case "comb":
            return interpret(v)


# subcommands ------------------------------------------------------------------


def cmd_validate(args, out: Output) -> int:
    doc = load(args.file, args.lang)
    v = doc.value
    if doc.lang != "tree":
        T = mu_typeof(v) if doc.lang == "mu" else typeof(v)
        role = "term" if doc.lang == "mu" and is_term(v) else ("command" if doc.lang == "mu" else "combinator")
        out.text(f"ok: well-typed {role} over {{{', '.join(_fv(T))}}}")
        out.field("kind", role)
        out.field("free_vars", _fv(T))
        return OK
    kind = classify(v)
    if isinstance(kind, NotATree):
        out.text(f"invalid: not a tree: {kind.reason.value}")
        out.field("kind", "not-a-tree")
        out.field("reason", kind.reason.value)
        return INVALID
    out.text(f"ok: {kind.value} tree, {len(v.free_vars)} free variables {{{', '.join(_fv(v.free_vars))}}}")
    out.field("kind", kind.value)
    out.field("free_vars", _fv(v.free_vars))
    return OK


def cmd_nf(args, out: Output) -> int:
    doc = load(args.file, "tree")
    trace: list = []
    result = normal_form(doc.value, trace)
    if args.trace:
        for k, (r, g) in enumerate(trace, 1):
            out.text(f"step {k}: {r.kind.value} at ({r.near}~{r.far})  {print_tree(g)}")
    out.text(print_document(result).rstrip())
    out.field("steps", [{"rule": r.kind.value, "edge": [r.near, r.far], "tree": print_tree(g)} for r, g in trace])
    out.field("normal_form", print_tree(result))
    return OK


def cmd_mu_nf(args, out: Output) -> int:
    doc = load(args.file, "mu")
    mu_typeof(doc.value)
    nf = mu_normal_form(doc.value)
    out.text(print_document(nf).rstrip())
    if is_unit_command(nf):
        out.text("// unit-command")
    out.field("normal_form", print_object(nf))
    out.field("unit_command", is_unit_command(nf))
    return OK


def cmd_alpha_canon(args, out: Output) -> int:
    doc = load(args.file, args.lang)
    match doc.lang:
        case "tree":
            res = canonicalize(doc.value).canonical
        case "mu":
            mu_typeof(doc.value)
            res = mu_canonical(doc.value)
        case _:
            raise ParseError("alpha-canon takes a tree or a mu-expression", 1, 1)
    out.text(print_document(res).rstrip())
    out.field("canonical", print_object(res))
    return OK


def cmd_compose(args, out: Output) -> int:
    doc = load(args.file, "comb")
    res = interpret(doc.value)
    out.text(print_document(res).rstrip())
    out.field("result", print_tree(res))
    return OK


def cmd_flatten(args, out: Output) -> int:
    doc = load(args.file, "tree")
    flat = flatten(doc.value)
    out.text(print_document(flat).rstrip())
    out.field("flat", print_tree(flat))
    if args.multiply:
        m = mu(doc.value)
        out.text("// multiplied")
        out.text(print_tree(m))
        out.field("multiplied", print_tree(m))
    return OK


def cmd_translate(args, out: Output) -> int:
    doc = load(args.file, args.source)
    v = doc.value
    match args.source, args.target:
        case "mu", "comb":
            res = translate(v)
        case "mu", "tree":
            res = phi(v)
        case "comb", "mu":
            typeof(v)
            res = comb_to_mu(v)
        case "comb", "tree":
            res = interpret(v)
        case "mu", "mu":
            mu_typeof(v)
            res = v
        case "comb", "comb":
            typeof(v)
            res = v
    out.text(print_document(res).rstrip())
    out.field("result", print_object(res))
    return OK


def cmd_eval(args, out: Output) -> int:
    doc = load(args.file, args.lang)
    res = denotation(doc)
    out.text(print_document(res).rstrip())
    out.field("class", print_tree(res))
    return OK


def cmd_equiv(args, out: Output) -> int:
    a, b = load(args.a, args.lang), load(args.b, args.lang)
    ca, cb = denotation(a), denotation(b)
    same = ca == cb
    if same:
        out.text("equivalent")
    elif ca.free_vars != cb.free_vars:
        out.text(f"inequivalent: free variables {{{', '.join(_fv(ca.free_vars))}}} vs {{{', '.join(_fv(cb.free_vars))}}}")
    else:
        out.text(f"inequivalent:\n  {print_tree(ca)}\n  {print_tree(cb)}")
    out.field("equivalent", same)
    out.field("classes", [print_tree(ca), print_tree(cb)])
    return OK if same else FAILED


def _corolla_index(t: VernonGraph, k: int) -> int:
    if not 0 <= k < len(t.corollas):
        raise NotATreeError("index", f"corolla index {k} out of range 0..{len(t.corollas) - 1}")
    return k


def cmd_decompose(args, out: Output) -> int:
    doc = load(args.file, "tree")
    t = doc.value
    d = decomposition(t, _corolla_index(t, args.at))
    out.text(f"head: {print_tree(d.head)}")
    pieces = []
    for v, p in d.plucked:
        out.text(f"along {v} (entry {p.entry}): {print_tree(p.graph)}")
        pieces.append({"along": v, "entry": p.entry, "tree": print_tree(p.graph)})
    out.field("head", print_tree(d.head))
    out.field("plucked", pieces)
    return OK


def cmd_command_of(args, out: Output) -> int:
    doc = load(args.file, "tree")
    t = doc.value
    c = command_of(t, _corolla_index(t, args.at))
    out.text(print_document(c).rstrip())
    out.field("command", print_object(c))
    return OK


def cmd_laws(args, out: Output) -> int:
    bound = args.bound if args.bound is not None else int(os.environ.get(ENV_BOUND, "4"))
    rep = run_suite(args.suite, bound, args.seed)
    if out.as_json:
        out.record = json.loads(rep.to_json())
    else:
        out.text(rep.to_text())
    return OK if rep.ok else FAILED


def cmd_dot(args, out: Output) -> int:
    doc = load(args.file, "tree")
    text = to_dot(doc.value)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.text(f"wrote {args.output}")
    out.field("output", args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycop", description="Cyclic-operad trees and their two term languages.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, lang=False):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        if lang:
            sp.add_argument("--lang", choices=("tree", "mu", "comb"), help="input language (default: from the extension)")
        return sp

    add("validate", cmd_validate, "classify a graph or type-check an expression", True).add_argument("file")
    sp = add("nf", cmd_nf, "eliminate special corollas")
    sp.add_argument("file")
    sp.add_argument("--trace", action="store_true", help="print every contraction")
    add("mu-nf", cmd_mu_nf, "normalize a mu-command").add_argument("file")
    add("alpha-canon", cmd_alpha_canon, "canonical alpha-representative", True).add_argument("file")
    add("compose", cmd_compose, "evaluate a combinator script in the tree model").add_argument("file")
    sp = add("flatten", cmd_flatten, "flatten a tree of trees")
    sp.add_argument("file")
    sp.add_argument("--multiply", action="store_true", help="also eliminate special corollas")
    sp = add("translate", cmd_translate, "translate mu-syntax or combinators into another language")
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", choices=("mu", "comb"), required=True)
    sp.add_argument("--to", dest="target", choices=("mu", "comb", "tree"), required=True)
    add("eval", cmd_eval, "the tree class an object denotes", True).add_argument("file")
    sp = add("equiv", cmd_equiv, "decide whether two objects denote the same tree class", True)
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("decompose", cmd_decompose, "split a tree at a corolla")
    sp.add_argument("file")
    sp.add_argument("--at", type=int, required=True, help="0-based corolla index in file order")
    sp = add("command-of", cmd_command_of, "normal-form command headed by a corolla")
    sp.add_argument("file")
    sp.add_argument("--at", type=int, required=True, help="0-based corolla index in file order")
    sp = add("laws", cmd_laws, "run a randomized law suite")
    sp.add_argument("--suite", choices=("operad", "monad", "translate", "decompose", "rewrite", "all"), default="all")
    sp.add_argument("--bound", type=int, default=None, help=f"size bound (default: ${ENV_BOUND} or 4)")
    sp.add_argument("--seed", type=int, default=0)
    sp = add("dot", cmd_dot, "export a tree as Graphviz DOT")
    sp.add_argument("file")
    sp.add_argument("-o", "--output", required=True, help="output path, or - for stdout")
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INVALID if e.code else OK
    out = Output(args.json, stdout)
    try:
        code = args.fn(args, out)
    except (CycopError, OSError) as e:
        msg = str(e)
        source = getattr(args, "file", None)
        if source and not isinstance(e, (ParseError, OSError)):
            msg = f"{source}: {msg}"
        if args.json:
            out.record = {"error": msg, "type": type(e).__name__}
            out.finish()
        else:
            print(f"error: {msg}", file=stderr)
        return INVALID
    out.finish()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
