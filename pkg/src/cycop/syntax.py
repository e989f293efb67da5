"""Text formats for trees, mu-expressions, and combinators, with printers that round-trip.

A document is a sequence of signature lines ``f : {x, y, z}``, optional
``let NAME = OBJECT ;`` bindings, and one final object.  Lines starting with
``//`` are comments.

Trees:        ``{ f(x,y), (p,q), T1(u,v), {inline}(a,b) ; (x~p)(y~u) }``
mu-syntax:    ``x``  ``mu x. c``  ``<s | t>``  ``f{t1, t2}``  ``f{x: t1, y: t2}``  ``f(u,v){t1, t2}``
Combinators:  ``f``  ``f(u,v)``  ``id{x,y}``  ``(s x*y t)``  ``act[u->x, v->y](s)``

In ``f(u,v)`` the listed variables are the current names of the profile
entries in profile order; ``f(u->x, v->y)`` attaches each current name to a
named profile entry.  A parameter used without a signature line takes its
profile from its first use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any

from .combinators import Act, Comp, Id, Param
from .errors import CycopError, ParseError
from .mu import Apply, Mu, Pair, Var
from .naming import Bijection, sorted_vars
from .signature import BaseParameter, DecoratedInstance, Signature, TreeDecoration, instance
from .trees import Ordinary, Special, TreeClass, VernonGraph, canonicalize, edge

LANGS = ("tree", "mu", "comb")
KEYWORDS = {"mu", "let", "id", "act"}

_TOKENS = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>//[^\n]*)|(?P<arrow>->)|(?P<ident>[A-Za-z0-9_'#]+)|(?P<punct>[{}()\[\]<>|,;:~.=*])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            out.append(Token(kind, chunk, line, col))
        nl = chunk.count("\n")
        if nl:
            line += nl
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


@dataclass
class Document:
    signature: Signature
    lets: dict[str, Any] = field(default_factory=dict)
    value: Any = None
    lang: str = "tree"


class Parser:
    def __init__(self, text: str, lang: str = "tree", signature: Signature | None = None):
        if lang not in LANGS:
            raise ValueError(f"unknown language {lang!r}")
        self.toks = tokenize(text)
        self.pos = 0
        self.lang = lang
        self.sig = signature if signature is not None else Signature()
        self.lets: dict[str, Any] = {}

    # token helpers -----------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def ahead(self, k: int = 1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.column)

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        t = self.tok
        self.pos += 1
        return t

    def ident(self, what: str = "identifier") -> str:
        t = self.tok
        if t.kind != "ident":
            raise self.error(f"expected {what}, found {t.text or 'end of input'!r}")
        self.pos += 1
        return t.text

    def variable(self) -> str:
        t = self.tok
        name = self.ident("variable")
        if name in KEYWORDS:
            raise self.error(f"{name!r} is reserved", t)
        return name

    def guard(self, tok: Token, fn, *args):
        """Run a constructor, reporting model errors at ``tok``."""
        try:
            return fn(*args)
        except ParseError:
            raise
        except CycopError as e:
            raise ParseError(str(e), tok.line, tok.column) from e

    # documents ----------------------------------------------------------------

    def document(self) -> Document:
        value = None
        while self.tok.kind != "eof":
            if self.tok.kind == "ident" and self.ahead().text == ":" and self.tok.text not in KEYWORDS:
                self.signature_line()
            elif self.at("let"):
                self.let_binding()
            else:
                if value is not None:
                    raise self.error("only one object may follow the declarations")
                value = self.object(in_let=False)
                self.accept(";")
        return Document(self.sig, self.lets, value, self.lang)

    def signature_line(self):
        t = self.tok
        name = self.ident("parameter name")
        self.expect(":")
        self.expect("{")
        profile = [self.variable()]
        while self.accept(","):
            profile.append(self.variable())
        self.expect("}")
        self.accept(";")
        self.guard(t, self.sig.declare, name, profile)

    def let_binding(self):
        self.expect("let")
        t = self.tok
        name = self.ident("binding name")
        if name in self.lets or name in self.sig:
            raise self.error(f"{name!r} is already defined", t)
        self.expect("=")
        self.lets[name] = self.object(in_let=True)
        self.expect(";")

    def object(self, in_let: bool):
        if self.lang == "tree" or (in_let and self.at("{")):
            return self.tree()
        match self.lang:
            case "mu":
                return self.command() if self._starts_command() else self.term()
            case "comb":
                return self.comb()

    # decorations -------------------------------------------------------------

    def decoration_for(self, name: str, tok: Token, inferred: tuple[str, ...] | None):
        bound = self.lets.get(name)
        if bound is not None:
            if isinstance(bound, VernonGraph):
                return TreeDecoration(self.guard(tok, canonicalize, bound))
            if isinstance(bound, TreeClass):
                return TreeDecoration(bound)
            raise self.error(f"{name!r} is not bound to a tree", tok)
        if name in self.sig:
            return self.sig[name]
        if inferred is None:
            raise self.error(f"undeclared parameter {name!r}; add a line '{name} : {{...}}'", tok)
        return self.guard(tok, self.sig.declare, name, inferred)

    def decoration_head(self):
        """A parameter name or an inline tree; returns (token, name-or-None, decoration-or-None)."""
        t = self.tok
        if self.at("{"):
            g = self.tree()
            return t, None, TreeDecoration(self.guard(t, canonicalize, g))
        name = self.ident("parameter name")
        if name in KEYWORDS:
            raise self.error(f"{name!r} is reserved", t)
        return t, name, None

    def attachment_args(self) -> list[tuple[str, str | None]]:
        self.expect("(")
        args = [self.attachment_arg()]
        while self.accept(","):
            args.append(self.attachment_arg())
        self.expect(")")
        return args

    def attachment_arg(self) -> tuple[str, str | None]:
        v = self.variable()
        if self.tok.kind == "arrow":
            self.pos += 1
            return v, self.variable()
        return v, None

    def make_instance(self, tok, name, dec, args) -> DecoratedInstance:
        named = [p for _, p in args if p is not None]
        if named and len(named) != len(args):
            raise self.error("mix of positional and named attachments", tok)
        if named:
            if dec is None:
                dec = self.decoration_for(name, tok, tuple(named))
            return self.guard(tok, lambda: DecoratedInstance(dec, Bijection.from_pairs(args)))
        current = tuple(v for v, _ in args)
        if dec is None:
            dec = self.decoration_for(name, tok, current)
        return self.guard(tok, instance, dec, current)

    # trees -------------------------------------------------------------------

    def tree(self) -> VernonGraph:
        t = self.expect("{")
        corollas = [self.corolla()]
        while self.accept(","):
            corollas.append(self.corolla())
        edges = []
        if self.accept(";"):
            while self.at("("):
                et = self.tok
                self.pos += 1
                u = self.variable()
                self.expect("~")
                v = self.variable()
                self.expect(")")
                edges.append(self.guard(et, edge, u, v))
                self.accept(",")
        self.expect("}")
        return self.guard(t, VernonGraph, tuple(corollas), frozenset(edges))

    def corolla(self):
        t = self.tok
        if self.at("("):
            self.pos += 1
            a = self.variable()
            self.expect(",")
            b = self.variable()
            self.expect(")")
            return self.guard(t, Special, a, b)
        tok, name, dec = self.decoration_head()
        args = self.attachment_args()
        return Ordinary(self.make_instance(tok, name, dec, args))

    # mu-syntax ---------------------------------------------------------------

    def _starts_command(self) -> bool:
        if self.at("<") or self.at("{"):
            return True
        if self.tok.kind == "ident" and self.tok.text not in KEYWORDS:
            return self.ahead().text in ("{", "(")
        return self.at("(")

    def term(self):
        if self.accept("mu"):
            x = self.variable()
            self.expect(".")
            return Mu(x, self.command())
        if self.tok.kind == "ident":
            return Var(self.variable())
        raise self.error(f"expected a term, found {self.tok.text or 'end of input'!r}")

    def command(self):
        t = self.tok
        if self.accept("<"):
            s = self.term()
            self.expect("|")
            u = self.term()
            self.expect(">")
            return Pair(s, u)
        if self.accept("("):
            c = self.command()
            self.expect(")")
            return c
        tok, name, dec = self.decoration_head()
        inst = None
        if self.at("("):
            inst = self.make_instance(tok, name, dec, self.attachment_args())
        self.expect("{")
        keys, terms = [], []
        while True:
            if self.tok.kind == "ident" and self.ahead().text == ":":
                keys.append(self.variable())
                self.expect(":")
            else:
                keys.append(None)
            terms.append(self.term())
            if not self.accept(","):
                break
        self.expect("}")
        named = [k for k in keys if k is not None]
        if named and len(named) != len(keys):
            raise self.error("mix of positional and named arguments", t)
        if inst is None:
            if named:
                profile = tuple(named)
            else:
                profile = tuple(s.name if isinstance(s, Var) else s.binder for s in terms)
                if len(set(profile)) != len(profile) and name is not None and name not in self.sig:
                    raise self.error(
                        f"cannot infer the profile of {name!r} from its arguments; declare it", tok
                    )
            if dec is None:
                dec = self.decoration_for(name, tok, profile)
            inst = self.guard(tok, instance, dec)
        slots = inst.slots()
        if named:
            mapping = dict(zip(named, terms))
        else:
            if len(terms) != len(slots):
                raise self.error(f"expected {len(slots)} arguments, got {len(terms)}", t)
            mapping = dict(zip(slots, terms))
        return self.guard(t, Apply.of, inst, mapping)

    # combinators -------------------------------------------------------------

    def comb(self):
        t = self.tok
        if self.accept("id"):
            self.expect("{")
            x = self.variable()
            self.expect(",")
            y = self.variable()
            self.expect("}")
            return Id(x, y)
        if self.accept("act"):
            self.expect("[")
            pairs = []
            if not self.accept("]"):
                pairs.append(self.rename_pair())
                while self.accept(","):
                    pairs.append(self.rename_pair())
                self.expect("]")
            self.expect("(")
            body = self.comb()
            self.expect(")")
            return Act(body, self.guard(t, Bijection.from_pairs, pairs))
        if self.accept("("):
            left = self.comb()
            x = self.variable()
            self.expect("*")
            y = self.variable()
            right = self.comb()
            self.expect(")")
            return Comp(left, x, y, right)
        tok, name, dec = self.decoration_head()
        if name is not None and name in self.lets and not isinstance(self.lets[name], (VernonGraph, TreeClass)):
            return self.lets[name]
        if self.at("("):
            return Param(self.make_instance(tok, name, dec, self.attachment_args()))
        if dec is None:
            dec = self.decoration_for(name, tok, None)
        return Param(instance(dec))

    def rename_pair(self) -> tuple[str, str]:
        u = self.variable()
        if self.tok.kind != "arrow":
            raise self.error("expected '->' in a renaming")
        self.pos += 1
        return u, self.variable()


def parse_document(text: str, lang: str = "tree", signature: Signature | None = None) -> Document:
    doc = Parser(text, lang, signature).document()
    if doc.value is None:
        raise ParseError("no object in input", 1, 1)
    return doc


def parse_tree(text: str, signature: Signature | None = None) -> VernonGraph:
    v = parse_document(text, "tree", signature).value
    if not isinstance(v, VernonGraph):
        raise ParseError("expected a tree", 1, 1)
    return v


def parse_mu(text: str, signature: Signature | None = None):
    return parse_document(text, "mu", signature).value


def parse_comb(text: str, signature: Signature | None = None):
    return parse_document(text, "comb", signature).value


def detect_lang(path: str | None, text: str) -> str:
    """Language from the file extension, else from the final object's first token."""
    if path:
        for ext, lang in ((".mu", "mu"), (".comb", "comb"), (".tree", "tree"), (".vt", "tree")):
            if path.endswith(ext):
                return lang
    last = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("//")]
    tail = last[-1].strip() if last else ""
    if tail.startswith("{"):
        return "tree"
    if tail.startswith(("id{", "act[", "(")):
        return "comb"
    return "mu"


# printing ---------------------------------------------------------------------


def _decoration_text(inst: DecoratedInstance) -> str:
    match inst.decoration:
        case BaseParameter(name):
            return name
        case TreeDecoration(cls):
            return print_tree(cls.canonical)


def print_instance(inst: DecoratedInstance, force_args: bool = True) -> str:
    head = _decoration_text(inst)
    if not force_args and inst.attachment.is_identity():
        return head
    return f"{head}({','.join(inst.slots())})"


def print_corolla(c) -> str:
    match c:
        case Ordinary(inst):
            return print_instance(inst)
        case Special(a, b):
            return f"({a},{b})"


def print_tree(t: VernonGraph | TreeClass) -> str:
    if isinstance(t, TreeClass):
        t = t.canonical
    body = ", ".join(print_corolla(c) for c in t.corollas)
    if not t.edges:
        return "{ " + body + " }"
    es = sorted((sorted_vars(e) for e in t.edges))
    return "{ " + body + " ; " + "".join(f"({a}~{b})" for a, b in es) + " }"


def print_mu(e) -> str:
    match e:
        case Var(x):
            return x
        case Mu(x, body):
            return f"mu {x}. {print_mu(body)}"
        case Pair(s, t):
            return f"<{print_mu(s)} | {print_mu(t)}>"
        case Apply(inst, args):
            d = dict(args)
            head = print_instance(inst, force_args=False)
            return f"{head}{{{', '.join(print_mu(d[v]) for v in inst.slots())}}}"
    raise TypeError(f"not a mu-expression: {e!r}")


def print_comb(c) -> str:
    match c:
        case Param(inst):
            return print_instance(inst, force_args=False)
        case Id(x, y):
            return f"id{{{x},{y}}}"
        case Comp(left, x, y, right):
            return f"({print_comb(left)} {x}*{y} {print_comb(right)})"
        case Act(body, sigma):
            pairs = ", ".join(f"{u}->{x}" for u, x in sigma.items())
            return f"act[{pairs}]({print_comb(body)})"
    raise TypeError(f"not a combinator: {c!r}")


def base_parameters(obj) -> list[BaseParameter]:
    """Every base parameter occurring in ``obj``, in first-occurrence order."""
    seen: dict[str, BaseParameter] = {}

    def dec(d):
        match d:
            case BaseParameter(name):
                seen.setdefault(name, d)
            case TreeDecoration(cls):
                walk(cls.canonical)

    def walk(o):
        match o:
            case TreeClass():
                walk(o.canonical)
            case VernonGraph():
                for c in o.corollas:
                    if isinstance(c, Ordinary):
                        dec(c.instance.decoration)
            case Apply(inst, args):
                dec(inst.decoration)
                for _, t in args:
                    walk(t)
            case Mu(_, body):
                walk(body)
            case Pair(s, t):
                walk(s)
                walk(t)
            case Param(inst):
                dec(inst.decoration)
            case Comp(left, _, _, right):
                walk(left)
                walk(right)
            case Act(body, _):
                walk(body)

    walk(obj)
    return list(seen.values())


def print_signature(params) -> str:
    return "".join(f"{p.name} : {{{', '.join(p.profile)}}}\n" for p in params)


def print_object(obj) -> str:
    match obj:
        case VernonGraph() | TreeClass():
            return print_tree(obj)
        case Var() | Mu() | Pair() | Apply():
            return print_mu(obj)
        case Param() | Id() | Comp() | Act():
            return print_comb(obj)
    raise TypeError(f"cannot print {obj!r}")


def print_document(obj) -> str:
    """Signature lines for every parameter used, then the object; reparses to an equal value."""
    return print_signature(base_parameters(obj)) + print_object(obj) + "\n"


def lang_of(obj) -> str:
    match obj:
        case VernonGraph() | TreeClass():
            return "tree"
        case Param() | Id() | Comp() | Act():
            return "comb"
    return "mu"
