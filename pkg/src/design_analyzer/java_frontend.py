"""Pattern-level Java frontend.

This is not a Java grammar. The scanner tracks brace depth and recognises the
handful of statement shapes that carry inter-class coupling: class headers,
field declarations, method signatures and ``new T(`` expressions.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import MissingClassName, ParseError, UnbalancedBraces, UnterminatedComment, UnterminatedString

log = logging.getLogger(__name__)

JAVA_KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue default do
    double else enum extends final finally float for goto if implements import instanceof
    int interface long native new package private protected public return short static
    strictfp super switch synchronized this throw throws transient try void volatile while
    """.split()
)
LITERAL_WORDS = frozenset({"true", "false", "null"})
PRIMITIVES = frozenset({"boolean", "byte", "char", "short", "int", "long", "float", "double", "void", "var"})

MODIFIERS = frozenset(
    {
        "public", "protected", "private", "static", "final", "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default",
    }
)
ACCESS_WORDS = {"public": "public", "protected": "protected", "private": "private"}
TYPE_KEYWORDS = frozenset({"class", "interface", "enum", "@interface"})
MULTI_PUNCT = ("...", "::", "->")


@dataclass(frozen=True)
class Token:
    kind: str  # identifier | keyword | punctuation | literal
    text: str
    file: str
    line: int
    column: int


@dataclass(frozen=True)
class Location:
    file: str
    line: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}"


@dataclass(frozen=True)
class FieldDecl:
    name: str
    declared_type: str
    access: str
    is_instantiation: bool
    location: Location


@dataclass(frozen=True)
class MethodSignature:
    name: str
    return_type: str
    parameter_types: tuple[str, ...]
    access: str
    location: Location
    is_constructor: bool = False


@dataclass(frozen=True)
class ClassDecl:
    name: str  # qualified as Outer.Inner for nested types
    kind: str  # class | interface
    extends_name: str | None
    implements_names: tuple[str, ...]
    fields: tuple[FieldDecl, ...]
    methods: tuple[MethodSignature, ...]
    location: Location
    local_instantiations: tuple[tuple[str, Location], ...] = ()
    package: str = ""

    @property
    def simple_name(self) -> str:
        return self.name.rsplit(".", 1)[-1]

    def shape(self) -> tuple:
        """Location-free view, used to compare decls parsed from different layouts."""
        return (
            self.name,
            self.kind,
            self.extends_name,
            self.implements_names,
            tuple((f.name, f.declared_type, f.access, f.is_instantiation) for f in self.fields),
            tuple((m.name, m.return_type, m.parameter_types, m.access, m.is_constructor) for m in self.methods),
            tuple(sorted(t for t, _ in self.local_instantiations)),
        )


# ---------------------------------------------------------------------------
# tokenizer


def _is_ident_start(c: str) -> bool:
    return c.isalpha() or c in "_$"


def _is_ident_part(c: str) -> bool:
    return c.isalnum() or c in "_$"


def _lex(source: str, file: str) -> list[Token]:
    toks: list[Token] = []
    i, n = 0, len(source)
    line, col = 1, 1

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = source[i]
        if c in " \t\r\n\f":
            advance(1)
            continue
        if source.startswith("//", i):
            j = source.find("\n", i)
            advance((n if j < 0 else j) - i)
            continue
        if source.startswith("/*", i):
            j = source.find("*/", i + 2)
            if j < 0:
                raise UnterminatedComment("unterminated block comment", file, line)
            advance(j + 2 - i)
            continue
        start_line, start_col = line, col
        if source.startswith('"""', i):
            j = i + 3
            while True:
                if j >= n:
                    raise UnterminatedString("unterminated text block", file, start_line)
                if source[j] == "\\":
                    j += 2
                    continue
                if source.startswith('"""', j):
                    j += 3
                    break
                j += 1
            toks.append(Token("literal", source[i:j], file, start_line, start_col))
            advance(j - i)
            continue
        if c in "\"'":
            j = i + 1
            while True:
                if j >= n or source[j] == "\n":
                    raise UnterminatedString("unterminated string or char literal", file, start_line)
                if source[j] == "\\":
                    j += 2
                    continue
                if source[j] == c:
                    j += 1
                    break
                j += 1
            toks.append(Token("literal", source[i:j], file, start_line, start_col))
            advance(j - i)
            continue
        if _is_ident_start(c):
            j = i + 1
            while j < n and _is_ident_part(source[j]):
                j += 1
            word = source[i:j]
            if word in JAVA_KEYWORDS:
                kind = "keyword"
            elif word in LITERAL_WORDS:
                kind = "literal"
            else:
                kind = "identifier"
            toks.append(Token(kind, word, file, start_line, start_col))
            advance(j - i)
            continue
        if c.isdigit() or (c == "." and i + 1 < n and source[i + 1].isdigit()):
            j = i + 1
            while j < n:
                ch = source[j]
                if _is_ident_part(ch) or ch == ".":
                    j += 1
                elif ch in "+-" and source[j - 1] in "eEpP" and not source[i:j].lower().startswith("0x"):
                    j += 1
                elif ch in "+-" and source[j - 1] in "pP":
                    j += 1
                else:
                    break
            toks.append(Token("literal", source[i:j], file, start_line, start_col))
            advance(j - i)
            continue
        for p in MULTI_PUNCT:
            if source.startswith(p, i):
                toks.append(Token("punctuation", p, file, start_line, start_col))
                advance(len(p))
                break
        else:
            toks.append(Token("punctuation", c, file, start_line, start_col))
            advance(1)
    return toks


def _drop_annotations(toks: list[Token]) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(toks)
    while i < n:
        t = toks[i]
        if t.text != "@" or i + 1 >= n:
            out.append(t)
            i += 1
            continue
        nxt = toks[i + 1]
        if nxt.text == "interface":
            out.append(Token("keyword", "@interface", t.file, t.line, t.column))
            i += 2
            continue
        if nxt.kind != "identifier":
            out.append(t)
            i += 1
            continue
        i += 2
        while i + 1 < n and toks[i].text == "." and toks[i + 1].kind == "identifier":
            i += 2
        if i < n and toks[i].text == "(":
            depth = 0
            while i < n:
                if toks[i].text == "(":
                    depth += 1
                elif toks[i].text == ")":
                    depth -= 1
                    if depth == 0:
                        break
                i += 1
            if i >= n:
                raise UnbalancedBraces("unclosed annotation argument list", t.file, t.line)
            i += 1
    return out


def tokenize(source: str, file: str | Path = "<memory>") -> list[Token]:
    """Split Java source into tokens, dropping comments and annotations.

    String, text-block and char literals become single ``literal`` tokens so
    nothing inside them can be mistaken for an identifier.
    """
    return _drop_annotations(_lex(source, str(file)))


# ---------------------------------------------------------------------------
# bracket helpers


_CLOSERS = {"{": "}", "(": ")", "[": "]"}


def _match(toks: Sequence[Token], i: int) -> int:
    """Index of the closer matching the opener at ``toks[i]``."""
    opener = toks[i].text
    closer = _CLOSERS[opener]
    depth = 0
    for j in range(i, len(toks)):
        t = toks[j].text
        if t == opener:
            depth += 1
        elif t == closer:
            depth -= 1
            if depth == 0:
                return j
    raise UnbalancedBraces(f"unclosed '{opener}'", toks[i].file, toks[i].line)


def _match_angle(toks: Sequence[Token], i: int) -> int:
    depth = 0
    for j in range(i, len(toks)):
        t = toks[j].text
        if t == "<":
            depth += 1
        elif t == ">":
            depth -= 1
            if depth == 0:
                return j
        elif t in (";", "{", "}"):
            break
    raise ParseError("unclosed type argument list", toks[i].file, toks[i].line)


def _check_braces(toks: Sequence[Token]) -> None:
    stack: list[Token] = []
    for t in toks:
        if t.text == "{":
            stack.append(t)
        elif t.text == "}":
            if not stack:
                raise UnbalancedBraces("unmatched '}'", t.file, t.line)
            stack.pop()
    if stack:
        last = stack[-1]
        raise UnbalancedBraces("unclosed '{'", last.file, last.line)


def normalize_type(toks: Iterable[Token]) -> str:
    """Raw base type name: generic arguments, array suffixes, varargs and modifiers removed."""
    parts: list[str] = []
    depth = 0
    for t in toks:
        if t.text == "<":
            depth += 1
        elif t.text == ">":
            depth -= 1
        elif depth == 0 and t.text not in ("[", "]", "...", "final", "?"):
            parts.append(t.text)
    return "".join(parts)


# ---------------------------------------------------------------------------
# class bodies


def _split_top(toks: Sequence[Token], sep: str = ",") -> list[list[Token]]:
    parts: list[list[Token]] = [[]]
    depth = 0
    for t in toks:
        if t.text in ("<", "(", "[", "{"):
            depth += 1
        elif t.text in (">", ")", "]", "}"):
            depth -= 1
        if t.text == sep and depth == 0:
            parts.append([])
        else:
            parts[-1].append(t)
    return [p for p in parts if p]


def _param_types(toks: Sequence[Token]) -> list[str]:
    types = []
    for param in _split_top(toks):
        while param and param[-1].text in ("[", "]"):
            param = param[:-1]
        if len(param) < 2 or param[-1].text == "this":
            continue
        types.append(normalize_type(param[:-1]))
    return types


def scan_code(toks: Sequence[Token]) -> list[tuple[str, Location]]:
    """Collect ``new T(`` expressions in a block of statements.

    Anonymous class creations (``new T() {...}``) and array creations are not
    reported; the statements inside an anonymous body are still scanned.
    """
    found = []
    n = len(toks)
    for i, t in enumerate(toks):
        if t.text != "new":
            continue
        j = i + 1
        name_toks = []
        while j < n and (toks[j].kind == "identifier" or toks[j].text == "." or toks[j].text in PRIMITIVES):
            name_toks.append(toks[j])
            j += 1
        if j < n and toks[j].text == "<":
            j = _match_angle(toks, j) + 1
            # Outer<A>.Inner
            while j < n and (toks[j].kind == "identifier" or toks[j].text == "."):
                name_toks.append(toks[j])
                j += 1
        if not name_toks or j >= n or toks[j].text != "(":
            continue
        close = _match(toks, j)
        if close + 1 < n and toks[close + 1].text == "{":
            continue
        found.append((normalize_type(name_toks), Location(t.file, t.line)))
    return found


def _skip_initializer(toks: Sequence[Token], i: int) -> int:
    """Index of the ``,`` or ``;`` that ends the initializer starting at ``i``."""
    n = len(toks)
    depth = 0
    while i < n:
        t = toks[i].text
        if t in ("(", "[", "{"):
            depth += 1
        elif t in (")", "]", "}"):
            depth -= 1
        elif depth == 0 and t in (",", ";"):
            return i
        elif t == "new" or (t == "." and i + 1 < n and toks[i + 1].text == "<"):
            # type arguments after `new` / explicit generic call may contain commas
            j = i + 1
            while j < n and (toks[j].kind == "identifier" or toks[j].text == "."):
                j += 1
            if j < n and toks[j].text == "<":
                i = _match_angle(toks, j) + 1
                continue
        i += 1
    return n


@dataclass
class _Body:
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodSignature] = field(default_factory=list)
    locals: list[tuple[str, Location]] = field(default_factory=list)
    nested: list[int] = field(default_factory=list)  # token indices of nested type keywords


def _type_decl_end(toks: Sequence[Token], i: int) -> int:
    """Index of the closing brace of the type declaration whose keyword sits at ``i``."""
    j = i
    while j < len(toks) and toks[j].text != "{":
        if toks[j].text in (";", "}"):
            raise ParseError("type declaration without a body", toks[i].file, toks[i].line)
        j += 1
    if j >= len(toks):
        raise UnbalancedBraces("type declaration without a body", toks[i].file, toks[i].line)
    return _match(toks, j)


def _scan_body(toks: Sequence[Token], class_name: str, interface: bool) -> _Body:
    body = _Body()
    default_access = "public" if interface else "package"
    i, n = 0, len(toks)
    while i < n:
        t = toks[i]
        if t.text == ";":
            i += 1
            continue
        access = None
        while i < n and toks[i].text in MODIFIERS:
            access = ACCESS_WORDS.get(toks[i].text, access)
            i += 1
        if i >= n:
            break
        t = toks[i]
        if t.text == "{":
            end = _match(toks, i)
            body.locals.extend(scan_code(toks[i + 1 : end]))
            i = end + 1
            continue
        if t.text in TYPE_KEYWORDS:
            body.nested.append(i)
            i = _type_decl_end(toks, i) + 1
            continue
        if t.text == "<":
            i = _match_angle(toks, i) + 1
        access = access or default_access

        # header: everything up to the first `(`, `=`, `,`, `;` or `{` outside type arguments
        j, angle = i, 0
        while j < n:
            x = toks[j].text
            if x == "<":
                angle += 1
            elif x == ">":
                angle -= 1
            elif angle == 0 and x in ("(", "=", ",", ";", "{"):
                break
            j += 1
        if j >= n:
            raise ParseError("incomplete member declaration", toks[i].file, toks[i].line)
        header = list(toks[i:j])
        stop = toks[j].text

        if stop == "(":
            if not header or header[-1].kind != "identifier":
                raise ParseError("malformed method header", toks[j].file, toks[j].line)
            name_tok = header[-1]
            close = _match(toks, j)
            params = _param_types(toks[j + 1 : close])
            ret_toks = header[:-1]
            ctor = not ret_toks
            ret = "void" if ctor else normalize_type(ret_toks)
            body.methods.append(
                MethodSignature(
                    name=name_tok.text,
                    return_type=ret,
                    parameter_types=tuple(params),
                    access=access,
                    location=Location(name_tok.file, name_tok.line),
                    is_constructor=ctor and name_tok.text == class_name,
                )
            )
            k = close + 1
            while k < n and toks[k].text not in ("{", ";"):
                if toks[k].text == "default":
                    k = _skip_initializer(toks, k + 1)
                    break
                k += 1
            if k < n and toks[k].text == "{":
                end = _match(toks, k)
                body.locals.extend(scan_code(toks[k + 1 : end]))
                i = end + 1
            else:
                i = k + 1
            continue

        if stop == "{":
            # record compact constructors and similar shapes carry no coupling data
            end = _match(toks, j)
            body.locals.extend(scan_code(toks[j + 1 : end]))
            i = end + 1
            continue

        # field declaration, possibly with several declarators
        decl = header
        while decl and decl[-1].text in ("[", "]"):
            decl = decl[:-1]
        if len(decl) < 2:
            raise ParseError("malformed field declaration", toks[i].file, toks[i].line)
        ftype = normalize_type(decl[:-1])
        name_tok = decl[-1]
        k = j
        while True:
            inst = False
            if toks[k].text == "=":
                inst = k + 1 < n and toks[k + 1].text == "new"
                k = _skip_initializer(toks, k + 1)
            body.fields.append(FieldDecl(name_tok.text, ftype, access, inst, Location(name_tok.file, name_tok.line)))
            if k >= n or toks[k].text == ";":
                break
            # `,` : next declarator is NAME [dims] [= init]
            k += 1
            if k >= n or toks[k].kind != "identifier":
                raise ParseError("malformed field declarator", toks[k - 1].file, toks[k - 1].line)
            name_tok = toks[k]
            k += 1
            while k < n and toks[k].text in ("[", "]"):
                k += 1
            if k >= n:
                break
        i = k + 1
    return body


def extract_members(class_body_tokens: Sequence[Token], class_name: str = "", interface: bool = False):
    """Split one class body into ``(fields, methods, local_instantiations)``.

    Nested type declarations are skipped here; :func:`parse_classes` handles them.
    """
    body = _scan_body(class_body_tokens, class_name, interface)
    return body.fields, body.methods, body.locals


def _type_list(toks: Sequence[Token]) -> list[str]:
    return [normalize_type(p) for p in _split_top(toks)]


def _parse_type(toks: Sequence[Token], i: int, outer: str, package: str) -> tuple[list[ClassDecl], int]:
    kw = toks[i]
    if i + 1 >= len(toks) or toks[i + 1].kind != "identifier":
        raise MissingClassName(f"'{kw.text}' without a name", kw.file, kw.line)
    simple = toks[i + 1].text
    name = f"{outer}.{simple}" if outer else simple
    kind = "interface" if kw.text in ("interface", "@interface") else "class"

    j = i + 2
    clauses: dict[str, list[Token]] = defaultdict(list)
    current = None
    while j < len(toks) and toks[j].text != "{":
        t = toks[j]
        if t.text == "<" and current is None:
            j = _match_angle(toks, j) + 1
            continue
        if t.text == "(" and current is None:  # record components
            j = _match(toks, j) + 1
            continue
        if t.text in ("extends", "implements") or t.text == "permits":
            current = t.text
        elif t.text in (";", "}"):
            raise ParseError(f"'{name}' has no body", t.file, t.line)
        elif current:
            clauses[current].append(t)
        j += 1
    if j >= len(toks):
        raise UnbalancedBraces(f"'{name}' has no body", kw.file, kw.line)
    end = _match(toks, j)
    body_toks = toks[j + 1 : end]

    extends = _type_list(clauses["extends"])
    implements = _type_list(clauses["implements"])
    extends_name = extends[0] if extends else None
    if len(extends) > 1:  # interface extending several interfaces
        implements = extends[1:] + implements

    if kw.text == "enum":
        # members start after the constant list, at the first top-level `;`
        depth, start = 0, len(body_toks)
        for k, t in enumerate(body_toks):
            if t.text in ("(", "{", "["):
                depth += 1
            elif t.text in (")", "}", "]"):
                depth -= 1
            elif t.text == ";" and depth == 0:
                start = k + 1
                break
        body_toks = body_toks[start:]

    body = _scan_body(body_toks, simple, kind == "interface")

    decl = ClassDecl(
        name=name,
        kind=kind,
        extends_name=extends_name,
        implements_names=tuple(implements),
        fields=tuple(body.fields),
        methods=tuple(body.methods),
        location=Location(kw.file, kw.line),
        local_instantiations=tuple(body.locals),
        package=package,
    )
    out = [decl]
    for k in body.nested:
        nested, _ = _parse_type(body_toks, k, name, package)
        out.extend(nested)
    return out, end


def parse_classes(tokens: Sequence[Token]) -> list[ClassDecl]:
    """Every class, interface, enum and annotation type in one compilation unit."""
    _check_braces(tokens)
    decls: list[ClassDecl] = []
    package = ""
    i, n = 0, len(tokens)
    while i < n:
        t = tokens[i]
        if t.text == "package":
            j = i + 1
            while j < n and tokens[j].text != ";":
                j += 1
            package = "".join(x.text for x in tokens[i + 1 : j])
            i = j + 1
        elif t.text in TYPE_KEYWORDS and not (i > 0 and tokens[i - 1].text in (".", "::")):
            found, end = _parse_type(tokens, i, "", package)
            decls.extend(found)
            i = end + 1
        elif t.text == "{":
            i = _match(tokens, i) + 1
        else:
            i += 1
    return decls


def parse_source(source: str, file: str | Path = "<memory>") -> list[ClassDecl]:
    return parse_classes(tokenize(source, file))


# ---------------------------------------------------------------------------
# registry


class ClassRegistry:
    """Dense ids for the user-defined classes of one corpus.

    Labels are the qualified class names; a name declared in more than one
    file is prefixed with enough of the file path to make it unique.
    """

    def __init__(self, decls: Sequence[ClassDecl]):
        by_name: dict[str, list[ClassDecl]] = defaultdict(list)
        for d in decls:
            by_name[d.name].append(d)

        labelled: list[tuple[str, ClassDecl]] = []
        for name, group in by_name.items():
            if len(group) == 1:
                labelled.append((name, group[0]))
                continue
            log.warning(
                "class %s is declared in %d files (%s); qualifying by file",
                name, len(group), ", ".join(sorted(d.location.file for d in group)),
            )
            for prefix, d in zip(_unique_prefixes([d.location.file for d in group]), group):
                labelled.append((f"{prefix}:{name}", d))

        labelled.sort(key=lambda x: x[0])
        self.labels: list[str] = [lab for lab, _ in labelled]
        self.decls: list[ClassDecl] = [d for _, d in labelled]
        self.ids: dict[str, int] = {lab: k for k, lab in enumerate(self.labels)}
        self._declared: dict[str, list[int]] = defaultdict(list)
        self._simple: dict[str, list[int]] = defaultdict(list)
        for k, d in enumerate(self.decls):
            self._declared[d.name].append(k)
            self._simple[d.simple_name].append(k)
        self._by_decl = {id(d): k for k, d in enumerate(self.decls)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self.ids

    def id_of(self, decl: ClassDecl) -> int:
        return self._by_decl[id(decl)]

    def lookup(self, type_name: str, context: ClassDecl | None = None) -> int | None:
        """ClassId a type reference points at, or None for primitives and external types."""
        if not type_name or type_name in PRIMITIVES:
            return None
        if type_name in self.ids and context is None:
            return self.ids[type_name]

        candidates = []
        if context is not None:
            scope = context.name
            while scope:
                candidates.append(f"{scope}.{type_name}")
                scope = scope.rpartition(".")[0]
        candidates.append(type_name)
        parts = type_name.split(".")
        # com.example.Foo -> Foo, pkg.Outer.Inner -> Outer.Inner
        while len(parts) > 1 and parts[0][:1].islower():
            parts = parts[1:]
            candidates.append(".".join(parts))

        for cand in candidates:
            hits = self._declared.get(cand)
            if hits:
                return self._pick(hits, context)
        if "." not in type_name:
            hits = self._simple.get(type_name)
            if hits:
                return self._pick(hits, context)
        return None

    def _pick(self, hits: list[int], context: ClassDecl | None) -> int | None:
        if len(hits) == 1:
            return hits[0]
        if context is None:
            return None
        same_file = [h for h in hits if self.decls[h].location.file == context.location.file]
        if len(same_file) == 1:
            return same_file[0]
        same_pkg = [h for h in hits if context.package and self.decls[h].package == context.package]
        if len(same_pkg) == 1:
            return same_pkg[0]
        here = str(Path(context.location.file).parent)
        same_dir = [h for h in hits if str(Path(self.decls[h].location.file).parent) == here]
        if len(same_dir) == 1:
            return same_dir[0]
        return None


def _unique_prefixes(files: list[str]) -> list[str]:
    split = [list(Path(f).with_suffix("").parts) for f in files]
    longest = max(len(p) for p in split)
    for k in range(1, longest + 1):
        prefixes = ["/".join(p[-k:]) for p in split]
        if len(set(prefixes)) == len(prefixes):
            return prefixes
    return [f"{'/'.join(p)}#{n}" for n, p in enumerate(split)]


def build_registry(decls: Sequence[ClassDecl]) -> ClassRegistry:
    return ClassRegistry(decls)


# ---------------------------------------------------------------------------
# corpus loading


@dataclass
class Corpus:
    decls: list[ClassDecl]
    files: list[str]
    skipped: list[tuple[str, str]] = field(default_factory=list)


def find_java_files(paths: Iterable[str | Path]) -> list[Path]:
    files: set[Path] = set()
    for p in map(Path, paths):
        if p.is_dir():
            for f in p.rglob("*.java"):
                rel = f.relative_to(p).parts
                if any(part.startswith(".") for part in rel[:-1]) or not f.is_file():
                    continue
                files.add(f)
        elif p.is_file():
            files.add(p)
        else:
            raise FileNotFoundError(p)
    return sorted(files, key=lambda f: f.as_posix())


def load_corpus(paths: Iterable[str | Path], lenient: bool = False) -> Corpus:
    """Parse every ``.java`` file reachable from ``paths``.

    With ``lenient`` a file that fails to tokenize or parse is recorded in
    ``skipped`` instead of aborting the whole corpus.
    """
    decls: list[ClassDecl] = []
    files = find_java_files(paths)
    skipped = []
    for f in files:
        text = f.read_bytes().decode("utf-8", errors="replace")
        try:
            decls.extend(parse_source(text, f.as_posix()))
        except ParseError as exc:
            if not lenient:
                raise
            log.warning("skipping %s: %s", f.as_posix(), exc)
            skipped.append((f.as_posix(), str(exc)))
    return Corpus(decls, [f.as_posix() for f in files], skipped)
