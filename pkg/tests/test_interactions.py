import random
import re
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from corpus_fixtures import FIX1_FILES, FIXTURES, evidence_multiset, graph_of, parse_files
from design_analyzer.errors import EmptyCorpus
from design_analyzer.interactions import (
    InteractionKind,
    build_interaction_graph,
    detect_decl_interactions,
    detect_inheritance_interactions,
    detect_param_interactions,
    detect_return_interactions,
)
from design_analyzer.java_frontend import build_registry, parse_source


def run(detector, src, extra=""):
    decls = parse_source(src + "\n" + extra)
    reg = build_registry(decls)
    out = detector(decls[0], reg)
    return [(reg.labels[e.source], reg.labels[e.target], e.kind.value) for e in out]


def test_param_two_arguments():
    assert run(detect_param_interactions, "class C { A f(A p, A q){ return p; } }", "class A {}") == [
        ("C", "A", "param")
    ] * 2


def test_param_primitive_and_self():
    assert run(detect_param_interactions, "class C { void g(int x){} }") == []
    assert run(detect_param_interactions, "class C { void h(C self){} }") == []


def test_return_type():
    assert run(detect_return_interactions, "class C { A f(A p, A q){ return p; } }", "class A {}") == [
        ("C", "A", "return")
    ]
    assert run(detect_return_interactions, "class C { void g(){} }") == []
    assert run(detect_return_interactions, 'class C { String s(){ return ""; } }') == []


def test_object_declaration():
    assert run(detect_decl_interactions, "class C { A a = new A(); }", "class A {}") == [("C", "A", "decl")]
    assert run(detect_decl_interactions, "class D { void run(){ B b = new B(); } }", "class B {}") == [
        ("D", "B", "decl")
    ]
    assert run(detect_decl_interactions, "class C { int n = 3; }") == []


def test_inheritance():
    assert run(detect_inheritance_interactions, "class B extends A {}", "class A {}") == [("B", "A", "inherit")]
    assert run(detect_inheritance_interactions, "class D implements E {}", "interface E {}") == [
        ("D", "E", "inherit")
    ]
    assert run(detect_inheritance_interactions, "class B extends Thread {}") == []


def test_fix1_graph():
    g = graph_of(FIX1_FILES)
    assert evidence_multiset(g) == Counter(FIXTURES["fix1"]["expected"])
    names = {n.id: n.name for n in g.nodes}
    assert {(names[s], names[t]) for s, t in g.ccig_edges} == {("B", "A"), ("C", "A"), ("D", "B"), ("D", "E")}


def test_single_class_graph():
    g = build_interaction_graph(parse_source("class A{}"))
    assert len(g.nodes) == 1 and g.evidences == [] and not g.ccig_edges


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        build_interaction_graph([])


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_oracle(name):
    fx = FIXTURES[name]
    assert evidence_multiset(graph_of(fx["files"])) == Counter(fx["expected"])


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_graph_invariants(name):
    g = graph_of(FIXTURES[name]["files"])
    ids = {n.id for n in g.nodes}
    assert all(e.source != e.target for e in g.evidences)
    assert all(e.source in ids and e.target in ids for e in g.evidences)
    assert g.ccig_edges == {(e.source, e.target) for e in g.evidences}


def test_kind_partition():
    op = {k for k in InteractionKind if k.is_operation_level}
    assert op == {InteractionKind.PARAM_PASS, InteractionKind.RETURN_TYPE}
    assert len(InteractionKind) == 4


@pytest.mark.parametrize("seed", range(8))
def test_file_order_does_not_matter(seed):
    files = dict(FIXTURES["interfaces_enums_annotations"]["files"])
    reference = graph_of(files).evidences
    names = list(files)
    random.Random(seed).shuffle(names)
    decls = [d for n in names for d in parse_source(files[n], n)]
    assert build_interaction_graph(decls).evidences == reference


def test_adding_a_class_is_monotone():
    base = dict(FIX1_FILES)
    before = evidence_multiset(graph_of(base))
    base["F.java"] = "class F extends C { A a; B g(C c) { return null; } }"
    after = evidence_multiset(graph_of(base))
    assert all(after[k] >= v for k, v in before.items())


# -- independent line-based oracle -------------------------------------------
#
# Corpora are generated one statement per line; the oracle reads them with
# plain regexes and never touches the tokenizer or parser.

USER = ["Alpha", "Beta", "Gamma", "Delta", "Eps"]
EXTERNAL = ["String", "int", "Thread", "Object"]
MODS = ["", "public ", "private ", "protected ", "static ", "final ", "public static ", "final static protected "]

HEADER_RE = re.compile(r"^(?:public )?(class|interface) (\w+)(?: extends ([\w, ]+?))?(?: implements ([\w, ]+?))? \{$")
METHOD_RE = re.compile(r"^(?:(?:public|private|protected|static|final) )*(\w+) (\w+)\(([^)]*)\) \{$")
FIELD_RE = re.compile(r"^(?:(?:public|private|protected|static|final) )*(\w+) (\w+)(?: = new (\w+)\(\))?;$")
LOCAL_RE = re.compile(r"new (\w+)\(\)")


def oracle(files):
    found = Counter()
    declared = set()
    for text in files.values():
        for line in text.splitlines():
            m = HEADER_RE.match(line.strip())
            if m:
                declared.add(m.group(2))
    for text in files.values():
        cls, in_method = None, False
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if cls is None:
                m = HEADER_RE.match(line)
                cls = m.group(2)
                for grp in (m.group(3), m.group(4)):
                    for sup in (grp or "").split(","):
                        sup = sup.strip()
                        if sup in declared and sup != cls:
                            found[(cls, sup, "inherit")] += 1
                continue
            if in_method:
                if line == "}":
                    in_method = False
                    continue
                for t in LOCAL_RE.findall(line):
                    if t in declared and t != cls:
                        found[(cls, t, "decl")] += 1
                continue
            if line == "}":
                cls = None
                continue
            m = METHOD_RE.match(line)
            if m:
                ret, params = m.group(1), m.group(3)
                if ret in declared and ret != cls:
                    found[(cls, ret, "return")] += 1
                for p in filter(None, (x.strip() for x in params.split(","))):
                    ptype = p.split()[0]
                    if ptype in declared and ptype != cls:
                        found[(cls, ptype, "param")] += 1
                in_method = True
                continue
            m = FIELD_RE.match(line)
            assert m, line
            if m.group(1) in declared and m.group(1) != cls:
                found[(cls, m.group(1), "decl")] += 1
    return found


@st.composite
def corpora(draw):
    n = draw(st.integers(1, 5))
    names = USER[:n]
    types = st.sampled_from(names + EXTERNAL)
    files = {}
    for name in names:
        lines = []
        ext = draw(st.one_of(st.none(), st.sampled_from(names + ["Thread"])))
        impls = draw(st.lists(st.sampled_from(names + ["Runnable"]), max_size=2, unique=True))
        header = f"class {name}"
        if ext:
            header += f" extends {ext}"
        if impls:
            header += " implements " + ", ".join(impls)
        lines.append(header + " {")
        for k in range(draw(st.integers(0, 4))):
            mod = draw(st.sampled_from(MODS))
            t = draw(types)
            if draw(st.booleans()):
                init = f" = new {t}()" if t != "int" and draw(st.booleans()) else ""
                lines.append(f"    {mod}{t} f{k}{init};")
            else:
                ret = draw(st.sampled_from(names + EXTERNAL + ["void"]))
                params = ", ".join(f"{draw(types)} p{j}" for j in range(draw(st.integers(0, 3))))
                lines.append(f"    {mod}{ret} m{k}({params}) {{")
                for j in range(draw(st.integers(0, 2))):
                    t2 = draw(st.sampled_from(names + ["Object", "String"]))
                    lines.append(f"        {t2} v{j} = new {t2}();")
                lines.append("    }")
        lines.append("}")
        files[f"{name}.java"] = "\n".join(lines) + "\n"
    return files


@settings(max_examples=150, deadline=None)
@given(corpora())
def test_regex_oracle_equivalence(files):
    assert evidence_multiset(graph_of(files)) == oracle(files)


def test_oracle_agrees_on_fix1_shape():
    files = {
        "A.java": "class A {\n    public int x;\n    public void m() {\n    }\n}\n",
        "C.java": "class C {\n    A a = new A();\n    public A f(A p, A q) {\n    }\n}\n",
    }
    assert oracle(files) == Counter({("C", "A", "decl"): 1, ("C", "A", "return"): 1, ("C", "A", "param"): 2})
    assert evidence_multiset(graph_of(files)) == oracle(files)
