"""Hand-written Java corpora with hand-derived evidence multisets.

Each entry maps a name to the compilation units and the expected
``(source, target, kind) -> count`` multiset. Kinds use the short names
inherit / decl / param / return.
"""

from collections import Counter
from pathlib import Path

from design_analyzer.interactions import build_interaction_graph
from design_analyzer.java_frontend import build_registry, parse_source

FIX1_FILES = {
    "A.java": "class A { public int x; public void m() {} }",
    "B.java": "class B extends A { }",
    "C.java": "class C { A a = new A(); public A f(A p, A q) { return a; } }",
    "D.java": "class D implements E { public void run(){ B b = new B(); } }",
    "E.java": "interface E { void run(); }",
}

FIXTURES = {
    "fix1": {
        "files": FIX1_FILES,
        "expected": {
            ("B", "A", "inherit"): 1,
            ("C", "A", "decl"): 1,
            ("C", "A", "return"): 1,
            ("C", "A", "param"): 2,
            ("D", "E", "inherit"): 1,
            ("D", "B", "decl"): 1,
        },
    },
    "operation_modifier_variants": {
        "files": {
            "A.java": "class A {}",
            "B.java": """
class B {
    public static A make(int n) { return null; }
    public final A copy() { return null; }
    private A get() { return null; }
    protected static void take(A a, A c) {}
    final void keep(A a) {}
}
""",
        },
        "expected": {("B", "A", "return"): 3, ("B", "A", "param"): 3},
    },
    "object_declarations": {
        "files": {
            "A.java": "class A {}",
            "B.java": """
class B {
    A a = new A();
    private A b;
    A c, d = new A();
}
""",
        },
        "expected": {("B", "A", "decl"): 4},
    },
    "inheritance": {
        "files": {
            "I.java": "interface I {}",
            "J.java": "interface J extends I {}",
            "A.java": "abstract class A {}",
            "B.java": "public class B extends A implements I, J {}",
        },
        "expected": {
            ("J", "I", "inherit"): 1,
            ("B", "A", "inherit"): 1,
            ("B", "I", "inherit"): 1,
            ("B", "J", "inherit"): 1,
        },
    },
    "nested_classes": {
        "files": {
            "Outer.java": """
class Outer {
    Inner in = new Inner();
    static class Inner {
        Outer owner;
        Helper h;
    }
}
""",
            "Helper.java": "class Helper { Outer.Inner make() { return new Outer.Inner(); } }",
        },
        "expected": {
            ("Outer", "Outer.Inner", "decl"): 1,
            ("Outer.Inner", "Outer", "decl"): 1,
            ("Outer.Inner", "Helper", "decl"): 1,
            ("Helper", "Outer.Inner", "return"): 1,
            ("Helper", "Outer.Inner", "decl"): 1,
        },
    },
    "generics_and_arrays": {
        "files": {
            "A.java": "class A {}",
            "B.java": """
import java.util.*;
class B {
    List<A> xs = new ArrayList<A>();
    Map<String, A> m = new HashMap<String, A>(), m2;
    A[] arr;
    A grid[][];
    List<A> all(Map<A, List<A>> in, A... more) { return xs; }
}
""",
        },
        "expected": {("B", "A", "decl"): 2, ("B", "A", "param"): 1},
    },
    "comment_and_string_traps": {
        "files": {
            "A.java": "class A {}",
            "B.java": """
// class Ghost extends A {}
/* class Phantom { A a = new A(); } */
class B {
    String s = "class Fake extends A { A a = new A(); }";
    char c = '{';
    String t = "}";
    /** javadoc: returns A f(A x) */
    void run() { String u = "new A()"; char q = '"'; }
}
""",
        },
        "expected": {},
    },
    "local_instantiations": {
        "files": {
            "A.java": "class A {}",
            "B.java": "class B {}",
            "C.java": """
class C {
    void run() {
        A a = new A();
        B b;
        new B().toString();
        Runnable r = new Runnable() { public void run() { new A(); } };
        A[] arr = new A[3];
    }
    C() { new A(); }
    static { new B(); }
}
""",
        },
        "expected": {("C", "A", "decl"): 3, ("C", "B", "decl"): 2},
    },
    "self_and_external_types": {
        "files": {
            "Node.java": """
class Node extends Thread implements Runnable, Comparable<Node> {
    Node next = new Node();
    Node link(Node other) { return this; }
    String name() { return ""; }
    public int compareTo(Node o) { return 0; }
}
""",
        },
        "expected": {},
    },
    "interfaces_enums_annotations": {
        "files": {
            "Shape.java": "interface Shape { Area area(); double scale(Factor f); }",
            "Area.java": "class Area {}",
            "Factor.java": "class Factor {}",
            "Kind.java": """
enum Kind implements Shape {
    SQUARE, CIRCLE;
    public Area area() { return new Area(); }
    public double scale(Factor f) { return 1; }
}
""",
            "Marker.java": "@interface Marker { Class<?> value() default Object.class; }",
            "User.java": "@Marker(value = Area.class)\nclass User { @Deprecated Kind kind; }",
        },
        "expected": {
            ("Shape", "Area", "return"): 1,
            ("Shape", "Factor", "param"): 1,
            ("Kind", "Shape", "inherit"): 1,
            ("Kind", "Area", "return"): 1,
            ("Kind", "Area", "decl"): 1,
            ("Kind", "Factor", "param"): 1,
            ("User", "Kind", "decl"): 1,
        },
    },
    "modifier_order_constructors_throws": {
        "files": {
            "A.java": "class A {}",
            "E.java": "class E extends Exception {}",
            "B.java": """
class B {
    final static public A one() throws E { return null; }
    static final protected A two(final A x) throws E, java.io.IOException { return x; }
    public B(A a) {}
    synchronized A three() { return null; }
}
""",
        },
        "expected": {("B", "A", "return"): 3, ("B", "A", "param"): 2},
    },
    "qualified_names_and_packages": {
        "files": {
            "com/x/A.java": "package com.x;\npublic class A { }",
            "com/x/B.java": """
package com.x;
import com.x.A;
public class B {
    com.x.A a;
    java.util.List<A> l;
    B(com.x.A a) {}
}
""",
        },
        "expected": {("B", "A", "decl"): 1, ("B", "A", "param"): 1},
    },
    "interface_multiple_extends": {
        "files": {
            "I.java": "interface I {}",
            "J.java": "interface J {}",
            "K.java": "interface K extends I, J { I get(J j); }",
        },
        "expected": {
            ("K", "I", "inherit"): 1,
            ("K", "J", "inherit"): 1,
            ("K", "I", "return"): 1,
            ("K", "J", "param"): 1,
        },
    },
    "generic_methods_lambdas_text_blocks": {
        "files": {
            "A.java": "class A {}",
            "B.java": '''
class B {
    <T extends A> T pick(T t) { return t; }
    Runnable r = () -> { new A(); };
    String doc = """
        class Z { A a = new A(); }
        """;
    java.util.function.Supplier<A> s = A::new;
}
''',
        },
        "expected": {},
    },
}


def parse_files(files: dict) -> list:
    decls = []
    for name in sorted(files):
        decls.extend(parse_source(files[name], name))
    return decls


def graph_of(files: dict):
    decls = parse_files(files)
    return build_interaction_graph(decls, build_registry(decls))


def evidence_multiset(graph) -> Counter:
    names = {n.id: n.name for n in graph.nodes}
    return Counter((names[e.source], names[e.target], e.kind.value) for e in graph.evidences)


def write_fixture(files: dict, root: Path) -> Path:
    for name, text in files.items():
        p = root / name
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text, encoding="utf-8")
    return root
