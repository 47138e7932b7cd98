class C { A a = new A(); public A f(A p, A q) { return a; } }
