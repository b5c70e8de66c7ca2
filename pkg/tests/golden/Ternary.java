class D { int f(int a, int b) { int c = (a + b) * 2; return c < a ? c : b; } }
