"""Synthetic Java corpora for fixtures, demos and planted-effect checks.

Names map to one type corpus-wide (``NAME_TYPES``), so any declaration of
``count`` is an ``int`` and any ``ratio`` a ``double``. The generated code is
syntactically valid Java but not meant to compile against real libraries.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .seeding import rng_for

POOLS: Dict[str, List[str]] = {
    "int": "i j k n count idx size len pos step lo hi width height row col offset limit index depth".split(),
    "long": "bytes nanos millis seed mask start elapsed stamp bits acc quota".split(),
    "double": "x y z ratio scale alpha rate weight mean sum dx dy".split(),
    "float": "fx fy gain damp speed angle".split(),
    "String": "name label key text prefix path suffix title".split(),
    "boolean": "done found ok valid dirty ready".split(),
}
NAME_TYPES = {n: t for t, names in POOLS.items() for n in names}
NUMERIC = ("int", "long", "float", "double")

_INT_OPS = ["+", "-", "*", "/", "%", "<<", ">>", ">>>", "&", "|", "^"]
_INT_OP_WEIGHTS = [10, 6, 8, 2, 2, 1, 1, 1, 1, 1, 1]
_FLOAT_OPS = ["+", "-", "*", "/"]
_FLOAT_OP_WEIGHTS = [10, 6, 8, 2]
_REL_OPS = ["<", "<=", ">", ">=", "==", "!="]
_WIDER = {"int": ("int",), "long": ("int", "long"), "float": ("int", "long", "float"), "double": NUMERIC}
_CLASS_WORDS = "Buffer Parser Cache Table Index Router Loader Store Counter Matrix Queue Encoder".split()
_PROJECT_WORDS = "alpha beta gamma delta omega sigma kappa theta lambda zeta".split()


def _literal(rng: random.Random, typ: str) -> str:
    if typ == "int":
        r = rng.random()
        if r < 0.55:
            return str(rng.choice([0, 1, 2, 3, 4, 8, 10, 16, 32, 100]))
        if r < 0.8:
            return str(rng.randint(0, 1000))
        if r < 0.9:
            return hex(rng.randint(0, 255))
        return str(rng.choice([255, 1024, 65535, 1_000_000, 2147483647]))
    if typ == "long":
        r = rng.random()
        if r < 0.5:
            return f"{rng.choice([0, 1, 2, 10, 1000, 60000])}L"
        return f"{rng.randint(0, 10 ** 12)}L"
    if typ == "float":
        return f"{rng.choice(['0.5', '1.0', '2.5', '0.25', '3.0', '1e3', '0.001'])}f"
    if typ == "double":
        return rng.choice(["0.5", "1.0", "2.0", "0.1", "3.14159", "1e-9", "100.0", "0.75", "1000.0"])
    raise ValueError(typ)


class _Method:
    """Local environment of a method under construction."""

    def __init__(self, rng: random.Random, params: Dict[str, str]):
        self.rng = rng
        self.vars: Dict[str, str] = dict(params)
        self.used = set(params)

    def names(self, typ: str) -> List[str]:
        return [n for n, t in self.vars.items() if t == typ]

    def fresh(self, typ: str) -> Optional[str]:
        free = [n for n in POOLS[typ] if n not in self.used]
        if not free:
            return None
        n = self.rng.choice(free)
        self.used.add(n)
        return n

    def leaf(self, typ: str) -> str:
        rng = self.rng
        cands = [n for t in _WIDER.get(typ, (typ,)) for n in self.names(t)]
        if cands and rng.random() < 0.7:
            return rng.choice(cands)
        src = rng.choice(_WIDER.get(typ, (typ,)))
        return _literal(rng, src)

    def expr(self, typ: str, depth: int = 0) -> str:
        rng = self.rng
        if typ == "String":
            parts = [f'"{rng.choice(["id", "x", "", "size=", "n"])}"', self.leaf("int")]
            strs = self.names("String")
            if strs:
                parts.append(rng.choice(strs))
            rng.shuffle(parts)
            return " + ".join(parts[: rng.randint(2, len(parts))])
        if typ == "boolean":
            return self.cond(depth)
        if depth >= 3 or rng.random() < 0.3 + 0.2 * depth:
            leaf = self.leaf(typ)
            if rng.random() < 0.05 and not leaf[0].isdigit():
                return "-" + leaf
            return leaf
        if typ in ("int", "long"):
            op = rng.choices(_INT_OPS, _INT_OP_WEIGHTS)[0]
        else:
            op = rng.choices(_FLOAT_OPS, _FLOAT_OP_WEIGHTS)[0]
        if op in ("<<", ">>", ">>>"):
            right = str(rng.randint(1, 8))
        else:
            right = self.expr(typ if rng.random() < 0.6 else rng.choice(_WIDER[typ]), depth + 1)
        left = self.expr(typ, depth + 1)
        if rng.random() < 0.15:
            left = f"({left})"
        if rng.random() < 0.2:
            right = f"({right})"
        if rng.random() < 0.25 and op in ("+", "*"):
            # multi-operand chain of one type
            extra = self.leaf(typ) if typ in ("int", "long") else None
            if extra is not None and not any(c in left + right for c in "()"):
                return f"{left} {op} {right} {op} {extra}"
        if op in ("/", "%") and rng.random() < 0.7:
            right = _literal(rng, "int") if typ != "float" else "2.0f"
            if right in ("0", "0x0"):
                right = "7"
        return f"{left} {op} {right}"

    def comparison(self) -> str:
        rng = self.rng
        typ = rng.choice(["int", "int", "long", "double"])
        left = self.expr(typ, 2)
        right = self.expr(typ, 2) if rng.random() < 0.6 else _literal(rng, typ)
        return f"{left} {rng.choice(_REL_OPS)} {right}"

    def cond(self, depth: int = 0) -> str:
        rng = self.rng
        c = self.comparison()
        r = rng.random()
        if r < 0.2 and depth < 2:
            return f"{c} && {self.comparison()}"
        if r < 0.3 and depth < 2:
            return f"({c}) || ({self.comparison()})"
        bools = self.names("boolean")
        if r < 0.38 and bools:
            return f"!{rng.choice(bools)} && {c}"
        return c


def _statements(m: _Method, n: int, indent: str, depth: int = 0) -> List[str]:
    rng = m.rng
    out: List[str] = []
    for _ in range(n):
        r = rng.random()
        if r < 0.35:
            typ = rng.choice(["int", "int", "long", "double", "float", "String", "boolean"])
            name = m.fresh(typ)
            if name is None:
                continue
            rhs = m.expr(typ)
            m.vars[name] = typ
            out.append(f"{indent}{typ} {name} = {rhs};")
        elif r < 0.55:
            cands = [v for v in m.vars if m.vars[v] in NUMERIC]
            if not cands:
                continue
            v = rng.choice(cands)
            op = rng.choice(["=", "=", "+=", "-=", "*="])
            out.append(f"{indent}{v} {op} {m.expr(m.vars[v])};")
        elif r < 0.68 and depth < 2:
            out.append(f"{indent}if ({m.cond()}) {{")
            out.extend(_block(m, rng.randint(1, 2), indent + "    ", depth + 1))
            if rng.random() < 0.3:
                out.append(f"{indent}}} else {{")
                out.extend(_block(m, 1, indent + "    ", depth + 1))
            out.append(f"{indent}}}")
        elif r < 0.76 and depth < 2:
            loop = m.fresh("int")
            if loop is None:
                continue
            bound = rng.choice(m.names("int") or ["10"]) if rng.random() < 0.6 else _literal(rng, "int")
            out.append(f"{indent}for (int {loop} = 0; {loop} < {bound}; {loop}++) {{")
            scope = dict(m.vars)
            m.vars[loop] = "int"
            out.extend(_statements(m, rng.randint(1, 2), indent + "    ", depth + 1))
            out.append(f"{indent}}}")
            m.vars = scope
        elif r < 0.84:
            strs = m.names("String")
            arg = rng.choice(strs) if strs else '"done"'
            out.append(f"{indent}System.out.println({arg} + {m.leaf('int')});")
        elif r < 0.9:
            nums = [v for v in m.vars if m.vars[v] in NUMERIC]
            if nums:
                v = rng.choice(nums)
                out.append(f"{indent}{v} = Math.max({v}, {m.expr(m.vars[v], 2)});")
        else:
            out.append(f"{indent}log(\"{rng.choice(['tick', 'step', 'flush'])}\", {m.leaf('int')});")
    return out


def _block(m: _Method, n: int, indent: str, depth: int) -> List[str]:
    # names declared inside a block go out of scope at its end
    scope = dict(m.vars)
    out = _statements(m, n, indent, depth)
    m.vars = scope
    return out


def generate_method(rng: random.Random, index: int, max_statements: int = 8) -> str:
    ret = rng.choice(["int", "long", "double", "boolean", "void"])
    n_params = rng.randint(0, 3)
    params: Dict[str, str] = {}
    for _ in range(n_params):
        typ = rng.choice(["int", "int", "long", "double", "String"])
        free = [n for n in POOLS[typ] if n not in params]
        params[rng.choice(free)] = typ
    m = _Method(rng, params)
    name = rng.choice(["compute", "update", "apply", "scan", "measure", "step", "resolve", "fill"]) + str(index)
    plist = ", ".join(f"{t} {n}" for n, t in params.items())
    body = _statements(m, rng.randint(2, max_statements), "        ")
    if ret == "void":
        tail = []
    elif ret == "boolean":
        tail = [f"        return {m.cond()};"]
    else:
        tail = [f"        return {m.expr(ret)};"]
    lines = [f"    public {ret} {name}({plist}) {{"] + body + tail + ["    }"]
    return "\n".join(lines)


def _extras(rng: random.Random, cls: str) -> List[str]:
    """Constructs the frontend must handle: lambdas, anonymous classes, equals."""
    out = []
    r = rng.random()
    if r < 0.3:
        out.append(
            "    public boolean equals(Object o) {\n"
            f"        if (!(o instanceof {cls})) return false;\n"
            f"        {cls} that = ({cls}) o;\n"
            "        return this.size == that.size;\n"
            "    }"
        )
    if rng.random() < 0.3:
        out.append(
            "    void sortAll(java.util.List<Integer> items) {\n"
            "        int limit = 10;\n"
            "        items.sort((a, b) -> a - b);\n"
            "        items.removeIf(v -> v > limit);\n"
            "    }"
        )
    if rng.random() < 0.2:
        out.append(
            "    Runnable task() {\n"
            "        int count = 0;\n"
            "        return new Runnable() {\n"
            "            public void run() { int n = 1; log(\"run\", n + 1); }\n"
            "        };\n"
            "    }"
        )
    return out


def generate_class(rng: random.Random, cls: str, package: str, n_methods: int = 4) -> str:
    parts = [f"package {package};", "", "import java.util.List;", "", f"public class {cls} {{"]
    parts.append(f"    private int size = {rng.randint(1, 64)};")
    parts.append(f"    private double scale = {_literal(rng, 'double')};")
    parts.append("")
    for i in range(n_methods):
        parts.append(generate_method(rng, i))
        parts.append("")
    parts.extend(e + "\n" for e in _extras(rng, cls))
    parts.append("    static void log(String tag, int v) {")
    parts.append("        System.out.println(tag + v);")
    parts.append("    }")
    parts.append("}")
    return "\n".join(parts) + "\n"


def write_corpus(
    root,
    n_projects: int = 4,
    files_per_project: int = 5,
    seed: int = 0,
    methods_per_file: int = 4,
) -> List[Path]:
    """Write ``n_projects`` project directories of generated classes under ``root``."""
    root = Path(root)
    written = []
    for p in range(n_projects):
        project = f"{_PROJECT_WORDS[p % len(_PROJECT_WORDS)]}{p // len(_PROJECT_WORDS) or ''}"
        for f in range(files_per_project):
            rng = rng_for(seed, "synth", p, f)
            cls = f"{rng.choice(_CLASS_WORDS)}{f}"
            sub = rng.choice(["core", "util", "io"])
            path = root / project / "src" / sub / f"{cls}.java"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(generate_class(rng, cls, f"org.{project}.{sub}", methods_per_file), encoding="utf-8")
            written.append(path)
    return written


# -- planted convention -----------------------------------------------------------------

def planted_method(rng: random.Random, index: int, n_lines: int) -> List[str]:
    """Method whose every comparison reads ``identifier < literal``."""
    m = _Method(rng, {})
    lines = [f"    public int check{index}(int limit) {{"]
    m.vars["limit"] = "int"
    m.used.add("limit")
    body: List[str] = []
    while len(body) < n_lines:
        r = rng.random()
        ints = m.names("int")
        if r < 0.3 or not ints:
            name = m.fresh("int")
            if name is None:
                m = _Method(rng, {"limit": "int"})
                continue
            m.vars[name] = "int"
            body.append(f"        int {name} = {rng.randint(0, 50)};")
        elif r < 0.65:
            v = rng.choice(ints)
            body.append(f"        if ({v} < {rng.randint(1, 500)}) {{")
            body.append(f"            {v} = {v} + {rng.randint(1, 9)};")
            body.append("        }")
        elif r < 0.8:
            v = rng.choice(ints)
            body.append(f"        while ({v} < {rng.randint(1, 500)}) {v}++;")
        else:
            v = rng.choice(ints)
            body.append(f"        total += {v};")
    lines.append("        int total = 0;")
    lines.extend(body)
    lines.append("        return total;")
    lines.append("    }")
    return lines


def planted_corpus(n_lines: int, seed: int, lines_per_file: int = 200, start_index: int = 0) -> List[str]:
    """Java sources totalling roughly ``n_lines`` lines of the planted style."""
    sources = []
    total = 0
    f = start_index
    while total < n_lines:
        rng = rng_for(seed, "planted", f)
        out = [f"class Planted{f} {{"]
        k = 0
        while len(out) < lines_per_file:
            out.extend(planted_method(rng, k, rng.randint(8, 20)))
            k += 1
        out.append("}")
        sources.append("\n".join(out) + "\n")
        total += len(out)
        f += 1
    return sources


def write_sources(root, sources: Sequence[str], project: str = "planted") -> List[Path]:
    root = Path(root) / project / "src"
    root.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, src in enumerate(sources):
        p = root / f"File{i:04d}.java"
        p.write_text(src, encoding="utf-8")
        paths.append(p)
    return paths
