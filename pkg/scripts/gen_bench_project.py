"""Generate a deterministic synthetic Java project for performance runs.

Emits a tree of .java files totalling roughly ten thousand lines. Most code
is violation-free filler; a seeded minority of files carries one violation
per rule so a mine+repair pass over the project exercises every template.
Identical seed and size always produce byte-identical output.
"""
from __future__ import annotations

import argparse
import random
from pathlib import Path

FILLER_METHOD = """\
    int method{i}(int a, int b) {{
        int total = a + b + {i};
        for (int k = 0; k < {bound}; k++) {{
            total += k % {mod};
        }}
        if (total > {threshold}) {{
            total -= {threshold};
        }}
        return total;
    }}
"""

VIOLATION_SNIPPETS = {
    "S1217": """\
    void kickThread{i}(Runnable work) {{
        Thread worker = new Thread(work);
        worker.run();
    }}
""",
    "S1860": None,  # handled via a dedicated field + method pair below
    "S2095": """\
    int readByte{i}(String path) throws java.io.IOException {{
        java.io.FileInputStream in = new java.io.FileInputStream(path);
        int b = in.read();
        return b;
    }}
""",
    "S2111": """\
    java.math.BigDecimal price{i}() {{
        return new java.math.BigDecimal({value});
    }}
""",
    "S2116": """\
    String showArray{i}(int[] data) {{
        return data.toString();
    }}
""",
    "S2142": """\
    void pause{i}() {{
        try {{
            Thread.sleep({millis}L);
        }} catch (InterruptedException e) {{
            e.printStackTrace();
        }}
    }}
""",
    "S2184": """\
    long scaled{i}(int seconds) {{
        long ms = seconds * {factor};
        return ms;
    }}
""",
    "S2225": """\
    @Override
    public String toString() {{
        return null;
    }}
""",
    "S2272": None,  # emitted as a dedicated iterator class
    "S4973": """\
    boolean sameText{i}(String a, String b) {{
        return a == b;
    }}
""",
}

S1860_SNIPPET = """\
    private final String tag{i} = "tag";

    void guarded{i}() {{
        synchronized (tag{i}) {{
            System.out.println("guarded");
        }}
    }}
"""

S2272_CLASS = """\
package {pkg};

import java.util.Iterator;

public class {name} implements Iterator<Integer> {{
    private int cursor;
    private final int limit = {limit};

    public boolean hasNext() {{
        return cursor < limit;
    }}

    public Integer next() {{
        cursor++;
        return cursor;
    }}
}}
"""

RULES = sorted(VIOLATION_SNIPPETS)


def _filler_class(pkg: str, name: str, methods: int, rng: random.Random) -> str:
    parts = [f"package {pkg};\n", "\n", f"public class {name} {{\n"]
    for i in range(methods):
        parts.append(
            FILLER_METHOD.format(
                i=i,
                bound=rng.randrange(3, 40),
                mod=rng.randrange(2, 9),
                threshold=rng.randrange(50, 500),
            )
        )
        parts.append("\n")
    parts.pop()
    parts.append("}\n")
    return "".join(parts)


def _violation_member(rule: str, i: int, rng: random.Random) -> str:
    if rule == "S1860":
        return S1860_SNIPPET.format(i=i)
    template = VIOLATION_SNIPPETS[rule]
    return template.format(
        i=i,
        value=f"{rng.randrange(1, 99)}.{rng.randrange(1, 99)}",
        millis=rng.randrange(10, 5000),
        factor=rng.choice([1000, 3600, 86400]),
    )


def generate(root: Path, target_lines: int = 10_000, seed: int = 2024) -> dict:
    rng = random.Random(seed)
    root.mkdir(parents=True, exist_ok=True)
    total_lines = 0
    file_count = 0
    violations_planted: dict[str, int] = {r: 0 for r in RULES}
    rule_cycle = 0
    while total_lines < target_lines:
        pkg = f"bench.mod{file_count % 7}"
        pkg_dir = root / Path(*pkg.split("."))
        pkg_dir.mkdir(parents=True, exist_ok=True)
        # Every third file gets one violation so repair has real work to do.
        if file_count % 3 == 2:
            rule = RULES[rule_cycle % len(RULES)]
            rule_cycle += 1
            if rule == "S2272":
                name = f"BenchIterator{file_count}"
                text = S2272_CLASS.format(pkg=pkg, name=name, limit=rng.randrange(3, 30))
            else:
                name = f"Bench{file_count}"
                body = _violation_member(rule, file_count, rng)
                filler = FILLER_METHOD.format(i=99, bound=5, mod=3, threshold=60)
                text = (
                    f"package {pkg};\n\npublic class {name} {{\n"
                    + body
                    + "\n"
                    + filler
                    + "}\n"
                )
            violations_planted[rule] += 1
        else:
            name = f"Filler{file_count}"
            text = _filler_class(pkg, name, methods=rng.randrange(6, 12), rng=rng)
        (pkg_dir / f"{name}.java").write_text(text, encoding="utf-8")
        total_lines += text.count("\n")
        file_count += 1
    return {
        "files": file_count,
        "lines": total_lines,
        "violations": violations_planted,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", help="directory to generate into")
    ap.add_argument("--lines", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    summary = generate(Path(args.out), target_lines=args.lines, seed=args.seed)
    print(
        f"generated {summary['files']} files, {summary['lines']} lines, "
        f"violations per rule: {summary['violations']}"
    )


if __name__ == "__main__":
    main()
