"""Build the scripted git repository used to exercise the history miner.

Creates six commits with a known violation history and writes
expected.json next to the repository recording, per commit subject,
which rules each commit introduces and how many fixes a patch for it
should contain:

  1 init          two clean .java files
  2 docs          README only (no .java change)
  3 add-s4973     introduces one S4973 violation in Foo.java
  4 shuffle       moves that violation within Foo.java (no new ones)
  5 add-s2142-s2184  introduces one S2142 and one S2184 in Util.java
  6 merge-side    merge bringing in a clean Side.java

Commits 3 and 5 are the only introducing ones, so a scan must emit
exactly three patches: (3, S4973), (5, S2142), (5, S2184).
"""

import argparse
import json
import subprocess
from pathlib import Path

FOO_CLEAN = """\
public class Foo {
    public String greet(String name) {
        return "hi " + name;
    }
}
"""

UTIL_CLEAN = """\
public class Util {
    static int twice(int x) {
        return x * 2;
    }
}
"""

FOO_S4973 = """\
public class Foo {
    public String greet(String name) {
        return "hi " + name;
    }

    public boolean sameName(String a, String b) {
        return a == b;
    }
}
"""

FOO_S4973_MOVED = """\
public class Foo {
    public boolean sameName(String a, String b) {
        return a == b;
    }

    public String greet(String name) {
        return "hi " + name;
    }
}
"""

UTIL_S2142_S2184 = """\
public class Util {
    static int twice(int x) {
        return x * 2;
    }

    static void pause() {
        try {
            Thread.sleep(100);
        } catch (InterruptedException e) {
            e.printStackTrace();
        }
    }

    static long weekMillis() {
        long ms = 7 * 24 * 60 * 60 * 1000;
        return ms;
    }
}
"""

SIDE_CLEAN = """\
public class Side {
    public int size() {
        return 1;
    }
}
"""

EXPECTED = {
    "commits": 6,
    "javaTouchingCommits": 5,
    "introducing": [
        {"subject": "add string identity comparison", "rules": {"S4973": 1}},
        {
            "subject": "add pause helper and week constant",
            "rules": {"S2142": 1, "S2184": 1},
        },
    ],
    "patches": 3,
    "fixedPerPatch": {"S4973": 1, "S2142": 1, "S2184": 1},
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("target", help="directory to create the repository in")
    args = parser.parse_args()
    build(Path(args.target))


def build(repo: Path) -> dict:
    repo.mkdir(parents=True, exist_ok=True)
    tick = [0]

    def git(*cmd: str) -> None:
        tick[0] += 1
        date = f"2021-03-{tick[0]:02d}T12:00:00"
        subprocess.run(
            ["git", "-C", str(repo), *cmd],
            check=True,
            capture_output=True,
            env={
                "GIT_AUTHOR_NAME": "fixture",
                "GIT_AUTHOR_EMAIL": "fixture@example.com",
                "GIT_COMMITTER_NAME": "fixture",
                "GIT_COMMITTER_EMAIL": "fixture@example.com",
                "GIT_AUTHOR_DATE": date,
                "GIT_COMMITTER_DATE": date,
                "HOME": str(repo),
                "PATH": "/usr/bin:/bin:/usr/local/bin",
            },
        )

    def write(name: str, text: str) -> None:
        (repo / name).write_text(text, encoding="utf-8")

    git("init", "-q", "-b", "main")
    write("Foo.java", FOO_CLEAN)
    write("Util.java", UTIL_CLEAN)
    git("add", "Foo.java", "Util.java")
    git("commit", "-q", "-m", "add greeting and math helpers")

    write("README.md", "fixture repository\n")
    git("add", "README.md")
    git("commit", "-q", "-m", "describe the project")

    write("Foo.java", FOO_S4973)
    git("add", "Foo.java")
    git("commit", "-q", "-m", "add string identity comparison")

    write("Foo.java", FOO_S4973_MOVED)
    git("add", "Foo.java")
    git("commit", "-q", "-m", "reorder methods")

    write("Util.java", UTIL_S2142_S2184)
    git("add", "Util.java")
    git("commit", "-q", "-m", "add pause helper and week constant")

    git("checkout", "-q", "-b", "side", "HEAD~1")
    write("Side.java", SIDE_CLEAN)
    git("add", "Side.java")
    git("commit", "-q", "-m", "add side helper")
    git("checkout", "-q", "main")
    git("merge", "-q", "--no-ff", "-m", "merge side helper", "side")

    expected_path = repo.parent / "expected.json"
    expected_path.write_text(json.dumps(EXPECTED, indent=2) + "\n", encoding="utf-8")
    return EXPECTED


if __name__ == "__main__":
    main()
