#!/usr/bin/env python3
"""Smoke test for the cohrank_py extension module.

Builds nothing itself: locates the compiled cdylib under target/, copies it
next to a temp directory under the import name, and exercises the bindings
against known exact values.

Usage:
    cargo build -p cohrank-py --release   (or debug)
    python3 python/smoke_test.py
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib() -> pathlib.Path:
    candidates = []
    for profile in ("release", "debug"):
        for stem in ("libcohrank_py.so", "libcohrank_py.dylib", "cohrank_py.dll"):
            p = ROOT / "target" / profile / stem
            if p.exists():
                candidates.append(p)
    if not candidates:
        sys.exit(
            "cohrank_py cdylib not found; run `cargo build -p cohrank-py` first"
        )
    return max(candidates, key=lambda p: p.stat().st_mtime)


def import_module():
    lib = locate_cdylib()
    tmp = tempfile.mkdtemp(prefix="cohrank_py_")
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, pathlib.Path(tmp) / f"cohrank_py{suffix}")
    sys.path.insert(0, tmp)
    import cohrank_py  # noqa: E402

    return cohrank_py


def check(label, got, expected):
    if got != expected:
        sys.exit(f"FAIL {label}: got {got!r}, expected {expected!r}")
    print(f"PASS {label}: {got!r}")


def main():
    m = import_module()

    gv = m.Model.gv_subscheme(4, 2)
    check("gv(4,2) h0(1/2)", gv.evaluate(0, "1/2"), "1/16")
    check("gv(4,2) h0(2)", gv.evaluate(0, "2"), "11")
    check("gv(4,2) h2(1/2)", gv.evaluate(2, "1/2"), "7/16")
    check("gv(4,2) classify(1)", gv.classify("1"), "M-regular")
    check("gv(4,2) classify(2)", gv.classify("2"), "IT(0)")
    check("gv(4,2) smoothness index at 0", gv.smoothness_index(0, "0"), 3)
    check("gv(4,2) smoothness index at 1", gv.smoothness_index(0, "1"), 2)
    check("gv(4,2) max critical point", gv.max_critical_point(), "1.000000000000")

    lb = m.Model.line_bundle(["-2", "0", "1"], 2, 1)
    check("line bundle euler", lb.euler(), ["-2", "0", "1"])
    check("line bundle classify(3/2)", lb.classify("3/2"), "IT(0)")
    check("line bundle classify(7/5)", lb.classify("7/5"), "not-GV")
    cps = lb.critical_points()
    check("line bundle critical point count", len(cps), 4)
    check("line bundle top critical decimal", cps[-1][1], "1.414213562373")

    aj = m.Model.abel_jacobi(5)
    check("abel-jacobi h0(2/5)", aj.evaluate(0, "2/5"), "2")
    check("abel-jacobi h1(-1)", aj.evaluate(1, "-1"), "5")
    check("abel-jacobi euler", aj.euler(), ["0", "5"])

    check(
        "invert_neg (t-1)^2",
        m.invert_neg(["1", "-2", "1"], 2, 1),
        ["1", "2", "1"],
    )
    check("invert_pos t^2 over chi=2", m.invert_pos(["0", "0", "1"], 2, 2), ["1/2"])
    check("s_from_beta(1, 2)", m.s_from_beta("1", 2), "1")
    check("s_from_beta(1/3, 2)", m.s_from_beta("1/3", 2), "1/5")

    text = gv.to_text()
    again = m.Model.from_text(text)
    check("model file round trip", again.to_text(), text)

    csv = gv.sample_csv(0, "0", "2", 4, 4)
    check(
        "sample csv second row",
        csv.splitlines()[2],
        "1/2,0.5000,1/16,0.0625",
    )

    rec = gv.recenter(1, 2)
    check("recentered value at 0", rec.evaluate(0, "0"), "16")

    names = m.list_models()
    check("catalog has gv(4,2)", "gv_subscheme_g4_d2" in names, True)

    ok, report = m.verify_catalog()
    if not ok:
        failing = [l for l in report.splitlines() if l.startswith("FAIL")]
        sys.exit("FAIL verify_catalog:\n" + "\n".join(failing))
    print(f"PASS verify_catalog: {len(report.splitlines())} checks")

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
