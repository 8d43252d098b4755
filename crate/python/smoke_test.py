"""End-to-end smoke test for the derange_py extension.

Build the module first, then run this script with any Python 3:

    cargo build --release -p derange-py
    python3 python/smoke_test.py

The script copies the built cdylib next to itself under the importable name,
so no installation step is needed.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent
CANDIDATES = [
    ROOT / "target" / "release" / "libderange_py.so",
    ROOT / "target" / "debug" / "libderange_py.so",
]


def load_module():
    src = next((p for p in CANDIDATES if p.exists()), None)
    if src is None:
        sys.exit("module not built; run: cargo build --release -p derange-py")
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="derange-py."))
    shutil.copy2(src, tmp / "derange_py.so")
    sys.path.insert(0, str(tmp))
    import derange_py

    return derange_py


def main():
    dp = load_module()
    checks = 0

    def ok(cond, label):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {label}")
        checks += 1

    a4 = dp.Action.alternating(4)
    ok(a4.order() == 12 and a4.degree() == 4, "A4 shape")
    ok(a4.is_transitive(), "A4 transitive")
    ok(a4.derangement_count() == 3, "A4 has exactly the double transpositions deranged")
    ok(a4.density() == "1", "A4 density is exactly 1")
    report = a4.analyze(strict=True)
    ok(report["ekr"] is True, "A4 has the EKR property")
    ok(report["strict"]["verdict"] is False, "A4 is not strictly coset-maximal")
    ok(report["strict"]["non_coset_witness"], "A4 non-coset witness present")

    s3 = dp.Action.symmetric(3)
    ok(s3.alpha() == 2, "alpha(S3) = 2")
    ok(s3.analyze(strict=True)["strict"]["verdict"] is True, "S3 is strict")

    pairs = dp.Action.alternating(5).on_k_subsets(2)
    ok(pairs.degree() == 10, "A5 on 2-subsets moves 10 points")
    ok(pairs.density() == "2", "its density is exactly 2")
    ok(pairs.alpha() == 12, "its independence number is 12")

    w = s3.wreath(dp.Action.symmetric(2))
    ok(w.descriptor == "S3 wr S2", "wreath descriptor")
    ok(w.order() == 72 and w.degree() == 6, "S3 wr S2 shape")
    ok(w.analyze(strict=True)["strict"]["verdict"] is False, "S3 wr S2 is not strict")

    p = s3.external(dp.Action.symmetric(4))
    ok(p.order() == 144 and p.degree() == 12, "S3 x S4 acts on the 3 * 4 grid")
    ok(p.density() == "1", "product density multiplies")

    gen = dp.Action.from_generators(4, ["(1 2 3)", "(2 3 4)"])
    ok(gen.order() == 12, "explicit generators rebuild A4")

    spec = dp.Action.from_spec(
        '{"constructor": "wreath",'
        ' "inner": {"constructor": "symmetric", "n": 2},'
        ' "outer": {"constructor": "symmetric", "n": 3}}'
    )
    ok(spec.order() == 48 and spec.descriptor == "S2 wr S3", "spec round trip")

    ok("graph " in spec.dot()[:10], "DOT export")

    ids = dp.check_ids()
    ok(len(ids) > 30 and "thm-3.1" in ids, "check registry visible")
    suite = dp.verify_suite(["lem-2.1", "prop-4.3"])
    ok(suite["failed"] == 0 and suite["passed"] == 2, "subset suite passes")

    found = dp.search_multipartite(5, 5)
    ok(found["complete"], "degree-5 search exhausts its space")
    ok(all(w["order"] == 5 for w in found["witnesses"]), "only C5 survives at degree 5")

    print(f"ok: {checks} assertions")


if __name__ == "__main__":
    main()
