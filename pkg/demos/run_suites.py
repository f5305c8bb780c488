"""
Theorem suites from the library API
===================================

Each suite sweeps a corpus and emits one record per graph; a suite passes
when nothing fails (skips carry their reasons).  This runs a few fast ones at
reduced size; the command line reaches the same machinery:

    kernelpaint suite mic-basics --max-n 7 --out report.jsonl --format jsonl
"""

from kernelpaint import run_suite

for name, max_n in [
    ("mic-basics", 6),
    ("at-classify", 5),
    ("kp-classify", 5),
    ("in-orient-oracle", 4),
    ("edges-4critical", 5),
]:
    report = run_suite(name, max_n=max_n)
    s = report.summary()
    print(f"{name:.<20} ok={s['ok']}  pass={s['passed']} "
          f"fail={s['failed']} skip={s['skipped']}")
    for reason, count in sorted(s["skip_reasons"].items()):
        print(f"{'':22}skip[{count:>3}] {reason}")

# a couple of raw records, the same objects the JSONL report serializes
report = run_suite("mic-basics", max_n=4)
print("\nsample records:")
for record in report.records[:3]:
    print(" ", record)
