"""Run every verification suite and summarize; the CLI `levelzero verify` does the same."""

from levelzero.qmodule import suite_names, verify_suite

for name in suite_names():
    r = verify_suite(name)
    print(f"{name:24s} {r.status:12s} checks={r.checks}")
    if r.counterexamples:
        print("   first counterexample:", r.counterexamples[0])
