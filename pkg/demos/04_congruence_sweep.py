#!/usr/bin/env python3
"""Parameter sweep of all checks, plus the fault-injection self-test."""

from quadchow import SweepConfig, render_markdown, run_sweep

config = SweepConfig(n_lo=1, n_hi=8, j_lo=0, j_hi=2, m_max=6,
                     wu_d_hi=3, wu_r_hi=4, coeffsum_k_hi=4, chern_dims=(1, 3, 7))
reports = run_sweep(config)
failed = [r for r in reports if not r.passed]
print("sweep over n <= %d: %d reports, %d failed" % (config.n_hi, len(reports), len(failed)))

by_check = {}
for r in reports:
    by_check[r.check] = by_check.get(r.check, 0) + 1
for name in sorted(by_check):
    print("  %-8s %4d checks" % (name, by_check[name]))

print("\nWith one binomial parity flipped the same sweep must break:")
mutated = run_sweep(SweepConfig(n_lo=3, n_hi=6, j_lo=0, j_hi=1, m_max=4,
                                checks=("thm1", "chern"), chern_dims=(3, 7),
                                mutation=True))
bad = [r for r in mutated if not r.passed]
print("  %d of %d mutated checks failed (as they must)" % (len(bad), len(mutated)))
if bad:
    print("  first failing residual:", bad[0].residual)

print("\nMarkdown report for one small family:")
small = run_sweep(SweepConfig(n_lo=4, n_hi=4, j_lo=0, j_hi=1, checks=("lemma22",)))
print(render_markdown(small))
