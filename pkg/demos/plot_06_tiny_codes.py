"""
Brute force on tiny codes
=========================

Enumerates all pairs of 2-coalitions of very small RS codes and reports
which of them contain a non-separated pair.
"""

from rssep import CodeParams, exhaustive_sep_check, make_field
from rssep.oracles import BudgetExceeded

for q in (3, 4, 5):
    F = make_field(*{3: (3, 1), 4: (2, 2), 5: (5, 1)}[q])
    for k in range(1, q + 1):
        params = CodeParams(F, k)
        try:
            rep = exhaustive_sep_check(params, 2)
        except BudgetExceeded as exc:
            print(f"q={q} k={k}: skipped ({exc})")
            continue
        print(f"q={q} k={k} d={params.d}: {rep.verdict.value}", rep.U or "", rep.V or "")
