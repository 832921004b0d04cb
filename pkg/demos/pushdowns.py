"""Push down the hand-built cover representations to the three base quivers."""

from borelschur.fixtures import cover_reps, covering_fixtures
from borelschur.quivers import pushdown_report

for name, C in covering_fixtures().items():
    print(name)
    for V in cover_reps(name, C):
        rep = pushdown_report(C, V)
        print(f"  {V.name:45s} indecomposable={rep['indecomposable']} "
              f"pushdown indecomposable={rep['pushdown_indecomposable']}")
