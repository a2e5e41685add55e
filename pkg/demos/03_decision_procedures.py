"""Decision procedures: nonpositivity, renormalization, constants, equality.

Run:  python3 demos/03_decision_procedures.py
"""

from twa import (
    MAX_PLUS,
    WeightedAutomaton,
    decide_equal_const,
    decide_equal_const_on_support,
    decide_nonpositive,
    decide_series_equal,
    decide_series_leq,
    fatou_normalize,
    zoo,
)
from twa.format import serialize

print("== is every coefficient <= 0 ? ==")
drift_down = WeightedAutomaton.from_arcs(
    MAX_PLUS, "a", 1, initial=[(0, 0)], final=[(0, 0)], arcs=[(0, "a", 0, -1)]
)
print("  weight -1 loop:", decide_nonpositive(drift_down))

drift_up = WeightedAutomaton.from_arcs(
    MAX_PLUS,
    "ab",
    2,
    initial=[(0, -10)],
    final=[(1, -10)],
    arcs=[(0, "a", 1, 0), (1, "b", 1, 1), (1, "a", 0, 0)],
)
verdict = decide_nonpositive(drift_up)
print("  slow positive loop :", verdict)
print("  the witness is pumped high enough to verify exactly:",
      drift_up.eval(verdict.witness), "> 0")

print()
print("== renormalizing a nonpositive series ==")
chain = WeightedAutomaton.from_arcs(
    MAX_PLUS, "a", 2, initial=[(0, 0)], final=[(1, -1)], arcs=[(0, "a", 1, 1)]
)
print("before (note the +1 arc):")
print(serialize(chain))
print("after (same series, every weight <= 0):")
print(serialize(fatou_normalize(chain)))

print("== constant series ==")
flat = WeightedAutomaton.from_arcs(
    MAX_PLUS, "ab", 1, initial=[(0, 0)], final=[(0, 3)],
    arcs=[(0, "a", 0, 0), (0, "b", 0, 0)],
)
print("  constantly 3 on all words:", decide_equal_const(flat, 3))
print("  constantly 0?            :", decide_equal_const(flat, 0))

one_word = WeightedAutomaton.from_arcs(
    MAX_PLUS, "a", 2, initial=[(0, 0)], final=[(1, 0)], arcs=[(0, "a", 1, 2)]
)
print("  single word, on support  :", decide_equal_const_on_support(one_word, 2))
print("  same, on all words       :", decide_equal_const(one_word, 2),
      "(the empty word is missing)")

print()
print("== a max-plus series vs a min-plus series ==")
amax, bmin = zoo.sample_equivalent_pair()
print("  the sample pair is equal :", decide_series_equal(amax, bmin))
print("  and therefore also <=    :", decide_series_leq(amax, bmin))

dented = WeightedAutomaton.from_arcs(
    bmin.semiring, bmin.alphabet, bmin.n,
    initial=[(0, 0)], final=[(0, 0)],
    arcs=[(s, ch, d, w - (1 if (s, ch, d) == (0, "a", 0) else 0))
          for s, ch, d, w in bmin.arcs()],
)
verdict = decide_series_equal(amax, dented)
print("  after denting one arc    :", verdict)
print("  values at the witness    :", amax.eval(verdict.witness), "vs",
      dented.eval(verdict.witness))
