"""Reliability indexes along the design history of the reference frame.

Each collapse mode gets a second-moment (Cornell) index at two live-load
horizons: the 50-year extreme for the intact frame, and the sustained
arbitrary-point-in-time level for the frame conditional on losing a column.
The four columns walk through the design states: sized for normal loads
only, strengthened for element removal, that same strengthened frame seen
after the damage, and the risk-optimal design.
"""

from framerisk import DesignFactors, Scenario, reliability_grid, validate
from framerisk.output import format_value

scenario = validate(Scenario())

# The optimized column uses the risk-optimal factors for p_ld = 0.1
# (computed in demo 05; hard-wired here to keep this demo instant).
header, rows = reliability_grid(scenario, optimized=DesignFactors(0.9, 1.3))

widths = [10, 15, 8, 13, 8, 10]
print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
for row in rows:
    print("  ".join(format_value(v).rjust(w) for v, w in zip(row, widths)))

print()
print("Strengthening lifts the intact-frame bending index from 2.76 to 4.5;")
print("conditional on damage the margins are much thinner (bending ~2.0).")
print("The optimizer then trades beam margin (2.03 -> 1.61) for column")
print("margin (local pancake 1.80 -> 2.62): bending failures are ductile")
print("and confined, pancake failures are brittle and can cascade.")
