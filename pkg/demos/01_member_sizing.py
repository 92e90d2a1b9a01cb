"""Size the members of a regular frame, then strengthen them for column loss.

The reference structure is an 8-story, 8-bay reinforced-concrete frame with
6 m bays and 3 m stories carrying 1 kN/m nominal dead and live load.  Normal
gravity design fixes the beam plastic moment and column crushing capacity;
the alternate-path condition (bridge over one removed column) then dictates
how much stronger the members of the bottom stories must be.
"""

from framerisk import FRAME_CATALOG, DamageScenario, Scenario, design_members, validate

scenario = validate(Scenario())
design = design_members(scenario)

print("Reference frame (8 stories x 8 bays, L = 6 m, H = 3 m)")
print(f"  normal-condition beam moment     : {design.b_y_nlc:8.3f} kNm")
print(f"  normal-condition column capacity : {design.r_c_nlc:8.3f} kN")
print(f"  strengthened beam moment         : {design.b_y_0:8.3f} kNm")
print(f"  strengthened column capacity     : {design.r_c_0:8.3f} kN")
print(f"  strengthening factors            : beams x{design.b_sf:.2f}, columns x{design.r_sf:.2f}")
print()

# The column factor depends strongly on the frame aspect ratio: the fewer
# columns share the redistributed load, the more the neighbours must carry.
# The beam factor is a pure function of the damage extent.
print("Strengthening factors across the frame catalog (one column removed):")
print(f"  {'frame':>6}  {'b_sf':>6}  {'r_sf':>6}")
for name, geometry in FRAME_CATALOG.items():
    d = design_members(validate(Scenario(geometry=geometry)))
    print(f"  {name:>6}  {d.b_sf:6.2f}  {d.r_sf:6.2f}")
print()

print("Growing the initial damage raises the beam requirement steeply:")
for n_rc0, n_rs0 in ((1, 1), (2, 1), (3, 2)):
    scn = validate(Scenario(damage=DamageScenario(n_rc0, n_rs0)))
    d = design_members(scn)
    print(f"  {n_rc0} column(s) over {n_rs0} store(y/ies): b_sf = {d.b_sf:.2f}, r_sf = {d.r_sf:.2f}")
