"""Walk through parsing a diagram code and tracing its regions.

Run as: python3 demos/01_diagram_anatomy.py
"""

from linkcolor import parse_diagram, serialize_diagram, trace_regions, underlying_components

TREFOIL = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)"

print("== Parsing ==")
d = parse_diagram(TREFOIL)
print(f"input:      {TREFOIL}")
print(f"canonical:  {serialize_diagram(d)}")
print(f"crossings:  {d.crossing_count}, free circles: {d.free_circles}")
for i, c in enumerate(d.crossings):
    print(f"  crossing {i}: slots {c.slots}  (0 and 2 under, 1 and 3 over)")

print()
print("== Link components ==")
comps = underlying_components(d)
print(f"underlying closed curves through crossings: {len(comps)}")

print()
print("== Complementary regions ==")
rm = trace_regions(d)
print(f"region count: {rm.region_count} (crossings + 2 for a connected diagram)")
print(f"unbounded region: {rm.unbounded_region}")
for c in range(d.crossing_count):
    print(f"  crossing {c} quadrants -> regions {rm.quadrant_region[c]}")

print()
print("== A split diagram ==")
split = parse_diagram("X(1,2,2,1); X(3,4,4,3); O 1")
rms = trace_regions(split)
print(f"two kinks plus a circle: {rms.region_count} regions,")
print(f"circle interior is region {rms.circle_regions[0]}")

print()
print("== Rejecting a non-planar code ==")
try:
    trace_regions(parse_diagram("X(1,2,1,2)"))
except Exception as exc:
    print(f"X(1,2,1,2) raises {type(exc).__name__}: {exc}")
