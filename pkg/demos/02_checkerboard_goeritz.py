"""From a shading to the Goeritz matrix, step by step.

Run as: python3 demos/02_checkerboard_goeritz.py
"""

from linkcolor import (
    adjusted_goeritz,
    checkerboard,
    checkerboard_graphs,
    goeritz_index,
    goeritz_matrix,
    parse_diagram,
    trace_regions,
)

FIGURE_EIGHT = "X(2,1,4,5); X(5,6,7,3); X(6,4,1,8); X(8,2,3,7)"

d = parse_diagram(FIGURE_EIGHT)
rm = trace_regions(d)
s0, s1 = checkerboard(rm)

print("== The two checkerboard shadings ==")
for s in (s0, s1):
    print(f"shading {s.index}: shaded {list(s.shaded_regions())}, "
          f"unshaded {list(s.unshaded_regions())}")
print("(the unbounded region is unshaded in shading 0)")

print()
print("== Checkerboard graphs ==")
gs, gu = checkerboard_graphs(d, rm, s0)
print(f"shaded graph: {len(gs.vertices)} vertices, {len(gs.edges)} edges, "
      f"{gs.component_count} component(s)")
print(f"unshaded graph: {len(gu.vertices)} vertices, {len(gu.edges)} edges, "
      f"{gu.component_count} component(s)")

print()
print("== Crossing signs ==")
for c in range(d.crossing_count):
    print(f"  crossing {c}: eta = {goeritz_index(rm, s0, c):+d}")

print()
print("== Goeritz matrix ==")
data = goeritz_matrix(d, rm, s0)
print(f"unshaded regions, in order: {data.unshaded_regions}")
for row in data.matrix.entries:
    print("  " + " ".join(f"{v:3d}" for v in row))
print("rows sum to zero; the matrix is the Laplacian of the signed")
print("unshaded graph.")

print()
print("== Adjusted form ==")
print(f"beta_s = {data.beta_s}, so the adjusted matrix pads "
      f"{data.beta_s - 1} zero row/column pair(s):")
for row in data.adjusted.entries:
    print("  " + " ".join(f"{v:3d}" for v in row))

print()
print("== Padding example with a split diagram ==")
split = parse_diagram("O 2")
rms = trace_regions(split)
ds = goeritz_matrix(split, rms, checkerboard(rms)[0])
print(f"two circles, shading 0: raw matrix {ds.matrix.to_lists()}, "
      f"beta_s = {ds.beta_s}")
print(f"adjusted: {adjusted_goeritz(ds.matrix, ds.beta_s).to_lists()}")
