"""Monte-Carlo run: how often does decoding succeed as errors pile up?

An evaluation code over F_7 on a 7 x 5 grid, with the index set chosen to
maximise the designed distance for dimension 14.  Each weight below the
radius must always decode; above it we just count what happens.
"""

from fengrao import GF, build_algebra, construct_code, design_improved_code, semigroup_wb_table
from fengrao import frdecode as fd
from fengrao.simulate import simulate

F = GF(7)
A = build_algebra(F, 2, "graded-lex", [list(range(7)), [1, 2, 3, 4, 5]])
I = design_improved_code(A, 14)
C = construct_code(A, I)
st = fd.setup(A.basis, I, table=semigroup_wb_table(A))
print(f"[{C.n}, {C.dim}] code, designed distance {C.designed_distance}, radius {st.radius}")

print(f"{'weight':>6} {'ok':>5} {'tied':>5} {'none':>5} {'wrong':>5} {'time':>7}")
for w in range(0, st.radius + 4):
    rep = simulate(st, C, weight=w, trials=100, seed=11)
    f = rep.failures
    print(f"{w:>6} {rep.successes:>5} {f['TiedVote']:>5} {f['NoCandidates']:>5} "
          f"{f['WrongCodeword']:>5} {rep.wall_time:>6.2f}s")
