"""Step-by-step majority-voting decoding of one received word.

The [9, 4, 4] code from the first demo corrects one error.  We flip the last
symbol of a codeword and watch the unknown syndromes being voted in, one
round at a time, together with the known part of the syndrome matrix.
"""

import numpy as np

from fengrao import GF, IndexSet, build_algebra, construct_code, encode, semigroup_wb_table
from fengrao import frdecode as fd

F = GF(5)
A = build_algebra(F, 2, "graded-lex", [[1, 2, 3], [1, 2, 3]])
I = IndexSet(9, (1, 2, 3, 5))
C = construct_code(A, I)

c = encode(C, [4, 3, 2, 1])
e = np.zeros(9, dtype=np.int64)
e[8] = 1
r = F.add(c, e)
print("codeword:", c.tolist())
print("received:", r.tolist())

st = fd.setup(A.basis, I, table=semigroup_wb_table(A))
print("designed distance", st.designed_distance, "-> corrects", st.radius, "error(s)")

state = fd.init_syndromes(st, r)
print("syndromes known from r:", state.syndromes())

res = fd.decode(st, r, record_grid=True)
for rnd in res.transcript:
    print(f"\nround l = {rnd.l}")
    for row in rnd.grid:
        print("   ", " ".join(str(x) for x in row))
    print("  candidates:", rnd.candidates)
    print("  votes:     ", rnd.votes, "->", rnd.value)

print("\nall syndromes:", res.syndromes)
print("error found: ", res.error.tolist())
print("corrected:   ", res.codeword.tolist(), "ok" if np.array_equal(res.codeword, c) else "WRONG")
