import sys, time, functools
print = functools.partial(print, flush=True)
sys.path.insert(0, "src")
from nodalci import nodal, catalog, groebner
from nodalci.ring import random_form

inst = catalog.build_row("14")
ring = inst.ring
mins = nodal.jacobian_matrix(inst.x_ideal.gens, ring).minors(1)
J = groebner.ideal(ring, *(list(inst.x_ideal.gens) + mins))
t0 = time.time()
J.groebner()
print("gb %.1fs" % (time.time() - t0))

g0 = random_form(ring, 1, seed=("probe", 0))
t0 = time.time()
Q = groebner._quotient_single_homog(J, g0)
print("homog quotient %.1fs" % (time.time() - t0), "none" if Q is None else len(Q.gens))
if Q is not None:
    t0 = time.time()
    gb = Q.groebner()
    print("Q gb %.1fs len %d" % (time.time() - t0, len(gb)))
    t0 = time.time()
    same = Q == J
    print("eq check %.1fs -> %s" % (time.time() - t0, same))
