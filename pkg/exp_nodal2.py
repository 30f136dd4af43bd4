import sys, time, functools
print = functools.partial(print, flush=True)
sys.path.insert(0, "src")
from nodalci import nodal, catalog, groebner

t0 = time.time()
inst = catalog.build_row("14")
print("build %.1fs" % (time.time() - t0)); t0 = time.time()
d_ideal = inst.surface.ideal
bl = nodal._base_locus_degree(d_ideal)
print("base locus", bl, "%.1fs" % (time.time() - t0)); t0 = time.time()
ring = inst.ring
mins = nodal.jacobian_matrix(inst.x_ideal.gens, ring).minors(1)
print("minors", len(mins), [m.wdeg() for m in mins], "%.1fs" % (time.time() - t0)); t0 = time.time()
J = groebner.ideal(ring, *(list(inst.x_ideal.gens) + mins))
gb = J.groebner()
print("gb", len(gb), "%.1fs" % (time.time() - t0)); t0 = time.time()
print("dim", groebner.dimension(J), "%.1fs" % (time.time() - t0)); t0 = time.time()
sat = groebner.saturation(J, nodal.irrelevant_ideal(ring))
print("sat %.1fs" % (time.time() - t0)); t0 = time.time()
print("deg", groebner.degree(sat), "%.1fs" % (time.time() - t0))
