import sys, time, functools
print = functools.partial(print, flush=True)
sys.path.insert(0, "src")
from nodalci import nodal, catalog, groebner

t0 = time.time()
inst = catalog.build_row("18")
print("build %.1fs" % (time.time() - t0)); t0 = time.time()
d_ideal = inst.surface.ideal
bl = nodal._base_locus_degree(d_ideal)
print("base locus", bl, "%.1fs" % (time.time() - t0)); t0 = time.time()
ring = inst.ring
cover, mapping, cdeg = nodal.covering_model(ring)
up_x = groebner.ideal(cover, *(g.substitute(mapping, target=cover) for g in inst.x_ideal.gens))
up_d = groebner.ideal(cover, *(g.substitute(mapping, target=cover) for g in d_ideal.gens))
print("cover deg", cdeg, "up_x degs", [g.wdeg() for g in up_x.gens], "%.1fs" % (time.time() - t0)); t0 = time.time()
mins = nodal.jacobian_matrix(up_x.gens, cover).minors(2)
print("minors", len(mins), [m.wdeg() for m in mins if m], "%.1fs" % (time.time() - t0)); t0 = time.time()
keep = []
for m in mins:
    r = up_x.normal_form(m)
    if not r.is_zero:
        keep.append(r)
print("nf reduce %.1fs, kept %d" % (time.time() - t0, len(keep))); t0 = time.time()
J = groebner.ideal(cover, *(list(up_x.gens) + keep))
J.groebner()
print("gb %.1fs len %d" % (time.time() - t0, len(J.groebner()))); t0 = time.time()
print("dim", groebner.dimension(J), "deg", groebner.degree(J), "%.1fs" % (time.time() - t0)); t0 = time.time()
S = nodal.saturate_points(J)
print("sat %.1fs deg %d" % (time.time() - t0, groebner.degree(S))); t0 = time.time()
print("radical deg", groebner.degree(groebner.radical_zero_dim(S)), "%.1fs" % (time.time() - t0))
