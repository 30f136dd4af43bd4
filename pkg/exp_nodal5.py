import sys, time, functools
print = functools.partial(print, flush=True)
sys.path.insert(0, "src")
from nodalci import nodal

t0 = time.time()
try:
    r = nodal.verify_row("nonnormal-f32", full_jacobian=True)
    print("f32", "%.1fs" % (time.time() - t0), r.to_dict())
except Exception as e:
    print("f32", "%.1fs" % (time.time() - t0), "FAIL", type(e).__name__, e)
