import sys, time, functools
print = functools.partial(print, flush=True)
sys.path.insert(0, "src")
from nodalci import nodal

for rid in ["1", "2", "10", "12", "17", "18", "19", "20"]:
    t0 = time.time()
    try:
        r = nodal.verify_row(rid)
        print(rid, "%.1fs" % (time.time() - t0), r.to_dict())
    except Exception as e:
        print(rid, "%.1fs" % (time.time() - t0), "FAIL", type(e).__name__, e)
