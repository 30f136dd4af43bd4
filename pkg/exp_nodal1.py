import sys, time
sys.path.insert(0, "src")
from nodalci import nodal

for rid in ["14", "15", "16", "6", "duval-quintic"]:
    t0 = time.time()
    r = nodal.verify_row(rid)
    print(rid, "%.1fs" % (time.time() - t0), r.to_dict())
