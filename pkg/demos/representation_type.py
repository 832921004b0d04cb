"""Finite/infinite type for n = 2 over small primes, plus the certificate
comparing the corner algebra at r = p+1 (p = 7) with Ringel's quiver 32."""

import json

from borelschur.reptype import rep_type, ringel_match

for p in (2, 3, 5, 7):
    row = [f"r={r}:{rep_type(2, r, p).verdict[0]}" for r in range(1, 2 * p + 2)]
    print(f"p={p}  " + " ".join(row))

print(rep_type(3, 2, 2))
ev = ringel_match(2, 8, 7)["evidence"]
summary = {k: v for k, v in ev.items() if k != "quotient_certificate"}
summary["quotient"] = {k: v for k, v in ev["quotient_certificate"].items() if not isinstance(v, dict)}
print(json.dumps(summary, indent=1, default=str))
