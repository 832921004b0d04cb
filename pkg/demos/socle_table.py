"""Which simples occur in the socle of S(B+,n,r), with the predicted answer."""

from borelschur.ar import socle_report, socle_table_tsv

for n, r, p in [(2, 4, 2), (2, 8, 3), (3, 4, 2)]:
    print(f"# n={n} r={r} p={p}")
    print(socle_table_tsv(socle_report(n, r, p)))
