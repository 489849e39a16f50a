"""Growth profiles: psi_Y(n) = [psi_X(n)]_q for Vec, and the Delannoy-type
example where psi_X(n) is an ordered Bell number."""

from lincat.profiles import asymptotic_check, growth_table, ordered_bell, ordered_bell_bruteforce, rows_to_csv

print(rows_to_csv(growth_table("vec", 1, d=2, q=2, decompose=True)))
print(rows_to_csv(growth_table("vec", 3, d=2, q=3)))

print("ordered Bell numbers:", [ordered_bell(n) for n in range(9)])
print("brute force agrees:", all(ordered_bell(n) == ordered_bell_bruteforce(n) for n in range(8)))

# psi_Y = [a(2n)]_2 = 2^a(2n) - 1 is expanded while it fits the bit budget, then kept symbolic
for row in growth_table("delannoy", 4, q=2):
    psi = row.to_json()["psi_lin"]
    shown = psi if isinstance(psi, str) else "%d decimal digits" % len(str(psi))
    print("n=%d a(2n)=%d psi_Y: %s" % (row.n, row.psi_source, shown))

rep = asymptotic_check(1, 64)
print("log a(2n) >= n log n for all n in [%d, 64]; indeterminate: %s" % (rep.threshold, rep.indeterminate))
