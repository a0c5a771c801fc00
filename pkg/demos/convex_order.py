"""The doubly infinite convex order on real roots coming from a periodic reduced word."""

from levelzero.cartan import datum
from levelzero.weyl import ConvexOrderSequence, factor_translation, in_R_greater, period_word, validate_period_word

for rank in (1, 2, 3):
    d = datum("A", rank)
    f = factor_translation(d.fund_coweight(1))
    print(f"A{rank}: translation by the first fundamental coweight = tau {f.tau} * word {f.word}")
    seq = ConvexOrderSequence(d, period_word(d))
    for k in range(-2, 4):
        b = seq.beta(k)
        print(f"  beta_{k:+d} = {b.coords}  {'R>' if in_R_greater(b) else 'R<'}")
    print("  window |k| <= 200 valid:", validate_period_word(seq, -200, 200).passed)
