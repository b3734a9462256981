"""S3-varieties in sl_3 and sl_4."""

from poisson_poincare import S3Variety, s3_poincare
from poisson_poincare.s3 import s3_ih_poly, s3_p_zero

for lam, mu in [((3,), (2, 1)), ((3,), (1, 1, 1)), ((2, 2), (2, 1, 1)), ((4,), (1, 1, 1, 1))]:
    v = S3Variety(lam, mu)
    print(f"lam={v.lam} mu={v.mu} dim={v.dim}")
    print("  Q(x)   =", s3_ih_poly(v))
    print("  P(0,y) =", s3_p_zero(v))
    print("  P(x,y) =", s3_poincare(v))
