"""Growth of tensor powers of the natural SL2 module in characteristic p.

Exact sequences b_n and l_n, a character-theoretic oracle, the Mahler
generating function and its oscillation, and Fourier coefficients.
"""

from .sequences import INF, b_sequence, l_sequence, b_mahler, b_fast_p2, l_product
from .characters import oracle_b, oracle_l
from .asymptotics import t_p, beta, eval_F, eval_F0
from .fourier import fourier_L, hurwitz_zeta, complex_gamma

__version__ = "0.1.0"
