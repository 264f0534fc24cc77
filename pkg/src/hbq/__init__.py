"""hbq: exact and q-deformed Hardy-Berndt / Dedekind sums, Genocchi-type
zeta and l functions, and the verification machinery tying them together."""

from .characters import (DirichletCharacter, character_from_label,
                         characters_mod, chi_eval)
from .core import (ConvergenceError, DomainError, ParityError, PoleError,
                   QParam, QRegime, SeriesValue, VerificationOutcome,
                   as_fraction, qbracket, sawtooth)
from .mellin import (QuadratureConfig, branch_prefactor, mellin_transform,
                     verify_mellin_roundtrip, verify_product_identity)
from .numbers import (NumberKind, NumberTable, bernoulli_polynomial,
                      number_table, q_euler_number, q_genocchi_number)
from .qsums import (DEFAULT_SCHEDULE, HB_SCALE, RegularizationSchedule,
                    YSumResult, classical_trig_series,
                    dedekind_oscillatory_sum, eval_gen, oscillatory_sum,
                    q_dedekind_sum, q_hardy_berndt_sum)
from .qzeta import (cck_zeta, q_alt_l, q_alt_zeta, q_alt_zeta_hurwitz,
                    q_plain_zeta, verify_conductor_decomposition,
                    verify_conductor_decomposition_two_var)
from .sums import (HARDY_VARIANTS, ParityCondition, SumSpec, dedekind_sum,
                   hardy_berndt_sum, parity_condition)
from .zeta import (digamma, genocchi_zeta, genocchi_zeta_exact, hurwitz_zeta,
                   lerch_phi, odd_power_sum, riemann_zeta,
                   zeta_exact_nonpositive, zeta_star)

__version__ = "0.1.0"
