"""heegner-forge: the prime-rich quadratic family n^2 - (2Zk-1)n + ((2Zk-1)^2+H)/4
for Heegner H, with density analytics, structured key generation and
symmetric channel allocation."""

from .bateman_horn import (BatemanHornEstimate, DeltaApprox, ExactProduct,
                           ResidueCensus, RichnessReport, approx_constant,
                           exact_constant, expected_count_simple,
                           expected_count_sum, logarithmic_integral, omega,
                           residue_census, richness_report)
from .channels import ChannelPlan, build_plan, frequency_report, mirror_channel
from .density import (ScanRecord, ScanReport, export_report, k_sweep,
                      merge_reports, parse_report, scan, symmetry_check)
from .errors import *  # noqa: F401,F403 - typed error surface
from .keygen import (KeygenConfig, StructuredKeyPair, StructuredPrime,
                     baseline_random_prime, deserialize_keypair,
                     generate_keypair, generate_structured_prime, integer_sqrt,
                     recover_zk, rsa_roundtrip, serialize_keypair)
from .optimizer import (OptimizationResult, evaluate_candidates, optimal_zk,
                        sweep_verify)
from .polynomial import (CONSTRUCTIBLE_HEEGNER, HEEGNER_NUMBERS,
                         ComplexRootPair, FamilyParams, QuadraticPolynomial,
                         construct, euler_rabinowitsch, famous_catalog,
                         from_product)
from .primality import (PrimalityVerdict, Verdict, fermat_test, is_prime,
                        jacobi_symbol, miller_rabin, sieve, solovay_strassen,
                        wilson_oracle)

__version__ = "0.1.0"
