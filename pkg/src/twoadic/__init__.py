"""Interleaved binary sequences and their 2-adic complexity."""

from .adic import AdicProfile, VerificationReport, lemma3_check, s_of_2, two_adic_profile
from .bitseq import (
    AutocorrSpectrum,
    BitSequence,
    autocorrelation,
    autocorrelation_spectrum,
    complement,
    cyclic_shift,
    deinterleave,
    imbalance,
    interleave,
)
from .constructions import (
    GmwParams,
    TwoPrimeParams,
    build_gmw_modified,
    build_two_prime_modified,
    trace_m_sequence,
)
from .fcsr import RationalApprox, approximate, expand, minimal_by_bruteforce, security_margin
from .gf2k import GF2kField

__version__ = "0.1.0"
