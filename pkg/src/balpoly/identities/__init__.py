"""Catalogued identities and their exact verification."""

from ..series import DomainError
from .engine import (
    DEPTHS,
    PROFILES,
    SUITES,
    VERDICTS,
    IdentityRecord,
    UnknownIdentityError,
    VerificationReport,
    all_records,
    default_grid,
    difference,
    get_record,
    suite_records,
    verify,
    verify_suite,
)

__all__ = [
    "DEPTHS", "PROFILES", "SUITES", "VERDICTS", "IdentityRecord", "UnknownIdentityError",
    "VerificationReport", "all_records", "default_grid", "difference", "get_record",
    "suite_records", "verify", "verify_suite", "DomainError",
]
