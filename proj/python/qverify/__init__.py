"""Exact verification of q-series identities."""

from ._qverify import (
    OutOfDomain,
    QVerifyError,
    UnknownIdentity,
    expand,
    gauss_binomial,
    list_identities,
    run_cli,
    verify,
    verify_theorem,
    verify_transformation,
)


def parse_series(text):
    """Turn "e:c e:c" into {exponent: Fraction}."""
    from fractions import Fraction

    out = {}
    for item in text.split():
        e, c = item.split(":")
        out[int(e)] = Fraction(c)
    return out


__all__ = [
    "OutOfDomain",
    "QVerifyError",
    "UnknownIdentity",
    "expand",
    "gauss_binomial",
    "list_identities",
    "parse_series",
    "run_cli",
    "verify",
    "verify_theorem",
    "verify_transformation",
]
