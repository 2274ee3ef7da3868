"""hlspin core package."""

from .identities import CATALOG, run_check, run_suite
from .lattice import skew_f, skew_g
from .scalars import Params
from .signatures import Signature


def create_fastapi_app():
    from .http_app import create_fastapi_app as _create_fastapi_app

    return _create_fastapi_app()


__all__ = [
    "CATALOG",
    "Params",
    "Signature",
    "create_fastapi_app",
    "run_check",
    "run_suite",
    "skew_f",
    "skew_g",
]
