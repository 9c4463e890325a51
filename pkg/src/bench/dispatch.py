"""
Dispatch - Run any of the algorithms by name with uniform output.
"""
import hashlib
import json
from typing import Any, List, Optional
from pydantic import BaseModel, ConfigDict
from enum import Enum

from ..exceptions import UsageError
from ..matrix.counter import OpCounter
from ..matrix.dense import Matrix
from ..rings.base import Ring, RingElement
from ..schemas.bench import OutputKind
from ..charpoly import (
    faddeev_leverrier, preparata_sarwate, berkowitz, charpoly_oracle,
    adjugate_from_charpoly, ORACLE_MAX_N,
)
from ..elimination import bareiss_det, fflu_adjugate, field_lu_det, hessenberg_charpoly


class Algorithm(str, Enum):
    """Algorithm names accepted on the command line."""
    PS = "ps"
    FL = "fl"
    BERKOWITZ = "berkowitz"
    BAREISS = "bareiss"
    LU = "lu"
    HESSENBERG = "hessenberg"
    ORACLE = "oracle"

    @property
    def computes(self) -> OutputKind:
        if self in (Algorithm.BAREISS, Algorithm.LU):
            return OutputKind.DETERMINANT
        return OutputKind.CHARPOLY


class RunResult(BaseModel):
    """Uniform view of an algorithm's output."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    algorithm: Algorithm
    coeffs: Optional[List[Any]] = None
    det: Any
    adjugate: Optional[Matrix] = None

    @property
    def computes(self) -> OutputKind:
        return OutputKind.CHARPOLY if self.coeffs is not None else OutputKind.DETERMINANT


def check_applicable(algorithm: Algorithm, ring: Ring, n: Optional[int] = None) -> None:
    """
    Reject ring/algorithm/size combinations before any work is done.

    Args:
        algorithm: Algorithm to run
        ring: Coefficient ring
        n: Matrix size, if known

    Raises:
        UsageError: Incompatible ring or size
        CharacteristicError: FL/PS over a ring where some k <= n is not invertible
    """
    if algorithm in (Algorithm.LU, Algorithm.HESSENBERG) and not ring.is_field:
        raise UsageError(f"{algorithm.value} needs a field, not {ring!r}")
    if algorithm == Algorithm.BAREISS and not ring.is_integral_domain:
        raise UsageError(f"{algorithm.value} needs an integral domain, not {ring!r}")
    if n is None:
        return
    if algorithm in (Algorithm.FL, Algorithm.PS) and n >= 1:
        ring.require_characteristic(n)
    if algorithm == Algorithm.ORACLE and n > ORACLE_MAX_N:
        raise UsageError(f"cofactor oracle is limited to n <= {ORACLE_MAX_N}, got n = {n}")


def run_algorithm(algorithm: Algorithm,
                  a: Matrix,
                  counter: OpCounter,
                  m: Optional[int] = None,
                  with_adjugate: bool = False) -> RunResult:
    """
    Run one algorithm.

    Args:
        algorithm: Algorithm to run
        a: Input matrix
        counter: Operation counter
        m: Block size for ps
        with_adjugate: Also produce the adjugate (through the Cayley-Hamilton
            reconstruction or the FFLU solve for algorithms that lack one)

    Returns:
        RunResult
    """
    ring = a.ring
    check_applicable(algorithm, ring, a.n)

    if algorithm == Algorithm.LU:
        if with_adjugate:
            raise UsageError("lu computes the determinant only")
        return RunResult(algorithm=algorithm, det=field_lu_det(a, counter))

    if algorithm == Algorithm.BAREISS:
        if with_adjugate:
            det, adjugate = fflu_adjugate(a, counter)
            return RunResult(algorithm=algorithm, det=det, adjugate=adjugate)
        return RunResult(algorithm=algorithm, det=bareiss_det(a, counter).det)

    if algorithm == Algorithm.ORACLE:
        coeffs = charpoly_oracle(a)
        det = coeffs[0] if a.n % 2 == 0 else ring.neg(coeffs[0])
    else:
        if algorithm == Algorithm.PS:
            output = preparata_sarwate(a, m, counter)
        elif algorithm == Algorithm.FL:
            output = faddeev_leverrier(a, counter)
        elif algorithm == Algorithm.BERKOWITZ:
            output = berkowitz(a, counter)
        else:
            output = hessenberg_charpoly(a, counter)
        if output.adjugate is not None and with_adjugate:
            return RunResult(algorithm=algorithm, coeffs=output.coeffs,
                             det=output.det, adjugate=output.adjugate)
        coeffs, det = output.coeffs, output.det

    adjugate = adjugate_from_charpoly(a, coeffs, counter) if with_adjugate else None
    return RunResult(algorithm=algorithm, coeffs=coeffs, det=det, adjugate=adjugate)


def _digest(payload: Any) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def output_digest(ring: Ring, result: RunResult) -> str:
    """
    Stable hash of what the algorithm computed.

    Charpoly digests cover coefficients and determinant; determinant-only
    digests cover the determinant, so they never collide across kinds.
    """
    payload = {"kind": result.computes.value, "det": ring.format(result.det)}
    if result.coeffs is not None:
        payload["coeffs"] = [ring.format(c) for c in result.coeffs]
    return _digest(payload)


def det_digest(ring: Ring, det: RingElement) -> str:
    """Hash of the determinant alone, comparable across every algorithm."""
    return _digest({"det": ring.format(det)})


def adjugate_digest(ring: Ring, adjugate: Matrix) -> str:
    """Hash of the adjugate entries, comparable across every algorithm that returns one."""
    return _digest({"adjugate": [[ring.format(x) for x in row] for row in adjugate.rows()]})
