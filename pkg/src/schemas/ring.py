"""
Ring descriptor schema definitions.
"""
from typing import Optional
from pydantic import BaseModel, Field, model_validator
from enum import Enum


class RingKind(str, Enum):
    """Supported coefficient rings."""
    INTEGERS = "int"
    RATIONALS = "rational"
    INTEGERS_MOD = "intmod"
    POLY_OVER_INTEGERS = "polyint"


class RingSpec(BaseModel):
    """
    Serializable ring descriptor, as found in matrix files and bench flags.

    The modulus is kept as a decimal string so that arbitrarily large moduli
    survive JSON round-trips.
    """

    kind: RingKind
    modulus: Optional[str] = Field(default=None, description="Decimal modulus (intmod only)")

    @model_validator(mode="after")
    def _check_modulus(self) -> "RingSpec":
        if self.kind == RingKind.INTEGERS_MOD:
            if self.modulus is None:
                raise ValueError("intmod ring requires a modulus")
            text = self.modulus.strip()
            if not (text.isascii() and text.isdigit()):
                raise ValueError(f"modulus must be a decimal integer, got {self.modulus!r}")
            if int(text) < 2:
                raise ValueError(f"modulus must be >= 2, got {text}")
            self.modulus = str(int(text))
        elif self.modulus is not None:
            raise ValueError(f"ring kind {self.kind.value!r} takes no modulus")
        return self

    @property
    def modulus_value(self) -> Optional[int]:
        return int(self.modulus) if self.modulus is not None else None

    @property
    def label(self) -> str:
        """Compact form used on the command line and in bench records."""
        if self.kind == RingKind.INTEGERS_MOD:
            return f"{self.kind.value}:{self.modulus}"
        return self.kind.value

    @classmethod
    def parse_flag(cls, text: str) -> "RingSpec":
        """
        Parse the `--ring` flag form: int, rational, polyint or intmod:<m>.

        Args:
            text: Flag value

        Returns:
            RingSpec
        """
        kind, _, modulus = text.strip().partition(":")
        return cls(kind=kind, modulus=modulus or None)
