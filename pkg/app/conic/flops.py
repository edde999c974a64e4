from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass
class FlopCounter:
    """Arithmetic-event counter.

    Every scalar multiply, add/subtract/negate, and divide performed through the
    counter is tallied once, independent of operand size.
    """

    adds: int = 0
    muls: int = 0
    divs: int = 0

    def mul(self, a: Any, b: Any) -> Any:
        self.muls += 1
        return a * b

    def add(self, a: Any, b: Any) -> Any:
        self.adds += 1
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        self.adds += 1
        return a - b

    def neg(self, a: Any) -> Any:
        self.adds += 1
        return -a

    def div(self, a: Any, b: Any) -> Any:
        self.divs += 1
        return a / b

    @property
    def total(self) -> int:
        return self.adds + self.muls + self.divs

    def as_dict(self) -> dict[str, int]:
        return {"adds": self.adds, "muls": self.muls, "divs": self.divs, "total": self.total}


@dataclass(frozen=True)
class FlopReport:
    pencil: FlopCounter
    det: FlopCounter

    @property
    def pencil_flops(self) -> int:
        return self.pencil.total

    @property
    def det_flops(self) -> int:
        return self.det.total

    @property
    def ratio(self) -> float:
        return self.pencil_flops / self.det_flops

    def as_dict(self) -> dict[str, Any]:
        return {
            "pencil_flops": self.pencil_flops,
            "det_flops": self.det_flops,
            "ratio": round(self.ratio, 6),
            "pencil": self.pencil.as_dict(),
            "det": self.det.as_dict(),
        }


def flop_report(pts) -> FlopReport:
    # local imports: both constructions import FlopCounter from here
    from app.conic.oracle import conic_oracle_det
    from app.conic.pencil import conic_through_5

    pencil = FlopCounter()
    conic_through_5(pts, counter=pencil, relabel=False)
    det = FlopCounter()
    conic_oracle_det(pts, counter=det)
    return FlopReport(pencil=pencil, det=det)
