from typing import Optional


class CavityMemoryError(RuntimeError):
    pass


# parameters and grids
class InvalidParamsError(CavityMemoryError):
    pass


class InvalidGridError(CavityMemoryError):
    pass


class GridMismatchError(CavityMemoryError):
    pass


# photon shapes
class ShapeError(CavityMemoryError):
    pass


class OutsideSupportError(ShapeError):
    pass


# synthesis
class SynthesisError(CavityMemoryError):
    pass


class InfeasibleCoupling(SynthesisError):
    def __init__(
            self,
            text: str,
            cooperativity: float,
            time: Optional[float] = None,
            rho_ee: Optional[float] = None,
    ) -> None:
        super().__init__(text)
        self.cooperativity = cooperativity
        self.time = time
        self.rho_ee = rho_ee


class DivergentPulse(SynthesisError):
    def __init__(self, text: str, time: float, rho_ee: float) -> None:
        super().__init__(text)
        self.time = time
        self.rho_ee = rho_ee


class ZeroRho0(SynthesisError):
    pass


class PulseLimitExceeded(SynthesisError):
    def __init__(self, text: str, peak: float, limit: float) -> None:
        super().__init__(text)
        self.peak = peak
        self.limit = limit


# experiments
class OverlapError(CavityMemoryError):
    pass


class NormalizationError(CavityMemoryError):
    pass


# command line
class ConfigError(CavityMemoryError):
    pass


class PulseFileError(CavityMemoryError):
    def __init__(
            self,
            text: str,
            row: Optional[int] = None,
            column: Optional[str] = None,
    ) -> None:
        if row is not None:
            text = f"row {row}: {text}"
        if column is not None:
            text = f"{text} (column `{column}`)"
        super().__init__(text)
        self.row = row
        self.column = column
