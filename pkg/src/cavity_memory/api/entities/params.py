import math
from dataclasses import dataclass, replace

from cavity_memory.api.exceptions import InvalidParamsError
from .units import mhz_to_rad, rad_to_mhz

DEFAULT_RHO0 = 0.005


@dataclass(frozen=True)
class CavityParams:
    """
    Atom-cavity parameters.

    :param g: atom-cavity coupling, rad/s
    :param kappa: cavity field decay rate, rad/s
    :param gamma: atomic polarization decay rate, rad/s
    :param rho0: initial population of ``|e,0>`` assumed by the synthesis
    """

    g: float
    kappa: float
    gamma: float
    rho0: float = DEFAULT_RHO0

    def __post_init__(self):
        for name in ("g", "kappa", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise InvalidParamsError(
                    f"`{name}` must be positive and finite, got {value!r}",
                )
        if not 0 <= self.rho0 < 1:
            raise InvalidParamsError(
                f"`rho0` must be in [0, 1), got {self.rho0!r}",
            )

    @classmethod
    def from_mhz(
            cls,
            g_mhz: float,
            kappa_mhz: float,
            gamma_mhz: float,
            rho0: float = DEFAULT_RHO0,
    ) -> "CavityParams":
        return cls(
            g=mhz_to_rad(g_mhz),
            kappa=mhz_to_rad(kappa_mhz),
            gamma=mhz_to_rad(gamma_mhz),
            rho0=rho0,
        )

    def to_mhz(self) -> tuple:
        return (
            rad_to_mhz(self.g),
            rad_to_mhz(self.kappa),
            rad_to_mhz(self.gamma),
        )

    def with_rho0(self, rho0: float) -> "CavityParams":
        return replace(self, rho0=rho0)

    def with_g(self, g: float) -> "CavityParams":
        return replace(self, g=g)

    def cooperativity(self) -> float:
        return cooperativity(self)


def cooperativity(params: CavityParams) -> float:
    return params.g ** 2 / (2 * params.kappa * params.gamma)


def g_for_cooperativity(c: float, kappa: float, gamma: float) -> float:
    if c <= 0:
        raise InvalidParamsError(f"Cooperativity must be positive, got {c!r}")
    return math.sqrt(2 * kappa * gamma * c)


def optimal_efficiency(c: float) -> float:
    """Asymptotic storage efficiency bound ``2C/(2C+1)``."""
    if c <= 0:
        raise InvalidParamsError(f"Cooperativity must be positive, got {c!r}")
    return 2 * c / (2 * c + 1)


# (g, kappa, gamma) = 2π × (15, 3, 3) MHz
DEFAULT_PARAMS_MHZ = (15.0, 3.0, 3.0)


def default_params(rho0: float = DEFAULT_RHO0) -> CavityParams:
    return CavityParams.from_mhz(*DEFAULT_PARAMS_MHZ, rho0=rho0)
