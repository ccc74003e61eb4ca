from abc import abstractmethod
from typing import Hashable, Protocol, Union

import numpy as np

from cavity_memory.api.entities import TimeGrid

Times = Union[float, np.ndarray]


class PhotonWaveform(Protocol):
    """
    Real running-wave probability amplitude with finite support.

    Values are in s^(-1/2). Outside its support a waveform is zero.
    """

    @property
    @abstractmethod
    def support(self) -> TimeGrid:
        raise NotImplementedError

    @property
    @abstractmethod
    def key(self) -> Hashable:
        """Identity of the mode function, used for pulse caching."""
        raise NotImplementedError

    @abstractmethod
    def value(self, t: Times) -> Times:
        raise NotImplementedError

    @abstractmethod
    def d1(self, t: Times) -> Times:
        raise NotImplementedError

    @abstractmethod
    def d2(self, t: Times) -> Times:
        raise NotImplementedError

    @abstractmethod
    def scaled(self, factor: float) -> "PhotonWaveform":
        raise NotImplementedError

    @abstractmethod
    def shifted(self, offset: float) -> "PhotonWaveform":
        raise NotImplementedError
