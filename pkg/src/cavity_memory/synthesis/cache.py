from logging import getLogger
from typing import Any, Hashable, Optional

from cachetools import LRUCache

from cavity_memory.api.entities import CavityParams, ControlPulse, TimeGrid
from cavity_memory.api.protocols import PhotonWaveform
from .pulse import synthesize_control

logger = getLogger(__name__)


class PulseCache:
    """Memoizes synthesized pulses by mode function, parameters and grid."""

    cache: LRUCache[Any, Any]

    def __init__(self, maxsize: int = 256) -> None:
        self.cache = LRUCache(maxsize=maxsize)

    @staticmethod
    def _key(
            w: PhotonWaveform,
            p: CavityParams,
            grid: TimeGrid,
            omega_max: Optional[float],
    ) -> Hashable:
        return w.key, p, grid, omega_max

    def get_pulse(
            self,
            w: PhotonWaveform,
            p: CavityParams,
            grid: Optional[TimeGrid] = None,
            omega_max: Optional[float] = None,
    ) -> ControlPulse:
        if grid is None:
            grid = w.support
        key = self._key(w, p, grid, omega_max)
        try:
            pulse = self.cache.get(key)
        except TypeError:
            logger.warning("Waveform key is not hashable, skip cache: %s", w)
            return synthesize_control(w, p, grid, omega_max)
        if pulse is not None:
            logger.debug("Pulse cache hit for %s", w)
            return pulse
        pulse = synthesize_control(w, p, grid, omega_max)
        self.cache[key] = pulse
        return pulse

    def clear(self) -> None:
        self.cache.clear()


default_cache = PulseCache()


def synthesize_cached(
        w: PhotonWaveform,
        p: CavityParams,
        grid: Optional[TimeGrid] = None,
        omega_max: Optional[float] = None,
        cache: Optional[PulseCache] = None,
) -> ControlPulse:
    if cache is None:
        cache = default_cache
    return cache.get_pulse(w, p, grid, omega_max)
