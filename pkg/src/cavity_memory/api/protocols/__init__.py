__all__ = [
    "PhotonWaveform",
    "Times",
]

from .waveform import PhotonWaveform, Times
