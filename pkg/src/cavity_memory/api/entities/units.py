"""
Unit conventions.

Rates are stored as angular frequencies (rad/s), times in seconds.
At the boundary a rate ``ν`` given in MHz means ``2π·ν·10⁶ rad/s``,
and times are given in microseconds.
"""
import math

MHZ = 2 * math.pi * 1e6
US = 1e-6


def mhz_to_rad(value: float) -> float:
    return value * MHZ


def rad_to_mhz(value: float) -> float:
    return value / MHZ


def us_to_s(value: float) -> float:
    return value * US


def s_to_us(value: float) -> float:
    return value / US
