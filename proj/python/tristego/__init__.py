"""Keyed LSB steganography for lossless video (Y4M and PPM sequences)."""

from ._tristego import *  # noqa: F401,F403
from ._tristego import __version__  # noqa: F401
