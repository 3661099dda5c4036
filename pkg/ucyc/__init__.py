"""
.. include:: ../README.md
"""

__version__ = "0.1.0"

from .core import OrderedAlphabet, Word, CyclicString
from .classes import ClassSpec, build_spec, enumerate_words, count, existence_claim
from .digraph import build
from .euler import generate
from .verify import verify
