"""cwb: Turing machines, machine enumeration, dovetailing, primitive
recursion, Diophantine search and digits of pi."""

from cwb._core import *  # noqa: F401,F403
from cwb._core import __doc__  # noqa: F401

__version__ = "0.1.0"
