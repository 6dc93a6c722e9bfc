"""charhilb: exact q,t-arithmetic for character variety partition functions,
Macdonald polynomials, Hilbert scheme modules, and SL2 trace identities."""

__version__ = "0.1.0"
