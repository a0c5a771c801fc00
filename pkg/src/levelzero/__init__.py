"""Exact arithmetic for level-zero extremal weight modules of quantum affine algebras."""

from .cartan import AffineCartanDatum, datum, verify_coxeter_identity
from .crystal import LevelZeroFundamental, TensorProductCrystal, bijection_census, connected_component
from .qsymbolic import Laurent, MultiLaurentZ, PartitionTuple, RatFunc, macdonald_pair, schur_product
from .weyl import ConvexOrderSequence, ExtendedWeylElement, WeylWord, period_word

__all__ = [
    "AffineCartanDatum", "ConvexOrderSequence", "ExtendedWeylElement", "Laurent", "LevelZeroFundamental",
    "MultiLaurentZ", "PartitionTuple", "RatFunc", "TensorProductCrystal", "WeylWord", "bijection_census",
    "connected_component", "datum", "macdonald_pair", "period_word", "schur_product", "verify_coxeter_identity",
]
__version__ = "0.1.0"
