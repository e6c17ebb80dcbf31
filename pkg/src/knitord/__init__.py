"""Left orders on Zappa-Szep products, with ball-bounded exhaustive checks."""

from .amalgam import AmalgamH, HConeClass, HNormalForm, h_cone_class, h_exp, h_inv, h_mul, h_normalize, h_push, h_sign
from .braid import B3Element, BraidB3, StepLimitExceeded, b3_equal, b3_inv, b3_mul, b3_sign, certificate, flip, handle_reduce
from .instances import build_flip_parity_example, build_thm2_direct, build_thm2_shear, build_z_lex, get_instance
from .order import Comparison, ConeSign, OrderedGroup, OrderKind, compare_left, compare_right, convexity_violation
from .report import VerificationReport
from .words import SignedLetter, enumerate_ball, format_word, free_reduce, invert_word, parse_word
from .zappa_szep import MatchedPair, ZappaSzepGroup, ZSElement, thm1_right_sign, thm1_sign, thm2_sign, zs_inv, zs_mul

__version__ = "0.1.0"
