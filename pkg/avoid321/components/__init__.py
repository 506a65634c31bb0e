"""Components for avoid321: combinatorial objects, generating functions and output."""

from avoid321.components.chain_renderer import ChainRenderer
from avoid321.components.dyck import DyckPath
from avoid321.components.formatter import OutputFormat, OutputFormatter
from avoid321.components.genfun import GenFunMethod
from avoid321.components.permutation import DescentSet, Permutation
from avoid321.components.polynomial import LaurentPoly, Monomial, Variable
from avoid321.components.report_logger import ReportLogger
from avoid321.components.tableaux import RectTableau, SYTPair, TwoRowTableau

__all__ = [
    "ChainRenderer",
    "DescentSet",
    "DyckPath",
    "GenFunMethod",
    "LaurentPoly",
    "Monomial",
    "OutputFormat",
    "OutputFormatter",
    "Permutation",
    "RectTableau",
    "ReportLogger",
    "SYTPair",
    "TwoRowTableau",
    "Variable",
]
